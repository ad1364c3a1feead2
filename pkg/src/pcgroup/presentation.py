from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from src.pcgroup.words import format_word


class ConsistencyStatus(Enum):
    UNCHECKED = "Unchecked"
    VERIFIED = "Verified"
    FAILED = "Failed"


@dataclass
class PcPresentation:
    """Executable presentation: a tower of cyclic levels over a prime.

    ``names[i]`` has relative order ``prime ** exponents[i]``; a level of
    exponent e refines to the pc chain x, x^p, ..., x^(p^(e-1)).
    ``powers[i]`` is the word x_i^(p^e_i) equals and ``conjugates[(j, i)]`` the
    word for x_j^(x_i), j > i; both only mention levels below i. Missing
    conjugates mean the two levels commute, except for levels listed in
    ``defines`` (level -> (source level, exponent)), which stand for a power
    of a higher generator and are conjugated through it.
    """
    prime: int
    names: List[str]
    exponents: List[int]
    powers: List[object]
    conjugates: Dict[Tuple[int, int], object] = field(default_factory=dict)
    defines: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    relations: List[str] = field(default_factory=list)
    status: ConsistencyStatus = ConsistencyStatus.UNCHECKED
    group: Optional[object] = field(default=None, repr=False, compare=False)

    @property
    def pc_length(self):
        return sum(self.exponents)

    @property
    def order(self):
        return self.prime ** self.pc_length

    def describe(self):
        lines = []
        for i, name in enumerate(self.names):
            lines.append(f"{name}^{self.prime ** self.exponents[i]} = {format_word(self.powers[i])}")
        for (j, i), node in sorted(self.conjugates.items()):
            lines.append(f"{self.names[j]}^{self.names[i]} = {format_word(node)}")
        return lines
