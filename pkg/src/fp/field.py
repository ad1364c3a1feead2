"""
Exact arithmetic over the prime field F_p.

Holds the quadratic/cubic residue helpers used by catalog constraints and the
two conic lemmas: solution counts of x^2 + r y^2 = u and solvability of the
general conic x^2 + sxy + ry^2 + wx + vy + u = 0.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np
from sympy import isprime, mod_inverse
from sympy.functions.combinatorial.numbers import legendre_symbol
from sympy.ntheory import primitive_root, sqrt_mod

from src.fp.errors import (ConicInvariantError, ConicPreconditionError,
                           NotPrimeError, UnsupportedPrimeError)

MAX_PRIME = 97


@dataclass(frozen=True)
class PrimeField:
    """F_p for a prime 2 <= p <= 97."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 2 or not isprime(self.p):
            raise NotPrimeError(f"{self.p} is not a prime")
        if self.p > MAX_PRIME:
            raise UnsupportedPrimeError(f"p={self.p} exceeds {MAX_PRIME}")

    def reduce(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return int(mod_inverse(a % self.p, self.p))

    def units(self) -> List[int]:
        return list(range(1, self.p))

    def squares(self) -> List[int]:
        """(F_p^*)^2 in increasing order."""
        return sorted({(a * a) % self.p for a in range(1, self.p)})

    def cubes(self) -> List[int]:
        return sorted({pow(a, 3, self.p) for a in range(1, self.p)})

    def is_square(self, a: int) -> bool:
        """True for nonzero squares only."""
        return legendre(a, self) == 1

    @property
    def nonresidue(self) -> int:
        return smallest_nonresidue(self.p)

    @property
    def primitive_root(self) -> int:
        return smallest_primitive_root(self.p)


def legendre(a: int, F: PrimeField) -> int:
    p = F.p
    if a % p == 0:
        return 0
    if p == 2:
        return 1
    return int(legendre_symbol(a % p, p))


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    if p == 2:
        # every unit of F_2 is a square; the catalog never asks for one
        raise UnsupportedPrimeError("F_2 has no quadratic non-residue")
    for a in range(2, p):
        if int(legendre_symbol(a, p)) == -1:
            return a
    raise UnsupportedPrimeError(f"no non-residue found mod {p}")


@lru_cache(maxsize=None)
def smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    return int(primitive_root(p))


@lru_cache(maxsize=None)
def cubic_coset_representatives(p: int) -> List[int]:
    """Smallest element of each coset of (F_p^*)^3 in F_p^*."""
    cubes = {pow(a, 3, p) for a in range(1, p)}
    reps, covered = [], set()
    for a in range(1, p):
        if a in covered:
            continue
        reps.append(a)
        covered.update((a * c) % p for c in cubes)
    return reps


def count_conic_solutions(r: int, u: int, F: PrimeField) -> int:
    """|{(x, y) in F_p^2 : x^2 + r y^2 = u}| by exhaustion."""
    p = F.p
    if p == 2:
        raise UnsupportedPrimeError("conic counts are only defined for odd p")
    squares = (np.arange(p, dtype=np.int64) ** 2) % p
    lhs = (squares[:, None] + (r % p) * squares[None, :]) % p
    return int(np.count_nonzero(lhs == (u % p)))


def conic_lemma_count(r: int, u: int, F: PrimeField) -> int:
    """Solution count predicted for u != 0 from whether -r is a square."""
    return F.p - 1 if F.is_square(-r) else F.p + 1


def _general_conic_value(x, y, s, r, w, v, u, p):
    return (x * x + s * x * y + r * y * y + w * x + v * y + u) % p


def solve_general_conic(s: int, r: int, w: int, v: int, u: int,
                        F: PrimeField) -> Tuple[int, int]:
    """One solution of x^2 + sxy + ry^2 + wx + vy + u = 0 over F_p."""
    p = F.p
    if p == 2:
        raise UnsupportedPrimeError("the general conic needs an odd prime")
    if (s * s - 4 * r) % p == 0:
        raise ConicPreconditionError(f"s^2-4r = 0 mod {p} for s={s}, r={r}")

    solution = _complete_the_square(s, r, w, v, u, F)
    if solution is None or _general_conic_value(*solution, s, r, w, v, u, p) != 0:
        solution = _exhaustive_conic(s, r, w, v, u, p)
    if solution is None:
        raise ConicInvariantError(f"no solution for (s,r,w,v,u)=({s},{r},{w},{v},{u}) mod {p}")
    return solution


def _complete_the_square(s, r, w, v, u, F):
    p = F.p
    half, quarter = F.inv(2), F.inv(4)
    r1 = (r - quarter * s * s) % p
    v1 = (v - half * w * s) % p
    r1_inv = F.inv(r1)
    u2 = (u - quarter * w * w - quarter * r1_inv * v1 * v1) % p
    # x2^2 + r1 y2^2 + u2 = 0
    for b in range(p):
        target = (-u2 - r1 * b * b) % p
        if target == 0:
            a = 0
        elif legendre(target, F) == 1:
            a = int(sqrt_mod(target, p))
        else:
            continue
        y = (b - half * r1_inv * v1) % p
        x = (a - half * w - half * s * b + quarter * s * r1_inv * v1) % p
        return int(x), int(y)
    return None


def _exhaustive_conic(s, r, w, v, u, p):
    grid = np.arange(p, dtype=np.int64)
    x, y = np.meshgrid(grid, grid, indexing="ij")
    hits = np.argwhere(_general_conic_value(x, y, s, r, w, v, u, p) == 0)
    if len(hits) == 0:
        return None
    return int(hits[0][0]), int(hits[0][1])


def smallest_conic_point(r: int, nu: int, F: PrimeField) -> Tuple[int, int]:
    """Least positive (m, n), m first, with (m-1)^2 - nu^-1 (n+nu)^2 = r over F_p."""
    p = F.p
    nu_inv = F.inv(nu)
    for m in range(1, p + 1):
        for n in range(1, p + 1):
            if ((m - 1) ** 2 - nu_inv * (n + nu) ** 2 - r) % p == 0:
                return m, n
    raise ConicInvariantError(f"no point with r={r}, nu={nu} mod {p}")
