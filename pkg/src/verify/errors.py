"""
Exceptions raised by the verification harness. Claim mismatches are never
exceptions; these are infrastructure problems only.
"""


class VerificationError(Exception):
    """Base class for harness failures."""


class UnknownClaim(VerificationError):
    def __init__(self, name):
        super().__init__(f"no computation for claim '{name}'")
        self.name = name

