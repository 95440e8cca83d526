"""Arithmetic in the prime field F_p."""
from functools import lru_cache
from typing import Union

from app.core.config import get_settings
from app.core.errors import InvalidInput, NotPrime, ZeroInverse

# Miller-Rabin with these bases is exact for every n < 3_215_031_751
_WITNESSES = (2, 3, 5, 7)


@lru_cache(maxsize=256)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def check_modulus(p: int) -> int:
    """Validate a modulus: a prime below ``MAX_PRIME``."""
    if not isinstance(p, int) or isinstance(p, bool):
        raise InvalidInput(f"modulus must be an integer, got {p!r}")
    limit = get_settings().MAX_PRIME
    if p >= limit:
        raise InvalidInput(f"modulus {p} must be below {limit}")
    if not is_prime(p):
        raise NotPrime(f"modulus {p} is not prime")
    return p


class FpScalar:
    """An element of F_p stored as its residue in [0, p)."""

    __slots__ = ("value", "modulus")

    def __init__(self, value: int, modulus: int):
        check_modulus(modulus)
        self.value = value % modulus
        self.modulus = modulus

    def _coerce(self, other: Union["FpScalar", int]) -> int:
        if isinstance(other, FpScalar):
            if other.modulus != self.modulus:
                raise InvalidInput(f"cannot mix F_{self.modulus} and F_{other.modulus}")
            return other.value
        return int(other)

    def _make(self, value: int) -> "FpScalar":
        out = object.__new__(FpScalar)
        out.value = value % self.modulus
        out.modulus = self.modulus
        return out

    def __add__(self, other):
        return self._make(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return self._make(self.value - self._coerce(other))

    def __rsub__(self, other):
        return self._make(self._coerce(other) - self.value)

    def __mul__(self, other):
        return self._make(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return self._make(-self.value)

    def __truediv__(self, other):
        if not isinstance(other, FpScalar):
            other = FpScalar(int(other), self.modulus)
        return self * fp_inverse(other)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.modulus))

    def __int__(self):
        return self.value

    __index__ = __int__

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"FpScalar({self.value}, p={self.modulus})"


def fp_inverse(x: FpScalar) -> FpScalar:
    """Multiplicative inverse in F_p."""
    if x.value == 0:
        raise ZeroInverse(f"0 has no inverse in F_{x.modulus}")
    return x._make(pow(x.value, -1, x.modulus))


def inverse_mod(value: int, p: int) -> int:
    """Residue-level inverse used inside the elimination loops."""
    value %= p
    if value == 0:
        raise ZeroInverse(f"0 has no inverse in F_{p}")
    return pow(value, -1, p)
