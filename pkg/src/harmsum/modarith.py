"""Modular integer arithmetic mod p and p^2.

Python integers are arbitrary precision, so products of residues mod p^2
never overflow regardless of how large p gets.
"""

from __future__ import annotations

from math import gcd

__all__ = [
    "Residue",
    "Prime",
    "NotInvertibleError",
    "DivisibilityError",
    "is_prime",
    "mod_inverse",
    "exact_div",
    "fermat_quotient",
    "harmonic_direct",
    "alternating_harmonic_direct",
]


class NotInvertibleError(ValueError):
    """Raised when an element has no inverse modulo m."""


class DivisibilityError(ArithmeticError):
    """Raised when a division that must be exact leaves a remainder."""


class Residue(int):
    """An integer in [0, modulus) that remembers its modulus.

    Behaves as a plain ``int`` in arithmetic and comparisons; the result of
    arithmetic is an ordinary ``int``.
    """

    def __new__(cls, value: int, modulus: int) -> "Residue":
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        obj = super().__new__(cls, value % modulus)
        obj.modulus = int(modulus)
        return obj

    def __repr__(self) -> str:
        return f"Residue({int(self)}, {self.modulus})"

    def __str__(self) -> str:
        return str(int(self))

    def __reduce__(self):
        return (Residue, (int(self), self.modulus))


# Deterministic Miller-Rabin: these bases are exact for n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime(int):
    """A validated prime, with its residue classes mod 9 and mod 18."""

    def __new__(cls, p: int) -> "Prime":
        if isinstance(p, Prime):
            return p
        if isinstance(p, bool) or int(p) != p:
            raise TypeError(f"expected an integer, got {p!r}")
        if not is_prime(int(p)):
            raise ValueError(f"{p} is not prime")
        return super().__new__(cls, p)

    @property
    def residue_mod_9(self) -> int:
        return int(self) % 9

    @property
    def residue_mod_18(self) -> int:
        return int(self) % 18

    def __repr__(self) -> str:
        return f"Prime({int(self)})"

    def __str__(self) -> str:
        return str(int(self))

    def __reduce__(self):
        return (Prime, (int(self),))


def mod_inverse(a: int, m: int) -> Residue:
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if gcd(a, m) != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {m}")
    return Residue(pow(a, -1, m), m)


def exact_div(a: int, d: int) -> int:
    """Return a // d, raising DivisibilityError if d does not divide a."""
    q, r = divmod(a, d)
    if r:
        raise DivisibilityError(f"{d} does not divide {a}")
    return q


def fermat_quotient(b: int, p: int) -> Residue:
    """q_p(b) = (b^(p-1) - 1)/p reduced mod p."""
    p = Prime(p)
    if b % p == 0:
        raise ValueError(f"p = {p} divides the base {b}")
    pp = p * p
    return Residue(exact_div(pow(b, p - 1, pp) - 1, p), p)


def harmonic_direct(lo: int, hi: int, p: int) -> Residue:
    """Sum of 1/j mod p over lo <= j <= hi, skipping multiples of p.

    An empty range (hi < lo) gives 0.
    """
    if lo < 1:
        raise ValueError(f"lower index must be >= 1, got {lo}")
    p = Prime(p)
    total = 0
    for j in range(lo, hi + 1):
        if j % p:
            total += pow(j, -1, p)
    return Residue(total, p)


def alternating_harmonic_direct(m: int, p: int) -> Residue:
    """Sum of (-1)^(j-1)/j mod p for 1 <= j <= m, skipping multiples of p."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    p = Prime(p)
    total = 0
    for j in range(1, m + 1):
        if j % p:
            inv = pow(j, -1, p)
            total += inv if j % 2 else -inv
    return Residue(total, p)
