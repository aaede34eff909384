"""Lacunary binomial sums T(N, m) and the mod p^2 congruences they pin down."""

from __future__ import annotations

from dataclasses import dataclass

from .modarith import Prime, Residue
from .recurrence import F_SPEC, KAPPA_SPEC, eval_mod

__all__ = ["LacunarySumQuery", "t_sum", "CongruenceCheck", "check_f_congruence", "check_kappa_congruence"]


@dataclass(frozen=True)
class LacunarySumQuery:
    N: int
    m: int
    modulus: int
    residue: int = 0  # sum over j = residue (mod N); T(N, m) itself is class 0

    def __post_init__(self):
        if self.N < 1 or self.m < 0:
            raise ValueError(f"need N >= 1 and m >= 0, got N={self.N}, m={self.m}")
        if not 0 <= self.residue < self.N:
            raise ValueError(f"residue must lie in [0, {self.N - 1}], got {self.residue}")
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")


def _binomial_row(m: int):
    # Exact integers: binom(m, j+1) = binom(m, j) (m - j) / (j + 1) divides
    # exactly, which is what makes reduction mod a composite p^2 safe afterwards.
    c = 1
    for j in range(m + 1):
        yield c
        c = c * (m - j) // (j + 1)


def t_sum(q: LacunarySumQuery) -> Residue:
    """Sum of binom(m, j) over 0 <= j <= m with j = q.residue (mod N), reduced mod q.modulus."""
    total = sum(c for j, c in enumerate(_binomial_row(q.m)) if j % q.N == q.residue)
    return Residue(total, q.modulus)


def _t(N: int, p: int) -> int:
    return t_sum(LacunarySumQuery(N, p, p * p))


@dataclass(frozen=True)
class CongruenceCheck:
    p: int
    recurrence_value: int
    closed_form_value: int

    @property
    def ok(self) -> bool:
        return self.recurrence_value == self.closed_form_value

    def __bool__(self) -> bool:
        return self.ok


def check_f_congruence(p: int) -> CongruenceCheck:
    """f(p) against 9 T(9, p) - 2 T(2, p) - 7, mod p^2."""
    p = Prime(p)
    if p < 5:
        raise ValueError(f"p must be >= 5, got {p}")
    pp = p * p
    closed = (9 * _t(9, p) - 2 * _t(2, p) - 7) % pp
    return CongruenceCheck(int(p), int(eval_mod(F_SPEC, p, pp)), closed)


def check_kappa_congruence(p: int) -> CongruenceCheck:
    """kappa(p) against 3 (-6 T(18, p) + 3 T(9, p) + 2 T(6, p) - T(3, p) + 2), mod p^2."""
    p = Prime(p)
    if p < 5:
        raise ValueError(f"p must be >= 5, got {p}")
    pp = p * p
    closed = 3 * (-6 * _t(18, p) + 3 * _t(9, p) + 2 * _t(6, p) - _t(3, p) + 2) % pp
    return CongruenceCheck(int(p), int(eval_mod(KAPPA_SPEC, p, pp)), closed)
