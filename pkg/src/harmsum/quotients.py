"""The arithmetic components X(p) and Z(p) alongside q_p(2) and q_p(3).

Both are quotients of a Fermat sequence by p: the sequence is evaluated
mod p^2 by recurrence, the residue is divided exactly by p and reduced mod p.
X comes from kappa (order 7); Z comes from j (order 3) through the case
split on p mod 9, which equals f(p)/p but is cheaper to evaluate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modarith import Prime, Residue, exact_div, fermat_quotient
from .recurrence import J_SPEC, KAPPA_SPEC, eval_mod, terms_mod

__all__ = ["ComponentValues", "x_of", "z_of", "component_values"]


@dataclass(frozen=True)
class ComponentValues:
    p: int
    q2: Residue
    q3: Residue
    x: Residue
    z: Residue

    def __post_init__(self):
        for name in ("q2", "q3", "x", "z"):
            if getattr(self, name).modulus != self.p:
                raise ValueError(f"{name} is not reduced mod {self.p}")


def x_of(p: int) -> Residue:
    p = Prime(p)
    pp = p * p
    return Residue(exact_div(eval_mod(KAPPA_SPEC, p, pp), p), p)


def z_of(p: int) -> Residue:
    p = Prime(p)
    if p < 5:
        raise ValueError(f"Z(p) needs p >= 5, got {p}")
    pp = p * p
    j_prev, j_p, j_next = terms_mod(J_SPEC, p - 1, 3, pp)
    r = p % 9
    if r in (1, 8):
        expr = j_next - 2
    elif r in (2, 7):
        expr = j_p - j_prev - 2
    else:  # 4, 5; primes >= 5 never fall in 0 or +-3
        expr = -j_next - j_p + j_prev - 2
    return Residue(exact_div(3 * expr % pp, p), p)


def _components(p: int) -> ComponentValues:
    # No p > 18 guard: the search evaluates components down to p = 5.
    return ComponentValues(int(p), fermat_quotient(2, p), fermat_quotient(3, p), x_of(p), z_of(p))


def component_values(p: int) -> ComponentValues:
    """q_p(2), q_p(3), X(p), Z(p) for one prime p > 18."""
    p = Prime(p)
    if p <= 18:
        raise ValueError(f"component bundle needs p > 18, got {p}")
    return _components(p)
