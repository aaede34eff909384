"""The block sums s(k, N) mod p, evaluated directly and from components.

s(k, N) is the sum of 1/j over floor(kp/N) < j <= floor((k+1)p/N), j != p.
For N in {9, 18} it is a fixed linear combination of q_p(2), q_p(3), X(p) and
Z(p); for N in {3, 6} only the Fermat quotients appear. Only the rows with
k < N/2 are stored, the rest follow from s(k, N) = -s(N-1-k, N).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .modarith import Prime, Residue, fermat_quotient, harmonic_direct
from .quotients import ComponentValues, _components

__all__ = [
    "SumSpec",
    "ComponentVector",
    "COMPONENT_TABLE",
    "SMALL_TABLE",
    "component_row",
    "s_direct",
    "s_components",
    "s_small",
    "RelationReport",
    "verify_relations",
    "check_oracle_equivalence",
]


@dataclass(frozen=True, order=True)
class SumSpec:
    k: int
    N: int

    def __post_init__(self):
        if self.N < 2:
            raise ValueError(f"N must be >= 2, got {self.N}")
        if not 0 <= self.k < self.N:
            raise ValueError(f"k must lie in [0, {self.N - 1}], got {self.k}")

    @property
    def mirror(self) -> "SumSpec":
        return SumSpec(self.N - 1 - self.k, self.N)

    def __str__(self) -> str:
        return f"s({self.k},{self.N})"


class ComponentVector(NamedTuple):
    q2: Fraction
    q3: Fraction
    x: Fraction
    z: Fraction

    def __neg__(self) -> "ComponentVector":
        return ComponentVector(*(-c for c in self))

    def resolve(self, values: ComponentValues) -> Residue:
        p = values.p
        total = 0
        for c, v in zip(self, (values.q2, values.q3, values.x, values.z)):
            total += c.numerator * pow(c.denominator, -1, p) * v
        return Residue(total, p)


def _row(q2, q3, x, z) -> ComponentVector:
    return ComponentVector(*(Fraction(c) for c in (q2, q3, x, z)))


_H = Fraction(3, 2)

COMPONENT_TABLE: dict[int, tuple[ComponentVector, ...]] = {
    9: (
        _row(0, -_H, 1, 0),
        _row(0, -3, -3, -1),
        _row(0, 3, 2, 1),
        _row(0, 0, 1, 1),
        _row(0, 0, 0, 0),
    ),
    18: (
        _row(-2, -_H, 1, -1),
        _row(2, 0, 0, 1),
        _row(-2, 0, -1, 0),
        _row(2, -3, -2, -1),
        _row(-2, 6, 6, 4),
        _row(2, -3, -4, -3),
        _row(-2, -6, -5, -2),
        _row(2, 6, 6, 3),
        _row(-2, _H, -1, -1),
    ),
}

# Glaisher for N = 3, Lehmer for N = 6.
SMALL_TABLE: dict[int, tuple[ComponentVector, ...]] = {
    3: (
        _row(0, -_H, 0, 0),
        _row(0, 0, 0, 0),
    ),
    6: (
        _row(-2, -_H, 0, 0),
        _row(2, 0, 0, 0),
        _row(-2, _H, 0, 0),
    ),
}


def component_row(spec: SumSpec, table: dict[int, tuple[ComponentVector, ...]] | None = None) -> ComponentVector:
    """Coefficient row for s(k, N); rows past the stored half are mirrored."""
    if table is None:
        table = COMPONENT_TABLE if spec.N in COMPONENT_TABLE else SMALL_TABLE
    if spec.N not in table:
        raise ValueError(f"no component formula for N = {spec.N}")
    rows = table[spec.N]
    if spec.k < len(rows):
        return rows[spec.k]
    return -rows[spec.mirror.k]


def s_direct(spec: SumSpec, p: int) -> Residue:
    lo = spec.k * p // spec.N + 1
    hi = (spec.k + 1) * p // spec.N
    return harmonic_direct(lo, hi, p)


def s_components(spec: SumSpec, p: int, values: ComponentValues | None = None) -> Residue:
    """s(k, N) mod p for N in {9, 18} from q_p(2), q_p(3), X(p), Z(p)."""
    if spec.N not in COMPONENT_TABLE:
        raise ValueError(f"component formulas cover N = 9, 18 only, got N = {spec.N}")
    p = Prime(p)
    if p <= spec.N:
        raise ValueError(f"component formula for N = {spec.N} needs p > N, got p = {p}")
    if values is None:
        values = _components(p)
    elif values.p != p:
        raise ValueError(f"component values are for p = {values.p}, not {p}")
    return component_row(spec, COMPONENT_TABLE).resolve(values)


def s_small(spec: SumSpec, p: int) -> Residue:
    """s(k, 3) and s(k, 6) mod p from the Fermat quotients alone."""
    if spec.N not in SMALL_TABLE:
        raise ValueError(f"closed forms cover N = 3, 6 only, got N = {spec.N}")
    p = Prime(p)
    if p <= spec.N:
        raise ValueError(f"closed form for N = {spec.N} needs p > N, got p = {p}")
    row = component_row(spec, SMALL_TABLE)
    q2, q3 = fermat_quotient(2, p), fermat_quotient(3, p)
    zero = Residue(0, p)
    return row.resolve(ComponentValues(int(p), q2, q3, zero, zero))


@dataclass
class RelationReport:
    p: int
    results: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, passed in self.results.items() if not passed]


def verify_relations(p: int) -> RelationReport:
    """Check the linear relations among the s(k, N) by direct summation."""
    p = Prime(p)
    if p <= 18:
        raise ValueError(f"relations involve N = 18 and need p > 18, got {p}")
    inv2 = pow(2, -1, p)
    q2, q3 = fermat_quotient(2, p), fermat_quotient(3, p)
    s = {N: [s_direct(SumSpec(k, N), p) for k in range(N)] for N in (3, 6, 9, 18)}
    t = s[18]
    report = RelationReport(int(p))
    r = report.results

    def cong(a: int, b: int) -> bool:
        return (a - b) % p == 0

    r["even blocks of 18 = -10 q2"] = cong(t[0] + t[2] + t[4] + t[6] + t[8], -10 * q2)
    r["odd blocks of 18 = 8 q2"] = cong(t[1] + t[3] + t[5] + t[7], 8 * q2)
    r["s(0,18) + 2 s(1,18) + s(8,18) = 0"] = cong(t[0] + 2 * t[1] + t[8], 0)
    lehmer = (
        -2 * q2 - 3 * inv2 * q3,
        2 * q2,
        -2 * q2 + 3 * inv2 * q3,
    )
    for i, rhs in enumerate(lehmer):
        triple = t[3 * i] + t[3 * i + 1] + t[3 * i + 2]
        r[f"s({i},6) = sum of three blocks of 18"] = cong(triple, s[6][i])
        r[f"s({i},6) Lehmer closed form"] = cong(s[6][i], rhs)
    r["s(0,3) Glaisher closed form"] = cong(s[3][0], -3 * inv2 * q3)
    for N in (9, 18):
        for k in range(N):
            r[f"symmetry s({k},{N})"] = cong(s[N][k], -s[N][N - 1 - k])
        r[f"sum over k of s(k,{N}) = 0"] = cong(sum(s[N]), 0)
    return report


def check_oracle_equivalence(p: int) -> RelationReport:
    """Component and closed-form evaluations against direct sums, all (k, N)."""
    p = Prime(p)
    if p <= 18:
        raise ValueError(f"needs p > 18, got {p}")
    values = _components(p)
    report = RelationReport(int(p))
    for N in (3, 6, 9, 18):
        for k in range(N):
            spec = SumSpec(k, N)
            fast = s_components(spec, p, values) if N in COMPONENT_TABLE else s_small(spec, p)
            report.results[f"{spec} components"] = fast == s_direct(spec, p)
    return report
