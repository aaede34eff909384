"""Constant-coefficient linear recurrences and the sequence catalog.

A recurrence of order d and stride s is

    a(n) = c_1 a(n - s) + c_2 a(n - 2s) + ... + c_d a(n - d s),

with the d*s initial terms a(1), ..., a(d*s) given. Stride 1 is the ordinary
case; larger strides describe lacunary forms such as the 72-step kappa
recurrence, which decompose into s independent order-d subsequences.

Terms are 1-indexed throughout to match the published tables.
"""

from __future__ import annotations

from dataclasses import dataclass

from .modarith import Residue, exact_div

__all__ = [
    "RecurrenceSpec",
    "eval_exact",
    "terms_exact",
    "eval_mod",
    "terms_mod",
    "companion_matrix",
    "matrix_power_mod",
    "g_from_f",
    "j_decompose_g",
    "multisection_block",
    "h_spec",
    "F_SPEC",
    "G_SPEC",
    "J_SPEC",
    "KAPPA_SPEC",
    "H_COEFFS",
    "F_MULTISECTION_SPEC",
    "KAPPA_LACUNARY_SPEC",
    "KAPPA_MULTISECTION_COEFFS",
    "CATALOG",
]


@dataclass(frozen=True)
class RecurrenceSpec:
    name: str
    coeffs: tuple[int, ...]
    initials: tuple[int, ...]
    step: int = 1

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "initials", tuple(int(a) for a in self.initials))
        if not self.coeffs:
            raise ValueError("a recurrence needs at least one coefficient")
        if self.step < 1:
            raise ValueError(f"step must be >= 1, got {self.step}")
        if len(self.initials) != self.order * self.step:
            raise ValueError(
                f"{self.name}: expected {self.order * self.step} initial terms, "
                f"got {len(self.initials)}"
            )

    @property
    def order(self) -> int:
        return len(self.coeffs)


def terms_exact(spec: RecurrenceSpec, count: int) -> list[int]:
    """The first ``count`` terms a(1), ..., a(count) as exact integers."""
    a = list(spec.initials[:count])
    s = spec.step
    while len(a) < count:
        n = len(a)  # 0-based index of the term being built
        a.append(sum(c * a[n - i * s] for i, c in enumerate(spec.coeffs, 1)))
    return a


def eval_exact(spec: RecurrenceSpec, n: int) -> int:
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    return terms_exact(spec, n)[-1]


# --- modular evaluation -----------------------------------------------------

def _subsequence(spec: RecurrenceSpec, n: int) -> tuple[tuple[int, ...], int]:
    """Initial terms of the stride class containing n, and n's 0-based
    position within that class."""
    s = spec.step
    r = (n - 1) % s
    return spec.initials[r::s], (n - 1) // s


def _xpow(k: int, coeffs: tuple[int, ...], m: int) -> list[int]:
    """x^k modulo the characteristic polynomial and m, as a coefficient list.

    With x^k = sum r_i x^i, the recurrence satisfies b(k) = sum r_i b(i) for
    any order-d subsequence b indexed from 0.
    """
    d = len(coeffs)
    r = [1 % m] + [0] * (d - 1)
    for bit in bin(k)[2:]:
        prod = [0] * (2 * d - 1)
        for i, ri in enumerate(r):
            if ri:
                for j, rj in enumerate(r):
                    prod[i + j] += ri * rj
        for deg in range(2 * d - 2, d - 1, -1):
            t = prod[deg] % m
            if t:
                base = deg - d
                for i, c in enumerate(coeffs, 1):
                    prod[base + d - i] += t * c
        r = [x % m for x in prod[:d]]
        if bit == "1":
            r = _times_x(r, coeffs, m)
    return r


def _times_x(r: list[int], coeffs: tuple[int, ...], m: int) -> list[int]:
    d = len(coeffs)
    top = r[-1]
    out = [0] + r[:-1]
    if top:
        for i, c in enumerate(coeffs, 1):
            out[d - i] = (out[d - i] + top * c) % m
    return out


def companion_matrix(coeffs: tuple[int, ...]) -> list[list[int]]:
    """Companion matrix acting on state (b(t), b(t-1), ..., b(t-d+1))."""
    d = len(coeffs)
    rows = [list(coeffs)]
    for i in range(1, d):
        row = [0] * d
        row[i - 1] = 1
        rows.append(row)
    return rows


def _matmul(a: list[list[int]], b: list[list[int]], m: int) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % m for col in cols] for row in a]


def matrix_power_mod(mat: list[list[int]], e: int, m: int) -> list[list[int]]:
    d = len(mat)
    result = [[int(i == j) % m for j in range(d)] for i in range(d)]
    base = [[x % m for x in row] for row in mat]
    while e:
        if e & 1:
            result = _matmul(result, base, m)
        base = _matmul(base, base, m)
        e >>= 1
    return result


def eval_mod(spec: RecurrenceSpec, n: int, m: int, method: str = "poly") -> Residue:
    """a(n) mod m in O(log n) steps.

    ``method="matrix"`` powers the companion matrix (O(d^3) per step);
    ``method="poly"`` reduces x^n modulo the characteristic polynomial, which
    computes the same first row of the matrix power in O(d^2) per step.
    """
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    init, t = _subsequence(spec, n)
    d = spec.order
    if t < d:
        return Residue(init[t], m)
    if method == "poly":
        r = _xpow(t, spec.coeffs, m)
        return Residue(sum(ri * bi for ri, bi in zip(r, init)), m)
    if method == "matrix":
        power = matrix_power_mod(companion_matrix(spec.coeffs), t - d + 1, m)
        state = init[::-1]
        return Residue(sum(x * y for x, y in zip(power[0], state)), m)
    raise ValueError(f"unknown method {method!r}")


def terms_mod(spec: RecurrenceSpec, n: int, count: int, m: int) -> list[Residue]:
    """a(n), a(n+1), ..., a(n+count-1) reduced mod m."""
    if spec.step != 1:
        return [eval_mod(spec, i, m) for i in range(n, n + count)]
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    r = _xpow(n - 1, spec.coeffs, m)
    out = []
    for _ in range(count):
        out.append(Residue(sum(ri * bi for ri, bi in zip(r, spec.initials)), m))
        r = _times_x(r, spec.coeffs, m)
    return out


# --- the catalog ------------------------------------------------------------

F_SPEC = RecurrenceSpec(
    "f",
    (8, -29, 62, -86, 80, -50, 20, -5, 1),
    (0, -2, -6, -14, -30, -62, -126, -254, -501),
)
G_SPEC = RecurrenceSpec(
    "g",
    (6, -15, 20, -18, 18, -20, 12, -3, 1),
    (0, 0, 0, -4, -10, -20, -42, -84, -165),
)
# j(n) = 3 j(n-2) - j(n-3), applied from n = 4 on.
J_SPEC = RecurrenceSpec("j", (0, 3, -1), (0, 2, -1))
# Undivided sequence; the published table lists kappa(n)/3.
KAPPA_SPEC = RecurrenceSpec(
    "kappa",
    (7, -21, 36, -39, 27, -12, 3),
    (0, 0, -3, -12, -30, -57, -84),
)

# Shared by the four two-class multisections of g.
H_COEFFS = (1, -246, 246, 13605, -13605, -1, 1)

# Each residue class of f mod 9, one stride-9 recurrence.
F_MULTISECTION_SPEC = RecurrenceSpec(
    "f_multisection",
    (-246, 13606, 245, -13605, 1),
    terms_exact(F_SPEC, 45),
    step=9,
)

# Residue classes of kappa mod 18. The last coefficient is +19683; the
# -19683 variant does not reproduce kappa.
KAPPA_MULTISECTION_COEFFS = (-199097, -18108279, 18287694, 19683)
KAPPA_LACUNARY_SPEC = RecurrenceSpec(
    "kappa_lacunary",
    KAPPA_MULTISECTION_COEFFS,
    terms_exact(KAPPA_SPEC, 72),
    step=18,
)

CATALOG = {
    spec.name: spec
    for spec in (F_SPEC, G_SPEC, J_SPEC, KAPPA_SPEC, F_MULTISECTION_SPEC, KAPPA_LACUNARY_SPEC)
}


def g_from_f(n: int, f_n: int) -> int:
    """Shift f(n) by 2 (n even) or 6 (n = 3 mod 6) and divide by 3."""
    if n < 1:
        raise ValueError(f"index must be >= 1, got {n}")
    if n % 2 == 0:
        delta = 2
    elif n % 6 == 3:
        delta = 6
    else:
        delta = 0
    return exact_div(f_n + delta, 3)


def j_decompose_g(n: int) -> int:
    """g(n) rebuilt from j(n-1), j(n), j(n+1) by the five-way case split on n mod 9."""
    if n < 2:
        raise ValueError(f"index must be >= 2, got {n}")
    j_prev, j_n, j_next = terms_exact(J_SPEC, n + 1)[n - 2:]
    r = n % 9
    if r == 0:
        return 2 * j_n - 1
    if r in (1, 8):
        return j_next - 2
    if r in (2, 7):
        return j_n - j_prev - 2
    if r in (3, 6):
        return -j_n - 1
    return -j_next - j_n + j_prev - 2


def _block_index(cls: int, m: int) -> int:
    # m = 2*floor(n/9) + 1 for n = +cls, m = 2*floor(n/9) + 2 for n = -cls (mod 9)
    if m % 2:
        return 9 * (m - 1) // 2 + cls
    return 9 * m // 2 - cls


def multisection_block(cls: int, count: int) -> list[int]:
    """First ``count`` terms of g over n = +-cls (mod 9), interleaved."""
    if cls not in (1, 2, 3, 4):
        raise ValueError(f"class must be one of 1, 2, 3, 4 (meaning +-cls mod 9), got {cls}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    idx = [_block_index(cls, m) for m in range(1, count + 1)]
    g = terms_exact(G_SPEC, max(idx))
    return [g[n - 1] for n in idx]


def h_spec(cls: int) -> RecurrenceSpec:
    """The seventh-order recurrence for the +-cls multisection of g."""
    return RecurrenceSpec(f"h{cls}", H_COEFFS, multisection_block(cls, 7))
