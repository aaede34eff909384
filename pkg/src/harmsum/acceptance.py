"""Acceptance checks, shared by the test suite and ``harmsum selftest``.

Each check returns a CriterionResult; a check passes only if its condition
holds exactly and it finishes inside its time budget.
"""

from __future__ import annotations

import os
import tempfile
import time
from collections import defaultdict
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .lacunary import check_f_congruence, check_kappa_congruence
from .modarith import fermat_quotient
from .quotients import x_of, z_of
from .recurrence import (
    F_SPEC,
    G_SPEC,
    J_SPEC,
    KAPPA_SPEC,
    eval_mod,
    g_from_f,
    j_decompose_g,
    multisection_block,
    terms_exact,
)
from .search import _small_primes, overlap_report, scan
from .sums import check_oracle_equivalence, verify_relations

# Published values.
TABLE_F = [
    0, -2, -6, -14, -30, -62, -126, -254, -501, -932, -1551, -2114,
    -1755, 1636, 12279, 37426, 87720, 175447, 307287, 464776, 560190, 348313, -731055, -3798314,
    -10841355, -24927437, -49854867, -88165112, -135356601, -166501907, -109482111, 202204690,
    1101562302, 3176261536, 7325660004, 14651320015,
]
TABLE_KAPPA_THIRDS = [
    0, 0, -1, -4, -10, -19, -28, -28, 2, 110, 407, 1145,
    2873, 6734, 15014, 32132, 66368, 132734, 257393, 483626, 877799, 1529363, 2527769, 3873017,
    5218265, 5218265, 2, -20242870, -78528607, -226111984, -572533513, -1343905180,
    -2992450957, -6395344954, -13201132948, -26402265898,
]
G_LEADING = [0, 0, 0, -4, -10, -20, -42, -84, -165, -310, -517, -704]
MULTISECTION_BLOCKS = {
    1: [0, -84, -310, 29240, 102429, -8309145, -29388370],
    2: [0, -42, -517, 12476, 154926, -3613785, -45118867],
    3: [0, -20, -704, 4095, 186732, -1266104, -55500635],
    4: [-4, -10, -585, 546, 116105, -243685, -36494037],
}

SEARCH_BOUND = 250_000
EXPECTED_ZEROS = {
    "sum:0/9": [677, 6691],
    "sum:1/9": [151, 457, 971, 1439, 12613],
    "sum:2/9": [241, 739, 37799],
    "sum:3/9": [97, 58193],
    "sum:0/18": [],
    "sum:1/18": [47, 1777, 217337],
    "sum:2/18": [167],
    "sum:3/18": [1171, 37783],
    "sum:4/18": [137, 251, 1087, 1301, 2111, 5749],
    "sum:5/18": [4177],
    "sum:6/18": [108541],
    "sum:7/18": [149, 35267],
    "sum:8/18": [],
    "X": [2, 13, 19, 2423],
    "Z": [179, 1949],
}
EXTENDED_BOUND = 30_000_000
EXTENDED_ZEROS = {"Z": 28885849, "sum:3/18": 28525219}


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"[{status}] {self.number:>2} {self.title}: {self.detail} "
            f"({self.seconds:.2f} s, budget {self.budget:.3g} s)"
        )


def _primes(lo: int, hi: int) -> list[int]:
    return [int(p) for p in _small_primes(hi) if p >= lo]


def _timed(number: int, title: str, budget: float, body: Callable[[], tuple[bool, str]]) -> CriterionResult:
    t0 = time.perf_counter()
    ok, detail = body()
    elapsed = time.perf_counter() - t0
    if ok and elapsed > budget:
        ok, detail = False, f"{detail}; over time budget"
    return CriterionResult(number, title, ok, detail, elapsed, budget)


def criterion_1() -> CriterionResult:
    def body():
        bad = []
        if terms_exact(F_SPEC, 36) != TABLE_F:
            bad.append("f")
        if [k // 3 for k in terms_exact(KAPPA_SPEC, 36)] != TABLE_KAPPA_THIRDS or any(
            k % 3 for k in terms_exact(KAPPA_SPEC, 36)
        ):
            bad.append("kappa")
        if terms_exact(G_SPEC, 12) != G_LEADING:
            bad.append("g")
        for cls, block in MULTISECTION_BLOCKS.items():
            if multisection_block(cls, 7) != block:
                bad.append(f"block +-{cls}")
        return not bad, "all values match" if not bad else f"mismatch in {', '.join(bad)}"

    return _timed(1, "table reproduction", 1.0, body)


def criterion_2() -> CriterionResult:
    def body():
        f = terms_exact(F_SPEC, 5000)
        g = terms_exact(G_SPEC, 5000)
        bad = [n for n in range(2, 201) if g_from_f(n, f[n - 1]) != g[n - 1] or j_decompose_g(n) != g[n - 1]]
        bad += [p for p in _primes(5, 5000) if 3 * g[p - 1] != f[p - 1]]
        return not bad, "g = (f + shift)/3 = j-decomposition; 3 g(p) = f(p)" if not bad else f"fails at {bad[:5]}"

    return _timed(2, "transformation chain", 5.0, body)


def criterion_3() -> CriterionResult:
    def body():
        bad = [
            (spec.name, p)
            for p in _primes(5, 5000)
            for spec in (F_SPEC, KAPPA_SPEC, J_SPEC)
            if eval_mod(spec, p, p) != 0
        ]
        return not bad, "f, kappa, j vanish mod p at all primes 5..5000" if not bad else f"fails at {bad[:5]}"

    return _timed(3, "Fermat-sequence divisibility", 5.0, body)


def criterion_4() -> CriterionResult:
    def body():
        bad = [p for p in _primes(5, 499) if not (check_f_congruence(p) and check_kappa_congruence(p))]
        return not bad, "both T-sum congruences hold mod p^2 for 5 <= p <= 499" if not bad else f"fails at {bad}"

    return _timed(4, "mod p^2 closed forms", 30.0, body)


def criterion_5() -> CriterionResult:
    def body():
        primes = _primes(19, 2000)
        failures = [(p, name) for p in primes for name in check_oracle_equivalence(p).failures]
        detail = f"{len(primes)} primes x 36 sums, component forms = direct sums"
        return not failures, detail if not failures else f"failures: {failures[:5]}"

    return _timed(5, "oracle equivalence", 60.0, body)


def criterion_6(budget: float = 60.0) -> CriterionResult:
    """Relation suite; shares criterion 5's budget, so pass what is left of it."""

    def body():
        primes = _primes(19, 2000)
        failures = [(p, name) for p in primes for name in verify_relations(p).failures]
        detail = f"{len(primes)} primes, Lerch/Lehmer/Glaisher, symmetry and full-sum relations"
        return not failures, detail if not failures else f"failures: {failures[:5]}"

    return _timed(6, "relation suite", budget, body)


def criterion_7() -> CriterionResult:
    def body():
        def vals(p):
            return {"q2": fermat_quotient(2, p), "q3": fermat_quotient(3, p), "X": x_of(p), "Z": z_of(p)}

        problems = []
        for p, zero in ((1093, "q2"), (3511, "q2"), (179, "Z"), (2423, "X")):
            v = vals(p)
            if v[zero] != 0 or any(v[k] == 0 for k in v if k != zero):
                problems.append((p, {k: int(x) for k, x in v.items()}))
        for p in (11, 1006003):
            if fermat_quotient(3, p) != 0:
                problems.append((p, "q3"))
        return not problems, "each listed prime kills exactly one component" if not problems else str(problems)

    return _timed(7, "independence spot-checks", 10.0, body)


def _group(hits) -> dict[str, list[int]]:
    found = defaultdict(list)
    for h in hits:
        found[h.target].append(h.p)
    return found


def criterion_8(workers: int = 1) -> CriterionResult:
    def body():
        hits = scan(list(EXPECTED_ZEROS), 2, SEARCH_BOUND, workers=workers)
        found = _group(hits)
        wrong = {t: found.get(t, []) for t, ps in EXPECTED_ZEROS.items() if found.get(t, []) != ps}
        overlap = overlap_report(hits)
        if wrong or overlap:
            return False, f"mismatched {wrong}; overlap {overlap}"
        return True, f"{len(hits)} hits below {SEARCH_BOUND} match exactly, no overlap"

    return _timed(8, f"search reproduction to {SEARCH_BOUND}", 120.0, body)


def criterion_9(workers: int | None = None) -> CriterionResult:
    workers = workers or os.cpu_count() or 1

    def body():
        hits = scan(list(EXTENDED_ZEROS), 2, EXTENDED_BOUND, workers=workers)
        found = _group(hits)
        missing = {t: p for t, p in EXTENDED_ZEROS.items() if p not in found.get(t, [])}
        return not missing, f"found {dict(found)}" if not missing else f"missing {missing}"

    return _timed(9, f"extended search to {EXTENDED_BOUND}", 4 * 3600.0, body)


def criterion_10(bound: int = 60_000) -> CriterionResult:
    targets = list(EXPECTED_ZEROS)

    def body():
        single = scan(targets, 2, bound, workers=1, segment=1 << 13)
        multi = scan(targets, 2, bound, workers=4, segment=1 << 13)
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "scan.ckpt"
            scan(targets, 2, bound // 2, segment=1 << 13, checkpoint=path)
            resumed = scan(targets, 2, bound, segment=1 << 13, checkpoint=path)
        if single != multi:
            return False, "1-worker and 4-worker hit streams differ"
        if resumed != single:
            return False, "resumed scan differs from uninterrupted scan"
        return True, f"{len(single)} hits identical across workers 1/4 and checkpoint resume"

    return _timed(10, "determinism", 120.0, body)


CRITERIA: dict[int, Callable[[], CriterionResult]] = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    10: criterion_10,
}


def run_all(extended: bool = False, echo: Callable[[str], None] | None = print) -> list[CriterionResult]:
    checks = dict(CRITERIA)
    if extended:
        checks[9] = criterion_9
    results = []
    for number in sorted(checks):
        if number == 6:
            result = criterion_6(budget=60.0 - results[-1].seconds)
        else:
            result = checks[number]()
        if echo is not None:
            echo(result.line())
        results.append(result)
    return results
