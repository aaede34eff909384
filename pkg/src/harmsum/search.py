"""Range searches for primes at which a sum or component vanishes mod p.

Each prime costs a handful of O(log p) recurrence evaluations: q_p(2),
q_p(3), X(p) and Z(p) are computed once and every sum target is a linear
combination of them. Hits are rare, so each one is re-checked against the
slow direct summation before it is reported.
"""

from __future__ import annotations

import hashlib
import json
import math
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Mapping

import numpy as np

from .modarith import Residue, fermat_quotient
from .quotients import _components, x_of, z_of
from .sums import COMPONENT_TABLE, SumSpec, s_components, s_direct

__all__ = [
    "SearchTarget",
    "SearchHit",
    "Checkpoint",
    "CheckpointError",
    "prime_stream",
    "evaluate_targets",
    "iter_scan",
    "scan",
    "overlap_report",
    "format_hit",
    "targets_digest",
    "DEFAULT_SEGMENT",
]

DEFAULT_SEGMENT = 1 << 20


# --- primes -----------------------------------------------------------------

def _small_primes(limit: int) -> np.ndarray:
    if limit < 2:
        return np.array([], dtype=np.int64)
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for q in range(2, math.isqrt(limit) + 1):
        if sieve[q]:
            sieve[q * q :: q] = False
    return np.flatnonzero(sieve)


def prime_stream(lo: int, hi: int, segment: int = DEFAULT_SEGMENT) -> Iterator[int]:
    """Primes in [lo, hi] in increasing order, sieved one segment at a time."""
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    base = _small_primes(math.isqrt(hi))
    start = lo
    while start <= hi:
        stop = min(start + segment, hi + 1)  # exclusive
        mask = np.ones(stop - start, dtype=bool)
        for q in base:
            q = int(q)
            if q * q >= stop:
                break
            first = max(q * q, -(-start // q) * q)
            mask[first - start :: q] = False
        for offset in np.flatnonzero(mask):
            yield start + int(offset)
        start = stop


# --- targets ----------------------------------------------------------------

_SIMPLE_KINDS = ("X", "Z", "q2", "q3")


@dataclass(frozen=True)
class SearchTarget:
    kind: str
    k: int | None = None
    N: int | None = None

    def __post_init__(self):
        if self.kind == "sum":
            if self.N not in COMPONENT_TABLE:
                raise ValueError(f"sum targets need N in {sorted(COMPONENT_TABLE)}, got {self.N}")
            SumSpec(self.k, self.N)
        elif self.kind in _SIMPLE_KINDS:
            if self.k is not None or self.N is not None:
                raise ValueError(f"{self.kind} target takes no (k, N)")
        else:
            raise ValueError(f"unknown target kind {self.kind!r}")

    @classmethod
    def parse(cls, text: str) -> "SearchTarget":
        """Parse 'X', 'Z', 'q2', 'q3' or 'sum:k/N'."""
        text = text.strip()
        if text in _SIMPLE_KINDS:
            return cls(text)
        if text.startswith("sum:"):
            try:
                k, N = (int(part) for part in text[4:].split("/"))
            except ValueError:
                raise ValueError(f"malformed sum target {text!r}, expected sum:k/N") from None
            return cls("sum", k, N)
        raise ValueError(f"unknown target {text!r}")

    @property
    def spec(self) -> SumSpec:
        return SumSpec(self.k, self.N)

    def applies_to(self, p: int) -> bool:
        if self.kind == "sum":
            return p > self.N  # vacuous and degenerate sums are skipped
        if self.kind == "Z":
            return p >= 5
        if self.kind == "q2":
            return p != 2
        if self.kind == "q3":
            return p != 3
        return True

    def __str__(self) -> str:
        if self.kind == "sum":
            return f"sum:{self.k}/{self.N}"
        return self.kind


@dataclass(frozen=True, order=True)
class SearchHit:
    p: int
    target: str

    def __post_init__(self):
        SearchTarget.parse(self.target)


def targets_digest(targets: Iterable[SearchTarget]) -> str:
    names = sorted({str(t) for t in targets})
    return hashlib.sha256("\n".join(names).encode()).hexdigest()


def evaluate_targets(p: int, targets: Iterable[SearchTarget]) -> dict[SearchTarget, Residue]:
    """Residue of every applicable target at p, sharing the component work."""
    targets = [t for t in targets if t.applies_to(p)]
    out: dict[SearchTarget, Residue] = {}
    if any(t.kind == "sum" for t in targets):
        values = _components(p)
        for t in targets:
            if t.kind == "sum":
                out[t] = s_components(t.spec, p, values)
            else:
                out[t] = {"X": values.x, "Z": values.z, "q2": values.q2, "q3": values.q3}[t.kind]
        return out
    for t in targets:
        if t.kind == "X":
            out[t] = x_of(p)
        elif t.kind == "Z":
            out[t] = z_of(p)
        else:
            out[t] = fermat_quotient(2 if t.kind == "q2" else 3, p)
    return out


def _confirm(p: int, target: SearchTarget) -> None:
    """Re-check a hit by an independent route; raises on disagreement."""
    if target.kind == "sum":
        ok = s_direct(target.spec, p) == 0
    elif target.kind == "X" and p > 18:
        ok = s_direct(SumSpec(0, 9), p) == s_direct(SumSpec(0, 3), p)
    elif target.kind == "Z" and p > 18:
        ok = (s_direct(SumSpec(1, 18), p) - 2 * fermat_quotient(2, p)) % p == 0
    else:
        ok = evaluate_targets(p, [target])[target] == 0
    if not ok:
        raise AssertionError(f"fast path reported {target} = 0 at p = {p}, direct check disagrees")


def _scan_range(task: tuple[tuple[str, ...], int, int, bool]) -> list[SearchHit]:
    names, lo, hi, confirm = task
    targets = [SearchTarget.parse(n) for n in names]
    hits = []
    for p in prime_stream(lo, hi):
        for t, value in evaluate_targets(p, targets).items():
            if value == 0:
                if confirm:
                    _confirm(p, t)
                hits.append(SearchHit(p, str(t)))
    return hits


# --- checkpoints ------------------------------------------------------------

class CheckpointError(ValueError):
    """A checkpoint file is malformed or belongs to another target list."""


@dataclass
class Checkpoint:
    digest: str
    bound_reached: int
    hits: list[SearchHit] = field(default_factory=list)

    def save(self, path: str | os.PathLike) -> None:
        path = Path(path)
        lines = [self.digest, str(self.bound_reached)]
        lines += [f"{h.p}\t{h.target}" for h in self.hits]
        tmp = path.with_name(path.name + ".tmp")
        tmp.write_text("\n".join(lines) + "\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "Checkpoint":
        lines = Path(path).read_text().splitlines()
        if len(lines) < 2 or len(lines[0]) != 64:
            raise CheckpointError(f"{path}: missing digest or bound line")
        try:
            bound = int(lines[1])
            hits = []
            for line in lines[2:]:
                p, target = line.split("\t")
                hits.append(SearchHit(int(p), target))
        except ValueError as exc:
            raise CheckpointError(f"{path}: corrupt checkpoint ({exc})") from None
        return cls(lines[0], bound, hits)


def _chunks(lo: int, hi: int, size: int) -> list[tuple[int, int]]:
    return [(a, min(a + size - 1, hi)) for a in range(lo, hi + 1, size)]


def iter_scan(
    targets: Iterable[SearchTarget | str],
    lo: int,
    hi: int,
    workers: int = 1,
    segment: int = DEFAULT_SEGMENT,
    checkpoint: str | os.PathLike | None = None,
    confirm: bool = True,
) -> Iterator[SearchHit]:
    """Yield hits in increasing p, range by range.

    With a checkpoint path, hits already recorded there are yielded first and
    scanning resumes just past the recorded bound; the file is rewritten after
    every completed range.
    """
    targets = [t if isinstance(t, SearchTarget) else SearchTarget.parse(t) for t in targets]
    targets = list(dict.fromkeys(targets))
    if not targets:
        raise ValueError("no search targets given")
    if lo < 2 or hi < lo:
        raise ValueError(f"need 2 <= lo <= hi, got lo={lo}, hi={hi}")
    names = tuple(str(t) for t in targets)
    digest = targets_digest(targets)

    state = Checkpoint(digest, lo - 1)
    if checkpoint is not None and Path(checkpoint).exists():
        state = Checkpoint.load(checkpoint)
        if state.digest != digest:
            raise CheckpointError(f"{checkpoint}: recorded for a different target list")
    start = max(lo, state.bound_reached + 1)
    yield from (h for h in state.hits if lo <= h.p <= hi)
    if start > hi:
        return

    if workers > 1:
        # Enough ranges to keep every worker busy; results do not depend on it.
        segment = max(1 << 12, min(segment, -(-(hi - start + 1) // (4 * workers))))
    tasks = [(names, a, b, confirm) for a, b in _chunks(start, hi, segment)]

    def consume(results):
        for (_, _, b, _), hits in zip(tasks, results):
            if checkpoint is not None:
                state.hits.extend(hits)
                state.bound_reached = b
                state.save(checkpoint)
            yield from hits

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from consume(pool.map(_scan_range, tasks))
    else:
        yield from consume(map(_scan_range, tasks))


def scan(
    targets: Iterable[SearchTarget | str],
    lo: int,
    hi: int,
    workers: int = 1,
    segment: int = DEFAULT_SEGMENT,
    checkpoint: str | os.PathLike | None = None,
    confirm: bool = True,
) -> list[SearchHit]:
    return list(iter_scan(targets, lo, hi, workers, segment, checkpoint, confirm))


def _position(target: str) -> str:
    # s(k, N) and s(N-1-k, N) vanish together; count them as one position.
    t = SearchTarget.parse(target)
    if t.kind == "sum":
        return str(SearchTarget("sum", min(t.k, t.N - 1 - t.k), t.N))
    return str(t)


def overlap_report(hits: Iterable[SearchHit] | Mapping[str, Iterable[int]]) -> dict[int, list[str]]:
    """Primes found by two or more distinct targets, with those targets."""
    if isinstance(hits, Mapping):
        pairs = [(p, name) for name, ps in hits.items() for p in ps]
    else:
        pairs = [(h.p, h.target) for h in hits]
    by_prime: dict[int, set[str]] = defaultdict(set)
    for p, name in pairs:
        by_prime[p].add(_position(name))
    return {p: sorted(names) for p, names in sorted(by_prime.items()) if len(names) > 1}


def format_hit(hit: SearchHit, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps({"p": hit.p, "target": hit.target})
    if fmt == "tsv":
        return f"{hit.p}\t{hit.target}"
    raise ValueError(f"unknown format {fmt!r}")
