"""Classical permutation classes Av(B): enumeration, growth proxies, Wilf
equivalence and classification.

Enumeration is incremental: the length-(n+1) members are generated by
inserting the new maximum value n+1 into every gap of every length-n
member, keeping the results that avoid the basis.  This is exhaustive
because classes are down-sets: deleting the maximum from any member of
Av_{n+1}(B) lands in Av_n(B).  Since each parent already avoids B, a
candidate can only fail through an occurrence using the new point, so the
avoidance re-check is anchored at the inserted position (the brute-force
filter oracle in the test suite verifies this restriction).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations as _all_perms
from typing import Iterable, Sequence

from .errors import InvalidBasisError, IterationCapError, PermPatError
from .perm import Permutation, Symmetry, _contains_values, contains

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "PERMPAT_BUDGET"


def _default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    return int(raw) if raw else DEFAULT_BUDGET


@dataclass(frozen=True)
class Basis:
    """A finite antichain of forbidden patterns.  Construct via
    validate_basis, which enforces pairwise incomparability."""

    patterns: tuple[Permutation, ...]

    def __str__(self) -> str:
        if not self.patterns:
            return "(empty basis)"
        return ",".join(str(p).replace(" ", "") if max(p.values, default=0) <= 9 else str(p)
                        for p in self.patterns)


def validate_basis(patterns: Iterable[Permutation]) -> Basis:
    """Check the antichain condition and return a canonical Basis.

    Duplicates are dropped; patterns are sorted by (length, values).
    """
    unique = sorted(set(patterns), key=lambda p: (len(p), p.values))
    for a, b in combinations(unique, 2):
        if contains(b, a):  # a is shorter or equal; b cannot contain longer a
            raise InvalidBasisError(
                f"not an antichain: {a or 'the empty permutation'} is contained in {b}"
            )
    return Basis(tuple(unique))


def parse_basis(text: str) -> Basis:
    """Comma-separated one-line patterns, e.g. "123,132"."""
    from .perm import parse

    stripped = text.strip()
    if not stripped or stripped == "∅" or stripped.lower() == "empty":
        return Basis(())
    return validate_basis(parse(part) for part in stripped.split(","))


@dataclass
class ClassEnumeration:
    """Per-length counts (and optional witness lists) for Av(B)."""

    basis: Basis
    counts: list[int]
    witnesses: list[list[Permutation]] | None = None
    truncated_at: int | None = None  # first length the budget could not cover

    @property
    def n_max(self) -> int:
        return len(self.counts) - 1


def _expand_chunk(
    chunk: Sequence[tuple[int, ...]],
    pats: tuple[tuple[int, ...], ...],
    full_check: bool,
    limit: int | None = None,
) -> list[tuple[int, ...]] | None:
    """Insert the new maximum into every gap of every chunk member, keeping
    avoiders.  Returns None if more than `limit` avoiders would be kept."""
    out: list[tuple[int, ...]] = []
    for sigma in chunk:
        m = len(sigma)
        new = m + 1
        for g in range(m + 1):
            cand = sigma[:g] + (new,) + sigma[g:]
            if full_check:
                if any(_contains_values(cand, p) for p in pats):
                    continue
            else:
                if any(_contains_values(cand, p, require=g) for p in pats):
                    continue
            out.append(cand)
        if limit is not None and len(out) > limit:
            return None
    return out


def enumerate_class(
    basis: Basis,
    n_max: int,
    with_witnesses: bool = False,
    budget: int | None = None,
    threads: int = 1,
    full_check: bool = False,
) -> ClassEnumeration:
    """Count (and optionally list) Av_n(B) for n = 0..n_max.

    `budget` caps the total number of stored permutations; when it would be
    exceeded the result is truncated at that length, never silently wrong.
    `threads` partitions the frontier; results are canonically sorted, so
    output is independent of the worker count.
    """
    if n_max < 0:
        raise PermPatError("n_max must be non-negative")
    if budget is None:
        budget = _default_budget()
    pats = tuple(p.values for p in basis.patterns)
    frontier: list[tuple[int, ...]] = [] if any(len(p) == 0 for p in pats) else [()]
    counts = [len(frontier)]
    levels: list[list[tuple[int, ...]]] = [list(frontier)]
    stored = len(frontier)
    truncated_at: int | None = None
    for n in range(1, n_max + 1):
        remaining = budget - stored
        if len(frontier) * n > remaining:
            # the worst case would blow the budget: expand with an early abort
            next_level = _expand_chunk(frontier, pats, full_check, limit=remaining)
            if next_level is None:
                truncated_at = n
                break
        elif threads > 1 and len(frontier) >= threads:
            size = math.ceil(len(frontier) / threads)
            chunks = [frontier[i : i + size] for i in range(0, len(frontier), size)]
            with ThreadPoolExecutor(max_workers=threads) as pool:
                parts = list(
                    pool.map(lambda c: _expand_chunk(c, pats, full_check), chunks)
                )
            next_level = [cand for part in parts for cand in part]
        else:
            next_level = _expand_chunk(frontier, pats, full_check)
        next_level.sort()
        if stored + len(next_level) > budget:
            truncated_at = n
            break
        stored += len(next_level)
        counts.append(len(next_level))
        if with_witnesses:
            levels.append(next_level)
        frontier = next_level
        if not frontier:
            counts.extend([0] * (n_max - n))
            if with_witnesses:
                levels.extend([[] for _ in range(n_max - n)])
            break
    witnesses = None
    if with_witnesses:
        witnesses = [[Permutation(w) for w in level] for level in levels]
    return ClassEnumeration(basis, counts, witnesses, truncated_at)


def enumerate_by_filter(basis: Basis, n_max: int) -> ClassEnumeration:
    """Brute-force oracle: filter all of S_n by avoidance.  Exponentially
    slower than enumerate_class; retained for verification and for
    non-classical avoidance predicates (see enumerate_avoiders)."""
    pats = tuple(p.values for p in basis.patterns)
    return enumerate_avoiders(
        lambda sigma: not any(_contains_values(sigma.values, p) for p in pats), n_max
    )


def enumerate_avoiders(predicate, n_max: int) -> ClassEnumeration:
    """Enumerate by filtering all of S_n with an arbitrary avoidance
    predicate.  Works for non-classical (e.g. mesh/barred) avoidance sets,
    which need not be down-sets, so no incremental shortcut applies."""
    counts: list[int] = []
    witnesses: list[list[Permutation]] = []
    for n in range(n_max + 1):
        level = [
            sigma
            for word in _all_perms(range(1, n + 1))
            if predicate(sigma := Permutation(word))
        ]
        counts.append(len(level))
        witnesses.append(level)
    return ClassEnumeration(Basis(()), counts, witnesses, None)


# ---------------------------------------------------------------------------
# Growth-rate proxies


@dataclass
class GrowthEstimate:
    """Finite-prefix proxies for the upper/lower growth rates.

    values[n] = counts[n] ** (1/n) for n >= 1 (None at n = 0 and where the
    count is 0).  upper/lower are the max/min over the trailing window.
    These are estimates of limsup/liminf computed from a prefix, never
    claimed as limits; `diverging` marks the class of all permutations,
    the one class whose growth is super-exponential.
    """

    values: list[float | None]
    lower: float
    upper: float
    diverging: bool
    finite_class: bool
    window: int


def growth_estimates(enum: ClassEnumeration, window: int = 1) -> GrowthEstimate:
    if window < 1:
        raise PermPatError("window must be >= 1")
    counts = enum.counts
    if len(counts) < 2:
        raise PermPatError("growth estimates need counts for n >= 1")
    values: list[float | None] = [None]
    for n in range(1, len(counts)):
        c = counts[n]
        values.append(math.exp(math.log(c) / n) if c > 0 else None)
    diverging = len(enum.basis.patterns) == 0
    if counts[-1] == 0:
        return GrowthEstimate(values, 0.0, 0.0, diverging, True, window)
    tail = [v for v in values[-window:] if v is not None]
    return GrowthEstimate(values, min(tail), max(tail), diverging, False, window)


# ---------------------------------------------------------------------------
# Wilf equivalence


@dataclass
class WilfVerdict:
    """Prefix comparison of two classes.  Equality up to n_max is evidence
    of Wilf equivalence, not a proof; the n_max provenance always travels
    with the verdict."""

    basis_a: Basis
    basis_b: Basis
    n_max: int
    counts_a: list[int]
    counts_b: list[int]
    first_difference: int | None

    @property
    def equinumerous(self) -> bool:
        return self.first_difference is None

    def describe(self) -> str:
        if self.first_difference is None:
            return f"equinumerous up to n = {self.n_max} (not a proof of equivalence)"
        n = self.first_difference
        return (
            f"distinguished at n = {n}: "
            f"{self.counts_a[n]} vs {self.counts_b[n]}"
        )


def wilf_equivalent(
    a: Basis, b: Basis, n_max: int, budget: int | None = None
) -> WilfVerdict:
    ea = enumerate_class(a, n_max, budget=budget)
    eb = enumerate_class(b, n_max, budget=budget)
    if ea.truncated_at is not None or eb.truncated_at is not None:
        raise PermPatError("resource budget exceeded before reaching n_max")
    first_diff = next(
        (n for n in range(n_max + 1) if ea.counts[n] != eb.counts[n]), None
    )
    return WilfVerdict(a, b, n_max, ea.counts, eb.counts, first_diff)


@dataclass
class WilfClassification:
    """Wilf classes of the single-pattern classes Av(pi), pi in S_k,
    bucketed by count vector up to n_max, together with the symmetry
    orbits (which provably refine the Wilf classes)."""

    k: int
    n_max: int
    classes: list[tuple[tuple[int, ...], list[Permutation]]]
    orbits: list[list[Permutation]]
    symmetry_refines: bool


def wilf_classify(
    k: int, n_max: int, max_k: int = 4, budget: int | None = None
) -> WilfClassification:
    if k < 1:
        raise PermPatError("pattern length must be >= 1")
    if k > max_k:
        raise IterationCapError(
            f"wilf_classify is guarded at pattern length {max_k}; got {k}"
        )
    pats = [Permutation(word) for word in _all_perms(range(1, k + 1))]
    vectors: dict[Permutation, tuple[int, ...]] = {}
    for p in pats:
        enum = enumerate_class(Basis((p,)), n_max, budget=budget)
        if enum.truncated_at is not None:
            raise PermPatError("resource budget exceeded before reaching n_max")
        vectors[p] = tuple(enum.counts)
    buckets: dict[tuple[int, ...], list[Permutation]] = {}
    for p in pats:
        buckets.setdefault(vectors[p], []).append(p)
    classes = [
        (vec, sorted(members, key=lambda p: p.values))
        for vec, members in buckets.items()
    ]
    classes.sort(key=lambda item: item[1][0].values)
    orbit_map: dict[frozenset[Permutation], list[Permutation]] = {}
    for p in pats:
        key = frozenset(s.apply(p) for s in Symmetry)
        orbit_map.setdefault(key, []).append(p)
    orbits = sorted(
        (sorted(members, key=lambda p: p.values) for members in orbit_map.values()),
        key=lambda ms: ms[0].values,
    )
    refines = all(
        len({vectors[p] for p in orbit}) == 1 for orbit in orbits
    )
    return WilfClassification(k, n_max, classes, orbits, refines)
