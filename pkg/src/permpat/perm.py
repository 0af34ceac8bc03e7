"""Core permutation type and structural operations.

Permutations are kept in one-line notation: a ``Permutation`` of length n
wraps a tuple containing each of 1..n exactly once.  All positions reported
by operations here (occurrences, intervals, extreme points) are 1-based, so
they line up with the notation sigma(1)...sigma(n).  Values are accessed
0-based via indexing, like any Python sequence.

The containment search is a depth-first assignment of host positions to
pattern positions with value-window pruning: every already-placed pattern
entry narrows the open interval of host values the next entry may take.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import MalformedPermutationError, PermPatError


class Permutation:
    """An arrangement of the numbers 1..n, immutable and hashable.

    >>> Permutation([3, 1, 2]).values
    (3, 1, 2)
    >>> len(Permutation([]))
    0
    """

    __slots__ = ("_values",)

    def __init__(self, values: Iterable[int]):
        vals = tuple(values)
        n = len(vals)
        seen = [False] * n
        for v in vals:
            if not isinstance(v, int) or v < 1 or v > n:
                raise MalformedPermutationError(
                    f"value {v!r} is not in the range 1..{n}"
                )
            if seen[v - 1]:
                raise MalformedPermutationError(f"duplicate value {v}")
            seen[v - 1] = True
        self._values = vals

    @property
    def values(self) -> tuple[int, ...]:
        return self._values

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def decreasing(cls, n: int) -> "Permutation":
        return cls(range(n, 0, -1))

    def __len__(self) -> int:
        return len(self._values)

    def __iter__(self) -> Iterator[int]:
        return iter(self._values)

    def __getitem__(self, i: int) -> int:
        return self._values[i]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self._values == other._values

    def __hash__(self) -> int:
        return hash(self._values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self._values)

    def __repr__(self) -> str:
        return f"Permutation({list(self._values)!r})"

    def is_increasing(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self._values))

    def is_decreasing(self) -> bool:
        n = len(self._values)
        return all(v == n - i for i, v in enumerate(self._values))


def parse(text: str) -> Permutation:
    """Parse one-line notation.

    Accepts whitespace/comma-delimited integers, or a compact digit string.
    The compact form is only unambiguous when every value is a single digit,
    so multi-digit values must be delimited.

    >>> parse("314592687").values
    (3, 1, 4, 5, 9, 2, 6, 8, 7)
    >>> parse("7 10 1 4 9 14 2 11 3 13 12 6 8 5")[1]
    10
    """
    stripped = text.strip()
    if not stripped:
        return Permutation(())
    if any(c.isspace() for c in stripped) or "," in stripped:
        parts = stripped.replace(",", " ").split()
    elif stripped.isdigit():
        parts = list(stripped)
    else:
        parts = [stripped]
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise MalformedPermutationError(f"cannot parse {text!r}: {exc}") from None
    return Permutation(values)


def reduce_word(word: Sequence[int]) -> Permutation:
    """The reduction of a list of distinct integers: the i-th smallest
    entry becomes i.

    >>> reduce_word([4, 9, 6, 8]).values
    (1, 4, 2, 3)
    """
    if len(set(word)) != len(word):
        raise MalformedPermutationError("entries must be pairwise distinct")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return Permutation(rank[v] for v in word)


# ---------------------------------------------------------------------------
# Containment


_REF_CACHE: dict[tuple[int, ...], tuple[tuple[int, ...], tuple[int, ...]]] = {}


def _refs(pat: tuple[int, ...]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """For each pattern slot t, the earlier slot giving the tightest lower
    (resp. upper) value bound, or -1 if unbounded on that side."""
    cached = _REF_CACHE.get(pat)
    if cached is not None:
        return cached
    k = len(pat)
    lo_ref = [-1] * k
    hi_ref = [-1] * k
    for t in range(k):
        for j in range(t):
            if pat[j] < pat[t] and (lo_ref[t] < 0 or pat[j] > pat[lo_ref[t]]):
                lo_ref[t] = j
            if pat[j] > pat[t] and (hi_ref[t] < 0 or pat[j] < pat[hi_ref[t]]):
                hi_ref[t] = j
    result = (tuple(lo_ref), tuple(hi_ref))
    _REF_CACHE[pat] = result
    return result


def _iter_occurrences(
    host: tuple[int, ...],
    pat: tuple[int, ...],
    require: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Yield 0-based index tuples of occurrences of pat in host, in
    lexicographic order.  If require is given, only occurrences using that
    host index are produced."""
    k = len(pat)
    n = len(host)
    if k == 0:
        if require is None:
            yield ()
        return
    if k > n:
        return
    lo_ref, hi_ref = _refs(pat)
    pos = [0] * k
    val = [0] * k

    def rec(t: int, start: int, used: bool) -> Iterator[tuple[int, ...]]:
        lr = lo_ref[t]
        hr = hi_ref[t]
        lo = val[lr] if lr >= 0 else 0
        hi = val[hr] if hr >= 0 else n + 1
        for p in range(start, n - (k - 1 - t)):
            if not used and p > require:  # positions only grow; anchor missed
                return
            v = host[p]
            if lo < v < hi:
                pos[t] = p
                if t == k - 1:
                    if used or p == require:
                        yield tuple(pos)
                else:
                    val[t] = v
                    yield from rec(t + 1, p + 1, used or p == require)

    yield from rec(0, 0, require is None)


def _contains_values(
    host: tuple[int, ...],
    pat: tuple[int, ...],
    require: int | None = None,
) -> bool:
    """Boolean containment over raw value tuples; the hot path of the class
    enumerator, so it avoids generator overhead."""
    k = len(pat)
    n = len(host)
    if k == 0:
        return require is None
    if k > n:
        return False
    lo_ref, hi_ref = _refs(pat)
    val = [0] * k

    def rec(t: int, start: int, used: bool) -> bool:
        lr = lo_ref[t]
        hr = hi_ref[t]
        lo = val[lr] if lr >= 0 else 0
        hi = val[hr] if hr >= 0 else n + 1
        last = t == k - 1
        for p in range(start, n - (k - 1 - t)):
            if not used and p > require:
                return False
            v = host[p]
            if lo < v < hi:
                if last:
                    if used or p == require:
                        return True
                else:
                    val[t] = v
                    if rec(t + 1, p + 1, used or p == require):
                        return True
        return False

    return rec(0, 0, require is None)


def contains(host: Permutation, pattern: Permutation) -> bool:
    """True iff host has a subsequence order isomorphic to pattern.

    >>> contains(parse("314592687"), parse("1423"))
    True
    >>> contains(parse("314592687"), parse("3241"))
    False
    """
    return _contains_values(host.values, pattern.values)


def find_occurrence(host: Permutation, pattern: Permutation) -> tuple[int, ...] | None:
    """The lexicographically least occurrence (1-based index tuple), or
    None when the pattern is avoided."""
    for occ in _iter_occurrences(host.values, pattern.values):
        return tuple(i + 1 for i in occ)
    return None


def occurrences(host: Permutation, pattern: Permutation) -> list[tuple[int, ...]]:
    """All occurrences as 1-based index tuples, sorted lexicographically."""
    return [tuple(i + 1 for i in occ) for occ in _iter_occurrences(host.values, pattern.values)]


# ---------------------------------------------------------------------------
# Sums and decompositions


def direct_sum(sigma: Permutation, *more: Permutation) -> Permutation:
    """sigma followed by a shifted copy of each further summand.

    >>> str(direct_sum(parse("2413"), parse("4231")))
    '2 4 1 3 8 6 7 5'
    """
    vals = list(sigma.values)
    for tau in more:
        shift = len(vals)
        vals.extend(v + shift for v in tau.values)
    return Permutation(vals)


def skew_sum(sigma: Permutation, *more: Permutation) -> Permutation:
    """Each summand placed above and to the left of the next.

    >>> str(skew_sum(parse("2413"), parse("4231")))
    '6 8 5 7 4 2 3 1'
    """
    perms = (sigma,) + more
    vals: list[int] = []
    remaining = sum(len(p) for p in perms)
    for p in perms:
        remaining -= len(p)
        vals.extend(v + remaining for v in p.values)
    return Permutation(vals)


def sum_decompose(sigma: Permutation) -> list[Permutation]:
    """The unique decomposition into sum-indecomposable components."""
    if len(sigma) == 0:
        raise PermPatError("cannot decompose the empty permutation")
    comps: list[Permutation] = []
    start = 0
    running_max = 0
    for i, v in enumerate(sigma.values):
        if v > running_max:
            running_max = v
        if running_max == i + 1:
            comps.append(Permutation(v - start for v in sigma.values[start : i + 1]))
            start = i + 1
    return comps


def skew_decompose(sigma: Permutation) -> list[Permutation]:
    """The unique decomposition into skew-indecomposable components."""
    n = len(sigma)
    if n == 0:
        raise PermPatError("cannot decompose the empty permutation")
    comps: list[Permutation] = []
    start = 0
    running_min = n + 1
    for i, v in enumerate(sigma.values):
        if v < running_min:
            running_min = v
        if running_min == n - i:
            shift = n - i - 1
            comps.append(Permutation(v - shift for v in sigma.values[start : i + 1]))
            start = i + 1
    return comps


def is_layered(sigma: Permutation) -> bool:
    """True iff sigma is a direct sum of decreasing permutations.  The
    empty permutation is layered (an empty sum)."""
    if len(sigma) == 0:
        return True
    return all(c.is_decreasing() for c in sum_decompose(sigma))


# ---------------------------------------------------------------------------
# Intervals, simplicity, inflation


class Interval(NamedTuple):
    """An inclusive 1-based index range whose value set is contiguous."""

    start: int
    end: int


def intervals(sigma: Permutation) -> list[Interval]:
    """All intervals of length >= 1, sorted by (start, end).

    The length-0 interval exists by convention but has no positional
    representation and is not listed.
    """
    vals = sigma.values
    n = len(vals)
    out: list[Interval] = []
    for a in range(n):
        mn = mx = vals[a]
        for b in range(a, n):
            v = vals[b]
            if v < mn:
                mn = v
            elif v > mx:
                mx = v
            if mx - mn == b - a:
                out.append(Interval(a + 1, b + 1))
    return out


def is_simple(sigma: Permutation) -> bool:
    """True iff sigma has no intervals besides singletons and the full
    range.  Under this raw criterion the permutations of lengths 1 and 2
    count as simple; substitution skeletons are nevertheless required to
    have length >= 2 (see substitution_decompose).
    """
    n = len(sigma)
    return all(iv.end - iv.start + 1 in (1, n) for iv in intervals(sigma))


def inflate(skeleton: Permutation, components: Sequence[Permutation]) -> Permutation:
    """Replace each entry of the skeleton with an interval copy of the
    corresponding component.

    >>> str(inflate(parse("3142"), [parse("123"), parse("1"), parse("21"), parse("312")]))
    '5 6 7 1 9 8 4 2 3'
    """
    if len(components) != len(skeleton):
        raise PermPatError(
            f"expected {len(skeleton)} components, got {len(components)}"
        )
    if any(len(c) == 0 for c in components):
        raise PermPatError("inflation components must be nonempty")
    # Value offset of block i: total size of blocks whose skeleton entry is smaller.
    sizes = [len(c) for c in components]
    offsets = [0] * len(skeleton)
    for i, si in enumerate(skeleton.values):
        offsets[i] = sum(sizes[j] for j, sj in enumerate(skeleton.values) if sj < si)
    vals: list[int] = []
    for i, comp in enumerate(components):
        vals.extend(v + offsets[i] for v in comp.values)
    return Permutation(vals)


def substitution_decompose(
    sigma: Permutation,
) -> tuple[Permutation, list[Permutation]]:
    """Express sigma as the inflation of a simple skeleton of length >= 2.

    When the skeleton would be 12 (resp. 21) the components are the full
    sum (resp. skew) decomposition, so the skeleton is the increasing
    (resp. decreasing) permutation of that length; this canonical form
    resolves the associativity ambiguity of nested 12/21 inflations.
    """
    if len(sigma) <= 1:
        raise PermPatError(
            "a permutation of length <= 1 is not an inflation of a shorter permutation"
        )
    comps = sum_decompose(sigma)
    if len(comps) > 1:
        return Permutation.identity(len(comps)), comps
    comps = skew_decompose(sigma)
    if len(comps) > 1:
        return Permutation.decreasing(len(comps)), comps
    # Neither sum nor skew decomposable: the maximal proper intervals are
    # pairwise disjoint and partition the positions; the quotient is simple.
    n = len(sigma)
    proper = [iv for iv in intervals(sigma) if iv.end - iv.start + 1 < n]
    maximal = [
        iv
        for iv in proper
        if not any(
            (jv.start <= iv.start and iv.end <= jv.end and jv != iv) for jv in proper
        )
    ]
    maximal.sort()
    if [p for iv in maximal for p in range(iv.start, iv.end + 1)] != list(
        range(1, n + 1)
    ):
        raise PermPatError(f"internal error: interval blocks do not partition {sigma}")
    blocks = [sigma.values[iv.start - 1 : iv.end] for iv in maximal]
    skeleton = reduce_word([b[0] if len(b) == 1 else min(b) for b in blocks])
    components = [reduce_word(b) for b in blocks]
    if not is_simple(skeleton):
        raise PermPatError(f"internal error: skeleton {skeleton} not simple")
    return skeleton, components


# ---------------------------------------------------------------------------
# Extreme points


EXTREMAL_KINDS = ("lr-max", "lr-min", "rl-max", "rl-min")


def extremal(sigma: Permutation, kind: str) -> list[int]:
    """1-based positions of the requested extreme points, increasing.

    A left-to-right maximum is larger than all values to its left; the
    other three kinds are the analogous records.
    """
    if kind not in EXTREMAL_KINDS:
        raise PermPatError(f"unknown extremal kind {kind!r}; expected one of {EXTREMAL_KINDS}")
    vals = sigma.values
    n = len(vals)
    out: list[int] = []
    if kind.startswith("lr"):
        best: int | None = None
        for i, v in enumerate(vals):
            if best is None or (v > best if kind == "lr-max" else v < best):
                best = v
                out.append(i + 1)
    else:
        best = None
        for i in range(n - 1, -1, -1):
            v = vals[i]
            if best is None or (v > best if kind == "rl-max" else v < best):
                best = v
                out.append(i + 1)
        out.reverse()
    return out


# ---------------------------------------------------------------------------
# Symmetries of the square


class Symmetry(Enum):
    """The 8-element group generated by reverse, complement and inverse.

    Each member's value is its generator word, applied left to right.
    """

    IDENTITY = ""
    REVERSE = "r"
    COMPLEMENT = "c"
    ROTATE = "rc"  # reverse then complement: 180-degree rotation
    INVERSE = "i"
    REVERSE_INVERSE = "ri"
    COMPLEMENT_INVERSE = "ci"
    ROTATE_INVERSE = "rci"

    @classmethod
    def from_name(cls, name: str) -> "Symmetry":
        key = name.strip().lower().replace("-", "_")
        try:
            return cls[key.upper()]
        except KeyError:
            raise PermPatError(
                f"unknown symmetry {name!r}; expected one of "
                + ", ".join(s.name.lower().replace("_", "-") for s in cls)
            ) from None

    def apply(self, sigma: Permutation) -> Permutation:
        vals = sigma.values
        for gen in self.value:
            n = len(vals)
            if gen == "r":
                vals = vals[::-1]
            elif gen == "c":
                vals = tuple(n + 1 - v for v in vals)
            else:  # "i"
                inv = [0] * n
                for i, v in enumerate(vals):
                    inv[v - 1] = i + 1
                vals = tuple(inv)
        return Permutation(vals)


def apply_symmetry(sigma: Permutation, symmetry: Symmetry) -> Permutation:
    return symmetry.apply(sigma)


def symmetry_orbit(sigma: Permutation) -> set[Permutation]:
    """The images of sigma under all 8 square symmetries."""
    return {s.apply(sigma) for s in Symmetry}
