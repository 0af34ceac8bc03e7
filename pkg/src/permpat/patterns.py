"""Non-classical patterns: mesh, vincular, bivincular, consecutive, barred.

Mesh patterns are the unifying engine.  A mesh pattern is a pattern
permutation of length k together with a set of shaded cells (i, j) with
0 <= i, j <= k, each naming the lower-left corner of a unit square of the
pattern's plot.  An occurrence is a classical occurrence such that no host
point falls in any shaded region, where cell (i, j) maps to the open host
rectangle between matched positions i, i+1 and matched values of ranks
j, j+1 (with sentinels 0 and n+1 on both axes).

Vincular and bivincular patterns compile to mesh patterns (full columns,
resp. full rows).  Barred patterns use a separate two-phase matcher.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Union

from .errors import PatternSyntaxError, PermPatError
from .perm import Permutation, occurrences, reduce_word


@dataclass(frozen=True)
class MeshPattern:
    pattern: Permutation
    shaded: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        k = len(self.pattern)
        object.__setattr__(self, "shaded", frozenset(tuple(c) for c in self.shaded))
        for i, j in self.shaded:
            if not (0 <= i <= k and 0 <= j <= k):
                raise PermPatError(
                    f"shaded cell ({i}, {j}) outside [0, {k}] x [0, {k}]"
                )


@dataclass(frozen=True)
class VincularPattern:
    """Pattern with adjacency requirements: i in adjacent_positions means
    pattern positions i and i+1 must be matched to adjacent host positions."""

    pattern: Permutation
    adjacent_positions: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        k = len(self.pattern)
        object.__setattr__(
            self, "adjacent_positions", frozenset(self.adjacent_positions)
        )
        for i in self.adjacent_positions:
            if not 1 <= i <= k - 1:
                raise PermPatError(f"adjacency index {i} outside 1..{k - 1}")


@dataclass(frozen=True)
class BivincularPattern:
    """Vincular constraints plus value adjacencies: v in adjacent_values
    means the host values matched to pattern values v and v+1 must be
    consecutive integers."""

    pattern: Permutation
    adjacent_positions: frozenset[int] = field(default_factory=frozenset)
    adjacent_values: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        k = len(self.pattern)
        object.__setattr__(
            self, "adjacent_positions", frozenset(self.adjacent_positions)
        )
        object.__setattr__(self, "adjacent_values", frozenset(self.adjacent_values))
        for i in self.adjacent_positions:
            if not 1 <= i <= k - 1:
                raise PermPatError(f"adjacency index {i} outside 1..{k - 1}")
        for v in self.adjacent_values:
            if not 1 <= v <= k - 1:
                raise PermPatError(f"value adjacency {v} outside 1..{k - 1}")


@dataclass(frozen=True)
class BarredPattern:
    """A permutation with some positions barred.

    The effective pattern is the reduction of the unbarred entries; an
    occurrence of the barred pattern is an occurrence of the effective
    pattern that does not extend to an occurrence of the whole pattern.
    """

    pattern: Permutation
    barred: frozenset[int]

    def __post_init__(self) -> None:
        k = len(self.pattern)
        object.__setattr__(self, "barred", frozenset(self.barred))
        if not self.barred or len(self.barred) >= k:
            raise PermPatError(
                "a barred pattern needs at least one barred and one unbarred entry"
            )
        for i in self.barred:
            if not 1 <= i <= k:
                raise PermPatError(f"barred position {i} outside 1..{k}")

    @property
    def unbarred_positions(self) -> tuple[int, ...]:
        return tuple(
            i for i in range(1, len(self.pattern) + 1) if i not in self.barred
        )

    @property
    def effective(self) -> Permutation:
        """The reduction of the unbarred entries."""
        return reduce_word([self.pattern[i - 1] for i in self.unbarred_positions])


Pattern = Union[Permutation, MeshPattern, VincularPattern, BivincularPattern, BarredPattern]


# ---------------------------------------------------------------------------
# Matching


def mesh_occurrences(host: Permutation, mp: MeshPattern) -> list[tuple[int, ...]]:
    """Classical occurrences of the pattern whose shaded regions contain no
    host point, sorted by index tuple (1-based)."""
    n = len(host)
    host_vals = host.values
    shaded = sorted(mp.shaded)
    out: list[tuple[int, ...]] = []
    for occ in occurrences(host, mp.pattern):
        p = (0,) + occ + (n + 1,)
        q = (0,) + tuple(sorted(host_vals[x - 1] for x in occ)) + (n + 1,)
        ok = True
        for i, j in shaded:
            x_lo, x_hi = p[i], p[i + 1]
            y_lo, y_hi = q[j], q[j + 1]
            if any(y_lo < host_vals[x] < y_hi for x in range(x_lo, x_hi - 1)):
                ok = False
                break
        if ok:
            out.append(occ)
    return out


def mesh_contains(host: Permutation, mp: MeshPattern) -> bool:
    return bool(mesh_occurrences(host, mp))


def compile_vincular(vp: VincularPattern) -> MeshPattern:
    """Adjacency at position i becomes the fully shaded column i."""
    k = len(vp.pattern)
    cells = {(i, j) for i in vp.adjacent_positions for j in range(k + 1)}
    return MeshPattern(vp.pattern, frozenset(cells))


def compile_bivincular(bp: BivincularPattern) -> MeshPattern:
    """Position adjacencies shade full columns; value adjacencies shade
    full rows."""
    k = len(bp.pattern)
    cells = {(i, j) for i in bp.adjacent_positions for j in range(k + 1)}
    cells |= {(i, v) for v in bp.adjacent_values for i in range(k + 1)}
    return MeshPattern(bp.pattern, frozenset(cells))


def consecutive_pattern(pattern: Permutation) -> VincularPattern:
    """The vincular pattern requiring all terms to occur contiguously."""
    return VincularPattern(pattern, frozenset(range(1, len(pattern))))


def vincular_occurrences(
    host: Permutation, vp: VincularPattern | BivincularPattern
) -> list[tuple[int, ...]]:
    if isinstance(vp, BivincularPattern):
        return mesh_occurrences(host, compile_bivincular(vp))
    return mesh_occurrences(host, compile_vincular(vp))


def vincular_count(host: Permutation, vp: VincularPattern | BivincularPattern) -> int:
    return len(vincular_occurrences(host, vp))


def vincular_contains(
    host: Permutation, vp: VincularPattern | BivincularPattern
) -> bool:
    return vincular_count(host, vp) > 0


def barred_contains(host: Permutation, bp: BarredPattern) -> bool:
    """True iff some occurrence of the effective pattern is not part of an
    occurrence of the whole pattern, i.e. no full occurrence restricts to
    it at the unbarred positions.  Avoidance therefore means every
    effective-pattern occurrence extends to a full one."""
    eff_occs = occurrences(host, bp.effective)
    if not eff_occs:
        return False
    unbarred = bp.unbarred_positions
    extendable = {
        tuple(full[i - 1] for i in unbarred)
        for full in occurrences(host, bp.pattern)
    }
    return any(occ not in extendable for occ in eff_occs)


# ---------------------------------------------------------------------------
# Parsing


def _parse_digit(ch: str, position: int) -> int:
    if not ch.isdigit() or ch == "0":
        raise PatternSyntaxError(f"expected a digit 1-9, got {ch!r}", position)
    return int(ch)


def _pattern_from_json(doc: dict, text: str) -> Pattern:
    perm = Permutation(doc["perm"])
    if "shaded" in doc:
        return MeshPattern(perm, frozenset(tuple(c) for c in doc["shaded"]))
    if "adjacent_values" in doc:
        return BivincularPattern(
            perm,
            frozenset(doc.get("adjacent_positions", ())),
            frozenset(doc["adjacent_values"]),
        )
    if "adjacent_positions" in doc:
        return VincularPattern(perm, frozenset(doc["adjacent_positions"]))
    if "barred" in doc:
        return BarredPattern(perm, frozenset(doc["barred"]))
    return perm


def parse_pattern(text: str) -> Pattern:
    """Parse pattern notation.

    Grammar:
      - classical: one-line notation ("231", "2 3 1").
      - vincular: digit groups joined by '-' ("2-31-4"); terms inside a
        group must be adjacent in the host.
      - barred: digits, each optionally followed by a backtick marking a
        bar ("53`21`4" bars the entries 3 and 1).
      - mesh / bivincular: a JSON object, e.g.
        {"perm": [3,2,4,1], "shaded": [[0,2],[1,3],[1,4],[4,2],[4,3]]}
        or {"perm": [...], "adjacent_positions": [...], "adjacent_values": [...]}.
    """
    stripped = text.strip()
    if not stripped:
        raise PatternSyntaxError("empty pattern", 0)
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise PatternSyntaxError(f"bad pattern JSON: {exc.msg}", exc.pos) from None
        return _pattern_from_json(doc, stripped)
    if "-" in stripped:
        values: list[int] = []
        adjacencies: set[int] = set()
        expect_digit = True
        for pos, ch in enumerate(stripped):
            if ch == "-":
                if expect_digit:
                    raise PatternSyntaxError("misplaced '-'", pos)
                expect_digit = True
            else:
                if not expect_digit and values:
                    adjacencies.add(len(values))  # no dash: adjacent to previous
                values.append(_parse_digit(ch, pos))
                expect_digit = False
        if expect_digit:
            raise PatternSyntaxError("pattern ends with '-'", len(stripped) - 1)
        return VincularPattern(Permutation(values), frozenset(adjacencies))
    if "`" in stripped:
        values = []
        barred: set[int] = set()
        for pos, ch in enumerate(stripped):
            if ch == "`":
                if not values or (len(values) in barred):
                    raise PatternSyntaxError("misplaced bar", pos)
                barred.add(len(values))
            else:
                values.append(_parse_digit(ch, pos))
        return BarredPattern(Permutation(values), frozenset(barred))
    from .perm import parse as _parse_perm

    return _parse_perm(stripped)
