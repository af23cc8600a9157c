"""Mesh patterns: a small permutation together with a set of shaded grid boxes.

A mesh pattern of length k is a pair (tau, R) where tau is a permutation of
1..k and R is a set of boxes (i, j) with 0 <= i, j <= k.  An *occurrence* of
the pattern in a host permutation s of length n is a choice of positions
q_1 < ... < q_k whose values are order-isomorphic to tau such that, writing
r_1 < ... < r_k for those values in increasing order and padding both lists
with the sentinels q_0 = r_0 = 0 and q_{k+1} = r_{k+1} = n+1, every shaded box
(i, j) corresponds to an empty region of the host's plot: no element of s sits
strictly between positions q_i and q_{i+1} with value strictly between r_j and
r_{j+1}.

The module also carries the catalog of short patterns this package knows
closed distribution results for ("solved") or only exhaustive data for
("open"), plus a compact text format with a parser and renderer.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .kings import Perm, is_permutation

Box = tuple[int, int]


class PatternSyntaxError(ValueError):
    """Pattern text rejected; ``position`` is the offset of the offending char."""

    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at position {position})")


@dataclass(frozen=True)
class MeshPattern:
    tau: Perm
    shaded: frozenset[Box]

    def __post_init__(self):
        tau = tuple(self.tau)
        boxes = frozenset((int(i), int(j)) for i, j in self.shaded)
        if not is_permutation(tau):
            raise ValueError(f"tau is not a permutation of 1..{len(tau)}: {tau}")
        k = len(tau)
        for i, j in boxes:
            if not (0 <= i <= k and 0 <= j <= k):
                raise ValueError(f"box {(i, j)} outside [0,{k}]x[0,{k}]")
        object.__setattr__(self, "tau", tau)
        object.__setattr__(self, "shaded", boxes)

    @property
    def length(self) -> int:
        return len(self.tau)

    def __str__(self) -> str:
        return render_pattern(self)


@dataclass(frozen=True)
class CatalogEntry:
    ident: str
    pattern: MeshPattern
    status: str  # "solved" or "open"


# Catalog of length-1 and length-2 patterns.  Identifiers follow the numbering
# used across the mesh-pattern literature; X and X' are the two length-1
# patterns whose occurrences are the "strong" points of a permutation.
_SOLVED_SPECS: tuple[tuple[str, tuple[int, ...], tuple[Box, ...]], ...] = (
    ("X", (1,), ((0, 1), (1, 0))),
    ("X'", (1,), ((0, 0), (1, 1))),
    ("10", (1, 2), ((0, 0), (0, 1), (0, 2), (2, 0), (2, 1), (2, 2))),
    ("11", (1, 2), tuple((i, j) for i in range(3) for j in range(3))),
    ("12", (1, 2), ((0, 0), (0, 1), (0, 2), (1, 0), (2, 0))),
    ("13", (1, 2), ((0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1), (2, 2))),
    ("14", (1, 2), ((0, 1), (1, 0), (1, 1), (1, 2), (2, 1))),
    ("16", (1, 2), ((0, 1), (0, 2), (1, 0), (2, 0))),
    ("17", (1, 2), ((0, 0), (0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))),
    ("19", (1, 2), ((0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 2))),
    ("20", (1, 2), ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 0), (2, 1))),
    ("22", (1, 2), ((0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 2))),
    ("27", (1, 2), ((0, 1), (0, 2), (1, 0), (1, 1), (2, 0), (2, 2))),
    ("28", (1, 2), ((0, 0), (0, 1), (1, 0), (1, 2), (2, 1), (2, 2))),
    ("30", (1, 2), ((0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 0), (2, 1))),
    ("33", (1, 2), ((0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1))),
    ("34", (1, 2), ((0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1), (2, 2))),
    ("36", (1, 2), ((0, 0), (0, 1), (1, 0), (1, 1), (1, 2), (2, 1))),
    ("45", (1, 2), ((0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 1))),
    ("55", (1, 2), ((0, 0), (0, 1), (1, 1), (1, 2), (2, 0), (2, 1))),
    ("63", (1, 2), ((0, 0), (0, 1), (1, 2), (2, 0), (2, 1))),
    ("64", (1, 2), ((0, 1), (0, 2), (1, 1), (1, 2), (2, 0))),
)

_OPEN_SPECS: tuple[tuple[str, tuple[int, ...], tuple[Box, ...]], ...] = (
    ("3", (1, 2), ((0, 0), (0, 1), (1, 2))),
    ("5", (1, 2), ((0, 0), (0, 1), (0, 2))),
    ("8", (1, 2), ((0, 0), (0, 1), (1, 0), (1, 1))),
    ("9", (1, 2), ((0, 1), (1, 1), (1, 2), (2, 1))),
    ("15", (1, 2), ((0, 1), (0, 2), (1, 0), (1, 1), (1, 2))),
    ("18", (1, 2), ((0, 0), (0, 1), (0, 2), (1, 2), (2, 0), (2, 2))),
    ("21", (1, 2), ((0, 0), (0, 1), (1, 2), (2, 0), (2, 2))),
    ("56", (1, 2), ((0, 0), (0, 1), (1, 1), (1, 2), (2, 1), (2, 2))),
    ("65", (1, 2), ((0, 0), (0, 1), (1, 0), (1, 1), (2, 2))),
    ("66", (1, 2), ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0))),
)

_CATALOG: tuple[CatalogEntry, ...] = tuple(
    CatalogEntry(ident, MeshPattern(tau, frozenset(boxes)), status)
    for specs, status in ((_SOLVED_SPECS, "solved"), (_OPEN_SPECS, "open"))
    for ident, tau, boxes in specs
)
_BY_IDENT = {e.ident: e for e in _CATALOG}

SOLVED_IDS: tuple[str, ...] = tuple(e.ident for e in _CATALOG if e.status == "solved")
OPEN_IDS: tuple[str, ...] = tuple(e.ident for e in _CATALOG if e.status == "open")

# A permutation is a king permutation exactly when it avoids both of these:
# an adjacent pair of consecutive increasing values, and the decreasing twin.
_CROSS = frozenset({(0, 1), (1, 0), (1, 1), (1, 2), (2, 1)})
KING_CROSS_UP = MeshPattern((1, 2), _CROSS)
KING_CROSS_DOWN = MeshPattern((2, 1), _CROSS)


def catalog() -> tuple[CatalogEntry, ...]:
    return _CATALOG


def catalog_entry(ident: str | int) -> CatalogEntry:
    entry = _BY_IDENT.get(str(ident))
    if entry is None:
        raise KeyError(f"no catalog pattern {ident!r}")
    return entry


def catalog_pattern(ident: str | int) -> MeshPattern:
    return catalog_entry(ident).pattern


# ---------------------------------------------------------------------------
# Text format:  pattern := "mesh(" k ";" tau ";" boxes ")" | "nr:" ident
#               tau     := digit+ | int (";" int)*
#               boxes   := "{" [box ("," box)*] "}" ;  box := "(" int "," int ")"
# Whitespace is ignored everywhere.
# ---------------------------------------------------------------------------


def render_pattern(p: MeshPattern) -> str:
    k = p.length
    if k and max(p.tau) > 9:
        tau = ";".join(str(v) for v in p.tau)
    else:
        tau = "".join(str(v) for v in p.tau)
    boxes = ",".join(f"({i},{j})" for i, j in sorted(p.shaded))
    return f"mesh({k};{tau};{{{boxes}}})"


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, literal: str) -> None:
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            raise PatternSyntaxError(f"expected {literal!r}", self.pos)
        self.pos += len(literal)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PatternSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    def done(self) -> None:
        self.skip_ws()
        if self.pos != len(self.text):
            raise PatternSyntaxError("trailing input", self.pos)


def parse_pattern(text: str) -> MeshPattern:
    """Parse the text format; ``nr:<ident>`` pulls the pattern from the catalog.

    >>> parse_pattern("mesh(1;1;{(0,1),(1,0)})") == catalog_pattern("X")
    True
    """
    s = _Scanner(text)
    if s.peek() == "n":
        s.expect("nr:")
        s.skip_ws()
        ident = text[s.pos :].strip()
        if not ident:
            raise PatternSyntaxError("missing catalog identifier", s.pos)
        entry = _BY_IDENT.get(ident) or _BY_IDENT.get(ident.upper())
        if entry is None:
            raise PatternSyntaxError(f"unknown catalog identifier {ident!r}", s.pos)
        return entry.pattern
    s.expect("mesh")
    s.expect("(")
    k = s.integer()
    s.expect(";")
    tau = _parse_tau(s, k)
    s.expect(";")
    boxes = _parse_boxes(s, k)
    s.expect(")")
    s.done()
    tau_start = len("mesh(")
    if not is_permutation(tau):
        raise PatternSyntaxError(f"tau {tau} is not a permutation of 1..{k}", tau_start)
    return MeshPattern(tau, frozenset(boxes))


def _parse_tau(s: _Scanner, k: int) -> tuple[int, ...]:
    # The digit-string form and the ";"-separated form share the ";" that also
    # precedes the boxes, so look ahead: values run until the ";" followed by "{".
    start = s.pos
    first = s.integer()
    values = [first]
    while True:
        save = s.pos
        if s.peek() != ";":
            break
        s.expect(";")
        if s.peek() == "{":
            s.pos = save
            break
        values.append(s.integer())
    if len(values) == 1 and k != 1 and len(str(first)) == k:
        values = [int(ch) for ch in str(first)]  # digit-string form
    if len(values) != k:
        raise PatternSyntaxError(
            f"expected {k} pattern values, got {len(values)}", start
        )
    return tuple(values)


def _parse_boxes(s: _Scanner, k: int) -> list[Box]:
    s.expect("{")
    boxes: list[Box] = []
    if s.peek() == "}":
        s.expect("}")
        return boxes
    while True:
        s.expect("(")
        where = s.pos
        i = s.integer()
        s.expect(",")
        j = s.integer()
        s.expect(")")
        if not (0 <= i <= k and 0 <= j <= k):
            raise PatternSyntaxError(f"box ({i},{j}) outside [0,{k}]x[0,{k}]", where)
        boxes.append((i, j))
        if s.peek() == ",":
            s.expect(",")
            continue
        s.expect("}")
        return boxes


# ---------------------------------------------------------------------------
# Occurrence counting.
# ---------------------------------------------------------------------------


def _prefix_matrix(perm: Sequence[int]) -> list[list[int]]:
    """M[p][v] = number of entries at position <= p with value <= v (0-based
    sentinels included), so any axis-aligned open region is counted in O(1)."""
    n = len(perm)
    rows = [[0] * (n + 1)]
    prev = rows[0]
    for x in perm:
        row = prev[:]
        for v in range(x, n + 1):
            row[v] += 1
        rows.append(row)
        prev = row
    return rows


def _region_mask(m: list[list[int]], qs: Sequence[int], rs: Sequence[int], k: int, n: int) -> int:
    """Bitmask of nonempty regions for an occurrence candidate; bit i*(k+1)+j
    corresponds to box (i, j)."""
    q = (0,) + tuple(qs) + (n + 1,)
    r = (0,) + tuple(rs) + (n + 1,)
    mask = 0
    bit = 1
    for i in range(k + 1):
        top = m[q[i + 1] - 1]
        bot = m[q[i]]
        for j in range(k + 1):
            if (top[r[j + 1] - 1] - bot[r[j + 1] - 1]) - (top[r[j]] - bot[r[j]]):
                mask |= bit
            bit <<= 1
    return mask


def _box_mask(p: MeshPattern) -> int:
    k = p.length
    mask = 0
    for i, j in p.shaded:
        mask |= 1 << (i * (k + 1) + j)
    return mask


def occurrence_counts(patterns: Sequence[MeshPattern], perm: Sequence[int]) -> list[int]:
    """Occurrence counts of several patterns in one pass over the host.

    Work per candidate subset is shared: the region-emptiness mask is computed
    once and each pattern contributes a single AND against its shaded mask.
    Candidate pairs get a hand-tightened loop because the whole catalog has
    length <= 2.
    """
    n = len(perm)
    counts = [0] * len(patterns)
    groups: dict[Perm, list[tuple[int, int]]] = {}
    for idx, p in enumerate(patterns):
        groups.setdefault(p.tau, []).append((idx, _box_mask(p)))
    m = _prefix_matrix(perm)
    for tau, members in groups.items():
        k = len(tau)
        if k == 0:
            # single empty occurrence candidate
            mask = _region_mask(m, (), (), 0, n)
            for idx, pmask in members:
                if not mask & pmask:
                    counts[idx] += 1
        elif k == 1:
            _count_singles(m, perm, members, counts)
        elif k == 2:
            _count_pairs(m, perm, tau == (1, 2), members, counts)
        else:
            _count_generic(m, perm, tau, members, counts)
    return counts


def _count_singles(m, perm, members, counts) -> None:
    n = len(perm)
    mn = m[n]
    for pos in range(1, n + 1):
        a = perm[pos - 1]
        top = m[pos - 1]
        c00 = top[a - 1]
        c01 = (pos - 1) - top[a]
        c10 = mn[a - 1] - m[pos][a - 1]
        c11 = (n - pos) - (mn[a] - m[pos][a])
        mask = (1 if c00 else 0) | (2 if c01 else 0) | (4 if c10 else 0) | (8 if c11 else 0)
        for idx, pmask in members:
            if not mask & pmask:
                counts[idx] += 1


def _count_pairs(m, perm, increasing: bool, members, counts) -> None:
    n = len(perm)
    mn = m[n]
    for i in range(1, n):
        x = perm[i - 1]
        mtop_i = m[i - 1]
        mbot_i = m[i]
        for j in range(i + 1, n + 1):
            y = perm[j - 1]
            if (y > x) != increasing:
                continue
            a, b = (x, y) if x < y else (y, x)
            mtop_j = m[j - 1]
            mbot_j = m[j]
            mask = 0
            if mtop_i[a - 1]:
                mask |= 1
            if mtop_i[b - 1] - mtop_i[a]:
                mask |= 2
            if (i - 1) - mtop_i[b]:
                mask |= 4
            if mtop_j[a - 1] - mbot_i[a - 1]:
                mask |= 8
            if (mtop_j[b - 1] - mbot_i[b - 1]) - (mtop_j[a] - mbot_i[a]):
                mask |= 16
            if (j - 1 - i) - (mtop_j[b] - mbot_i[b]):
                mask |= 32
            if mn[a - 1] - mbot_j[a - 1]:
                mask |= 64
            if (mn[b - 1] - mbot_j[b - 1]) - (mn[a] - mbot_j[a]):
                mask |= 128
            if (n - j) - (mn[b] - mbot_j[b]):
                mask |= 256
            for idx, pmask in members:
                if not mask & pmask:
                    counts[idx] += 1


def _count_generic(m, perm, tau, members, counts) -> None:
    n = len(perm)
    k = len(tau)
    for qs in combinations(range(1, n + 1), k):
        values = tuple(perm[q - 1] for q in qs)
        if reduced_pattern(values) != tau:
            continue
        mask = _region_mask(m, qs, tuple(sorted(values)), k, n)
        for idx, pmask in members:
            if not mask & pmask:
                counts[idx] += 1


def reduced_pattern(values: Sequence[int]) -> Perm:
    rank = {v: i + 1 for i, v in enumerate(sorted(values))}
    return tuple(rank[v] for v in values)


def count_occurrences(p: MeshPattern, perm: Sequence[int]) -> int:
    """Number of occurrences of p in perm under the shaded-region semantics.

    >>> count_occurrences(catalog_pattern("X"), (1, 3, 5, 2, 4))
    1
    """
    return occurrence_counts((p,), perm)[0]


def avoids(p: MeshPattern, perm: Sequence[int]) -> bool:
    """True when perm contains no occurrence of p (early exit on the first hit)."""
    n = len(perm)
    k = p.length
    pmask = _box_mask(p)
    m = _prefix_matrix(perm)
    for qs in combinations(range(1, n + 1), k):
        values = tuple(perm[q - 1] for q in qs)
        if reduced_pattern(values) != p.tau:
            continue
        if not _region_mask(m, qs, tuple(sorted(values)), k, n) & pmask:
            return False
    return True
