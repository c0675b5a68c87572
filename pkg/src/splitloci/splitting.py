"""Splitting types of vector bundles on the projective line.

A splitting type is an ascending tuple ``e = (e_1 <= ... <= e_r)``.  Most of
the arithmetic is phrased in terms of its *blocks*: the run-length encoding
``(f_1^{s_1}, ..., f_l^{s_l})`` with ``f_1 < ... < f_l``.  Block indices are
1-based throughout the public API, matching the usual notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate, combinations, groupby
from typing import Iterable, Iterator


@dataclass(frozen=True)
class SplittingType:
    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(int(x) for x in self.entries)
        if not entries:
            raise ValueError("empty splitting type")
        if any(a > b for a, b in zip(entries, entries[1:])):
            raise ValueError(f"entries not ascending: {entries}")
        object.__setattr__(self, "entries", entries)

    @cached_property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Run-length encoding ``((f_1, s_1), ..., (f_l, s_l))``."""
        return tuple((f, len(list(run))) for f, run in groupby(self.entries))

    @property
    def values(self) -> tuple[int, ...]:
        return tuple(f for f, _ in self.blocks)

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.blocks)

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int:
        return sum(self.entries)

    @property
    def length(self) -> int:
        """Number of blocks."""
        return len(self.blocks)

    @property
    def spread(self) -> int:
        return self.entries[-1] - self.entries[0]

    def shift(self, c: int) -> SplittingType:
        return SplittingType(tuple(x + c for x in self.entries))

    def normalized(self) -> SplittingType:
        """The shift with smallest entry 0."""
        return self.shift(-self.entries[0])

    def block_str(self) -> str:
        return " ".join(f"({f})^{s}" for f, s in self.blocks)

    def __str__(self):
        return ",".join(map(str, self.entries))

    def __len__(self):
        return self.rank

    def __iter__(self):
        return iter(self.entries)


@dataclass(frozen=True)
class Degeneration:
    """The codimension-one unbalancing of block ``block_index``."""

    block_index: int
    result: SplittingType


def from_entries(values: Iterable[int]) -> SplittingType:
    values = list(values)
    if not values:
        raise ValueError("empty splitting type")
    return SplittingType(tuple(sorted(values)))


def from_blocks(blocks: Iterable[tuple[int, int]]) -> SplittingType:
    out = []
    for f, s in blocks:
        if s < 1:
            raise ValueError(f"block multiplicity must be positive, got {s}")
        out.extend([f] * s)
    return from_entries(out)


def parse_type(text: str) -> SplittingType:
    """Parse ``"-2,0,2"`` (any order, whitespace tolerated)."""
    parts = [p.strip() for p in text.replace(" ", ",").split(",")]
    parts = [p for p in parts if p]
    if not parts:
        raise ValueError("empty splitting type")
    try:
        return from_entries(int(p) for p in parts)
    except ValueError as exc:
        if "empty" in str(exc):
            raise
        raise ValueError(f"cannot parse splitting type {text!r}") from None


def u_invariant(e: SplittingType) -> int:
    """``h^1 End(O(e))``, the codimension of the stratum of type ``e``."""
    return sum(max(0, b - a - 1) for a, b in combinations(e.entries, 2))


def u_invariant_blocks(e: SplittingType) -> int:
    # Same count, summed over pairs of blocks.
    return sum(
        si * sj * (fi - fj - 1)
        for (fj, sj), (fi, si) in combinations(e.blocks, 2)
    )


def dominates(lower: SplittingType, upper: SplittingType) -> bool:
    """True iff ``lower <= upper`` in the specialization order.

    ``lower`` is the more unbalanced type: every ascending partial sum of
    ``lower`` is at most the matching partial sum of ``upper``.
    """
    if lower.rank != upper.rank or lower.degree != upper.degree:
        return False
    return all(
        p <= q
        for p, q in zip(accumulate(lower.entries), accumulate(upper.entries))
    )


def valid_b_indices(e: SplittingType) -> list[int]:
    """Blocks ``i`` (1-based) admitting a codimension-one unbalancing.

    Requires ``s_i >= 2`` and a gap of at least 2 to each neighbouring value.
    """
    blocks = e.blocks
    out = []
    for k, (f, s) in enumerate(blocks):
        if s < 2:
            continue
        if k > 0 and not blocks[k - 1][0] + 1 < f:
            continue
        if k < len(blocks) - 1 and not f < blocks[k + 1][0] - 1:
            continue
        out.append(k + 1)
    return out


def unbalance(e: SplittingType, i: int) -> SplittingType:
    """Replace block ``f_i^{s_i}`` by ``(f_i - 1, f_i^{s_i - 2}, f_i + 1)``."""
    f, s = e.blocks[i - 1]
    if s < 2:
        raise ValueError(f"block {i} has multiplicity {s} < 2")
    entries = list(e.entries)
    entries.remove(f)
    entries.remove(f)
    return from_entries(entries + [f - 1, f + 1])


def codim_one_degenerations(e: SplittingType) -> list[Degeneration]:
    return [Degeneration(i, unbalance(e, i)) for i in valid_b_indices(e)]


def ascending_tuples(rank: int, degree: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """All ascending tuples with entries in ``[lo, hi]`` and the given sum."""
    if rank == 0:
        if degree == 0:
            yield ()
        return
    for first in range(lo, hi + 1):
        rest = degree - first
        # the remaining rank-1 entries lie in [first, hi]
        if not (rank - 1) * first <= rest <= (rank - 1) * hi:
            continue
        for tail in ascending_tuples(rank - 1, rest, first, hi):
            yield (first,) + tail


def enumerate_strata(e: SplittingType, max_codim: int) -> list[SplittingType]:
    """Types ``e' <= e`` with ``u(e') - u(e) <= max_codim``.

    Ordered by codimension, then lexicographically; ``e`` comes first.
    """
    if max_codim < 0:
        raise ValueError("max_codim must be nonnegative")
    budget = u_invariant(e) + max_codim
    # u(e') >= e'_r - e'_1 - 1, e'_1 <= e_1 and e'_r >= e_r bound the window
    lo = e.entries[-1] - budget - 1
    hi = e.entries[0] + budget + 1
    found = []
    for entries in ascending_tuples(e.rank, e.degree, lo, hi):
        cand = SplittingType(entries)
        if dominates(cand, e) and u_invariant(cand) <= budget:
            found.append(cand)
    found.sort(key=lambda t: (u_invariant(t), t.entries != e.entries, t.entries))
    return found


def hasse_diagram(
    e: SplittingType, max_codim: int
) -> list[tuple[SplittingType, SplittingType]]:
    """Covering edges ``(lower, upper)`` of the order restricted to the strata."""
    nodes = enumerate_strata(e, max_codim)
    edges = []
    for x in nodes:
        ups = [y for y in nodes if y != x and dominates(x, y)]
        for y in ups:
            if not any(z != y and dominates(z, y) for z in ups):
                edges.append((x, y))
    return edges


def enumerate_types(
    rank_max: int, spread_max: int, normalize: bool = True
) -> Iterator[SplittingType]:
    """All types with rank <= rank_max and spread <= spread_max.

    With ``normalize`` (the default) only the shift with ``e_1 = 0`` is
    produced; otherwise every type with entries in ``[0, spread_max]``.
    """
    for rank in range(1, rank_max + 1):
        if normalize:
            for tail in _multisets(rank - 1, 0, spread_max):
                yield SplittingType((0,) + tail)
        else:
            for entries in _multisets(rank, 0, spread_max):
                yield SplittingType(entries)


def _multisets(size: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    if size == 0:
        yield ()
        return
    for first in range(lo, hi + 1):
        for tail in _multisets(size - 1, first, hi):
            yield (first,) + tail
