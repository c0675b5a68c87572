"""Gorenstein classification of splitting loci, by two independent routes.

:func:`classify` reads the verdict off the combinatorics of the type (block
arithmetic progressions, contiguity).  :func:`classify_via_class_group`
computes the order of the canonical class in the class group of the affine
model.  :func:`crosscheck` compares them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator

from .classgroup import canonical_class, deltas, element_order, quotient_group
from .splitting import SplittingType, parse_type


class Kind(enum.Enum):
    GORENSTEIN = "gorenstein"
    N_GORENSTEIN = "N-gorenstein"
    NOT_Q_GORENSTEIN = "not-Q-gorenstein"


class Path(enum.Enum):
    CRITERION = "criterion"
    CLASS_GROUP = "class_group"


@dataclass(frozen=True)
class GorensteinVerdict:
    kind: Kind
    path: Path
    min_n: int | None = None
    witness: dict[str, Any] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind is Kind.N_GORENSTEIN:
            if self.min_n is None or self.min_n < 2:
                raise ValueError("an N-Gorenstein verdict needs min_n >= 2")
        elif self.kind is Kind.GORENSTEIN:
            object.__setattr__(self, "min_n", 1)
        elif self.min_n is not None:
            raise ValueError("a not-Q-Gorenstein verdict carries no min_n")

    @property
    def key(self) -> tuple[Kind, int | None]:
        """What two paths must agree on."""
        return (self.kind, self.min_n)

    def __str__(self):
        if self.kind is Kind.N_GORENSTEIN:
            return f"N-gorenstein:N={self.min_n}"
        return self.kind.value

    def to_json(self) -> dict:
        return {
            "verdict": str(self),
            "kind": self.kind.value,
            "min_n": self.min_n,
            "path": self.path.value,
            "witness": self.witness,
        }

    @classmethod
    def from_json(cls, data: dict) -> GorensteinVerdict:
        return cls(Kind(data["kind"]), Path(data["path"]), data["min_n"], data["witness"])


@dataclass(frozen=True)
class BlockAPMatches:
    """The ``(s, t)`` for which ``e`` is a shift of ``(0^s, t^s, ..., ((m-1)t)^s)``.

    A constant tuple of rank ``r`` is the single block ``0^r`` and so matches
    ``(r, t)`` for *every* ``t >= 0``; that family is ``any_difference_size``
    rather than being listed in ``pairs``.
    """

    pairs: frozenset[tuple[int, int]]
    any_difference_size: int | None = None

    def __contains__(self, item) -> bool:
        s, t = item
        if (s, t) in self.pairs:
            return True
        return s == self.any_difference_size and t >= 0

    def __bool__(self):
        return bool(self.pairs) or self.any_difference_size is not None

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs))

    def has_difference(self, t: int) -> bool:
        return self.any_difference_size is not None or any(d == t for _, d in self.pairs)


def is_block_ap(e: SplittingType) -> BlockAPMatches:
    f, s = e.values, e.multiplicities
    if e.length == 1:
        r = e.rank
        return BlockAPMatches(
            frozenset((d, 0) for d in range(1, r + 1) if r % d == 0), r
        )
    gaps = {b - a for a, b in zip(f, f[1:])}
    if len(set(s)) == 1 and len(gaps) == 1:
        return BlockAPMatches(frozenset({(s[0], gaps.pop())}))
    return BlockAPMatches(frozenset())


def is_contiguous(e: SplittingType) -> bool:
    """Consecutive values whose multiplicities alternate ``a, b, a, b, ...``."""
    f, s = e.values, e.multiplicities
    if any(b - a != 1 for a, b in zip(f, f[1:])):
        return False
    return all(s[i] == s[i - 2] for i in range(2, len(s)))


def is_ap(e: SplittingType) -> int | None:
    """The difference of an arithmetic progression (all blocks of size 1)."""
    if any(m != 1 for m in e.multiplicities):
        return None
    if e.rank == 1:
        return 0
    f = e.values
    gaps = {b - a for a, b in zip(f, f[1:])}
    return gaps.pop() if len(gaps) == 1 else None


def ap_min_n(t: int) -> int:
    return t if t % 2 else t // 2


def classify(e: SplittingType) -> GorensteinVerdict:
    matches = is_block_ap(e)
    for t in (0, 1, 2):
        hit = next((s for s, d in matches if d == t), None)
        if hit is None and matches.any_difference_size is not None:
            hit = matches.any_difference_size
        if hit is not None:
            return GorensteinVerdict(
                Kind.GORENSTEIN, Path.CRITERION,
                witness={"pattern": "block_ap", "block_size": hit, "difference": t},
            )
    if is_contiguous(e):
        return GorensteinVerdict(
            Kind.GORENSTEIN, Path.CRITERION, witness={"pattern": "contiguous"}
        )
    t = is_ap(e)
    if t is not None and t >= 3:
        return GorensteinVerdict(
            Kind.N_GORENSTEIN, Path.CRITERION, ap_min_n(t),
            witness={"pattern": "ap", "difference": t},
        )
    return GorensteinVerdict(Kind.NOT_Q_GORENSTEIN, Path.CRITERION, witness={"pattern": None})


def classify_via_class_group(e: SplittingType) -> GorensteinVerdict:
    omega = canonical_class(e)
    group = quotient_group(e)
    order = element_order(e, omega, group)
    witness = {"order": None if order == math.inf else order, "group": str(group),
               "canonical_class": omega.to_json()}
    if order == 1:
        return GorensteinVerdict(Kind.GORENSTEIN, Path.CLASS_GROUP, witness=witness)
    if order == math.inf:
        return GorensteinVerdict(Kind.NOT_Q_GORENSTEIN, Path.CLASS_GROUP, witness=witness)
    return GorensteinVerdict(Kind.N_GORENSTEIN, Path.CLASS_GROUP, int(order), witness=witness)


@dataclass(frozen=True)
class Proportionality:
    delta_f: tuple[int, ...]
    delta_delta: tuple[int, ...]
    proportional: bool
    ratio: Fraction | None


def proportionality_diagnostic(e: SplittingType) -> Proportionality:
    """Compare consecutive differences of the values and of the ``delta_i``."""
    if e.length < 2:
        raise ValueError("no consecutive blocks")
    f, dl = e.values, deltas(e)
    df = tuple(b - a for a, b in zip(f, f[1:]))
    dd = tuple(b - a for a, b in zip(dl, dl[1:]))
    q = Fraction(dd[0], df[0])
    ok = all(Fraction(y, x) == q for x, y in zip(df, dd))
    return Proportionality(df, dd, ok, q if ok else None)


@dataclass(frozen=True)
class CrossCheck:
    type: SplittingType
    criterion: GorensteinVerdict
    class_group: GorensteinVerdict

    @property
    def agree(self) -> bool:
        return self.criterion.key == self.class_group.key

    def to_json(self) -> dict:
        return {
            "type": str(self.type),
            "agree": self.agree,
            "criterion": self.criterion.to_json(),
            "class_group": self.class_group.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> CrossCheck:
        return cls(
            parse_type(data["type"]),
            GorensteinVerdict.from_json(data["criterion"]),
            GorensteinVerdict.from_json(data["class_group"]),
        )


def crosscheck(e: SplittingType) -> CrossCheck:
    return CrossCheck(e, classify(e), classify_via_class_group(e))
