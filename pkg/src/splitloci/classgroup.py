"""Divisor classes on splitting loci in their affine extension-space model.

Classes are coefficient vectors over the basis ``a_1^(1), ..., a_1^(l)``
followed by the classes ``b_2^(i)`` of the codimension-one strata.  A
:class:`DivisorClass` keeps one ``b`` slot per block; slots of blocks without
a codimension-one unbalancing are always zero.  The *ambient coordinates* of
a class drop those slots: the ``a`` part followed by ``b`` at
:func:`valid_b_indices` in ascending order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .smith import diagonal, identity, matvec, smith_normal_form, transpose
from .splitting import SplittingType, dominates, valid_b_indices

INFINITE = math.inf


class InadmissibleModel(ValueError):
    pass


@dataclass(frozen=True)
class DivisorClass:
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if len(self.a) != len(self.b):
            raise ValueError("a and b coefficient vectors differ in length")

    @classmethod
    def zero(cls, length: int) -> DivisorClass:
        return cls((0,) * length, (0,) * length)

    def __add__(self, other: DivisorClass) -> DivisorClass:
        return DivisorClass(
            tuple(x + y for x, y in zip(self.a, other.a)),
            tuple(x + y for x, y in zip(self.b, other.b)),
        )

    def __neg__(self) -> DivisorClass:
        return DivisorClass(tuple(-x for x in self.a), tuple(-x for x in self.b))

    def __sub__(self, other: DivisorClass) -> DivisorClass:
        return self + (-other)

    def __mul__(self, k: int) -> DivisorClass:
        return DivisorClass(tuple(k * x for x in self.a), tuple(k * x for x in self.b))

    __rmul__ = __mul__

    def masked(self, e: SplittingType) -> DivisorClass:
        """Zero the ``b`` slots of blocks with no codimension-one stratum."""
        valid = set(valid_b_indices(e))
        return DivisorClass(
            self.a, tuple(x if i + 1 in valid else 0 for i, x in enumerate(self.b))
        )

    def respects_support(self, e: SplittingType) -> bool:
        return len(self.a) == e.length and self.masked(e) == self

    def __str__(self):
        return f"a=[{', '.join(map(str, self.a))}] b=[{', '.join(map(str, self.b))}]"

    def to_json(self) -> dict:
        return {"a": list(self.a), "b": list(self.b)}

    @classmethod
    def from_json(cls, data: dict) -> DivisorClass:
        return cls(tuple(data["a"]), tuple(data["b"]))


@dataclass(frozen=True)
class RelationLattice:
    alpha1: DivisorClass
    alpha2: DivisorClass
    M: int

    @property
    def generators(self) -> tuple[DivisorClass, DivisorClass]:
        return (self.alpha1, self.alpha2)


@dataclass(frozen=True)
class AbelianGroup:
    """``Z^n / L`` presented through a Smith normal form of ``L``.

    ``basis_transform`` is a unimodular ``n x n`` matrix; in the coordinates
    ``y = basis_transform @ x`` the lattice is spanned by ``d_k * unit(k)``
    for ``d_k`` in ``diagonal``.  The first ``len(diagonal)`` coordinates are
    therefore cyclic (trivial where ``d_k == 1``) and the rest are free.
    """

    free_rank: int
    diagonal: tuple[int, ...]
    basis_transform: tuple[tuple[int, ...], ...]

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    @property
    def exponent(self) -> int | float:
        if self.free_rank:
            return INFINITE
        return math.lcm(*self.invariant_factors) if self.invariant_factors else 1

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.invariant_factors)
        return " ⊕ ".join(parts) if parts else "trivial group"

    def to_json(self) -> dict:
        return {
            "free_rank": self.free_rank,
            "invariant_factors": list(self.invariant_factors),
            "diagonal": list(self.diagonal),
            "basis_transform": [list(row) for row in self.basis_transform],
        }

    @classmethod
    def from_json(cls, data: dict) -> AbelianGroup:
        return cls(
            data["free_rank"],
            tuple(data["diagonal"]),
            tuple(tuple(row) for row in data["basis_transform"]),
        )


def _unit(length: int, i: int) -> tuple[int, ...]:
    return tuple(int(k == i - 1) for k in range(length))


def deltas(e: SplittingType) -> list[int]:
    """``delta_i = sum_{j<i} s_j - sum_{j>i} s_j``."""
    s = e.multiplicities
    return [sum(s[:i]) - sum(s[i + 1:]) for i in range(len(s))]


def canonical_class(e: SplittingType) -> DivisorClass:
    """Class of the canonical module, normalized for the affine model.

    The ambient space is affine, so only the intrinsic sum survives.
    """
    d, r = e.degree, e.rank
    valid = set(valid_b_indices(e))
    a = [d - r * f + dl for f, dl in zip(e.values, deltas(e))]
    b = [r - s if i + 1 in valid else 0 for i, s in enumerate(e.multiplicities)]
    return DivisorClass(tuple(a), tuple(b))


def model_degree(e: SplittingType, M: int) -> int:
    """The ``D`` making ``((-M)^{r-1}, D)`` degree-matched with ``e``."""
    return e.degree + (e.rank - 1) * M


def model_type(e: SplittingType, M: int) -> SplittingType:
    return SplittingType((-M,) * (e.rank - 1) + (model_degree(e, M),))


def is_admissible(e: SplittingType, M: int) -> bool:
    """Whether ``((-M)^{r-1}, D)`` lies strictly below ``e``."""
    if e.rank < 2 or model_degree(e, M) < -M:
        return False
    model = model_type(e, M)
    return model != e and dominates(model, e)


def relation_classes(e: SplittingType, M: int) -> RelationLattice:
    """The two excised classes ``alpha_1, alpha_2`` for the model at ``M``."""
    if not is_admissible(e, M):
        raise InadmissibleModel("affine model does not dominate")
    valid = set(valid_b_indices(e))
    ones = [int(i + 1 in valid) for i in range(e.length)]
    f = e.values
    alpha1 = DivisorClass(tuple(-(x + M) for x in f), tuple(ones))
    alpha2 = DivisorClass(tuple(x + M + 1 for x in f), tuple(-y for y in ones))
    return RelationLattice(alpha1, alpha2, M)


def reduced_relations(e: SplittingType) -> tuple[DivisorClass, DivisorClass]:
    """``sum a_1^(i)`` and ``sum (f_i a_1^(i) - b_2^(i))``: no dependence on M."""
    valid = set(valid_b_indices(e))
    n = e.length
    total = DivisorClass((1,) * n, (0,) * n)
    shifted = DivisorClass(
        e.values, tuple(-int(i + 1 in valid) for i in range(n))
    )
    return total, shifted


def c1_pushforward_twist(e: SplittingType, i: int, M: int) -> DivisorClass:
    """``(M+1) a_1^(i) - b_2^(i)``, with ``b_2^(i) = 0`` off the valid blocks."""
    if not 1 <= i <= e.length:
        raise IndexError(f"block index {i} out of range 1..{e.length}")
    n = e.length
    unit = _unit(n, i)
    return DivisorClass(
        tuple((M + 1) * x for x in unit), tuple(-x for x in unit)
    ).masked(e)


def to_ambient(e: SplittingType, c: DivisorClass) -> list[int]:
    if not c.respects_support(e):
        raise ValueError(f"class {c} has b-coefficients off the valid blocks of {e}")
    return list(c.a) + [c.b[i - 1] for i in valid_b_indices(e)]


def from_ambient(e: SplittingType, x: Sequence[int]) -> DivisorClass:
    n = e.length
    b = [0] * n
    for i, v in zip(valid_b_indices(e), x[n:]):
        b[i - 1] = v
    return DivisorClass(tuple(x[:n]), tuple(b))


def present(e: SplittingType, relations: Sequence[DivisorClass]) -> AbelianGroup:
    """The quotient of the ambient lattice by the given relations."""
    n = e.length + len(valid_b_indices(e))
    cols = [to_ambient(e, c) for c in relations]
    if not cols:
        return AbelianGroup(n, (), tuple(tuple(row) for row in identity(n)))
    A = transpose(cols)  # relations as columns
    U, S, _ = smith_normal_form(A)
    diag = tuple(d for d in diagonal(S) if d)
    return AbelianGroup(n - len(diag), diag, tuple(tuple(row) for row in U))


def quotient_group(e: SplittingType, M: int | None = None) -> AbelianGroup:
    """``A^1`` of the splitting locus in the affine model.

    With ``M`` the relations ``alpha_1, alpha_2`` of that model are used;
    otherwise the M-free generators from :func:`reduced_relations`.
    """
    if M is None:
        return present(e, reduced_relations(e))
    return present(e, relation_classes(e, M).generators)


def element_order(
    e: SplittingType, c: DivisorClass, group: AbelianGroup | None = None
) -> int | float:
    """Least ``N >= 1`` with ``N c`` in the relation lattice, else ``inf``."""
    if group is None:
        group = quotient_group(e)
    y = matvec(group.basis_transform, to_ambient(e, c))
    k = len(group.diagonal)
    if any(y[k:]):
        return INFINITE
    return math.lcm(*(d // math.gcd(d, v) for d, v in zip(group.diagonal, y)))


def in_lattice(e: SplittingType, c: DivisorClass, group: AbelianGroup | None = None) -> bool:
    return element_order(e, c, group) == 1
