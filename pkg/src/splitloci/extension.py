"""The affine extension-space models and the torus grading on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .classgroup import is_admissible, model_degree, model_type
from .splitting import SplittingType, u_invariant


@dataclass(frozen=True)
class AffineModel:
    """``H^1 End(O(e'))`` for ``e' = ((-M)^{r-1}, D)``, containing the locus of ``e``."""

    M: int
    D: int
    ambient_dim: int
    codim: int
    locus_dim: int

    def to_json(self) -> dict:
        return {
            "M": self.M, "D": self.D, "ambient_dim": self.ambient_dim,
            "codim": self.codim, "locus_dim": self.locus_dim,
        }

    @classmethod
    def from_json(cls, data: dict) -> AffineModel:
        return cls(**{k: data[k] for k in ("M", "D", "ambient_dim", "codim", "locus_dim")})


def minimal_M(e: SplittingType) -> int:
    """Smallest ``M`` whose degree-matched model lies strictly below ``e``.

    Below ``e`` means ``M >= -e_1``; equivalently ``D >= e_r + sum_{1<i<r}
    (e_i - e_1)``.  When ``e = (f^{r-1}, g)`` itself has the model's shape,
    ``M = -f`` reproduces ``e`` and one more step is needed, which is what
    makes ``D > e_r``.
    """
    M = -e.entries[0]
    if not is_admissible(e, M):
        M += 1
    assert is_admissible(e, M) and not is_admissible(e, M - 1)
    return M


def model_for(e: SplittingType, M: int) -> AffineModel:
    if not is_admissible(e, M):
        raise ValueError("affine model does not dominate")
    D = model_degree(e, M)
    ambient = (e.rank - 1) * (M + D - 1)
    codim = u_invariant(e)
    return AffineModel(M, D, ambient, codim, ambient - codim)


def choose_affine_model(e: SplittingType, slack: int = 0) -> AffineModel:
    if e.rank < 2:
        raise ValueError("no extension-space model")
    if slack < 0:
        raise ValueError("slack must be nonnegative")
    return model_for(e, minimal_M(e) + slack)


@dataclass(frozen=True)
class WeightBlock:
    """``Ext^1(O(f_i^{s_i}), O(f_j^{s_j}))`` with ``j < i``, a single weight space."""

    source: int
    target: int
    dimension: int
    multidegree: tuple[int, ...]

    def tsv_row(self) -> str:
        deg = "(" + ",".join(map(str, self.multidegree)) + ")"
        return f"{self.source}\t{self.target}\t{self.dimension}\t{deg}"


def torus_weights(e: SplittingType) -> list[WeightBlock]:
    """Nonzero weight spaces of ``H^1 End(O(e))`` under ``G_m^{l-1}``.

    The pair ``(i, j)`` has weight ``alpha_j alpha_{j+1} ... alpha_{i-1}``.
    Ordered by the span ``i - j``, then by ``j``.
    """
    blocks = e.blocks
    n = len(blocks)
    out = []
    for j, i in combinations(range(1, n + 1), 2):
        (fj, sj), (fi, si) = blocks[j - 1], blocks[i - 1]
        dim = si * sj * (fi - fj - 1)
        if dim == 0:
            continue
        deg = tuple(int(j <= k < i) for k in range(1, n))
        out.append(WeightBlock(i, j, dim, deg))
    out.sort(key=lambda w: (w.source - w.target, w.target))
    return out


def weights_tsv(weights: list[WeightBlock]) -> str:
    return "\n".join(["i\tj\tdim\tmultidegree"] + [w.tsv_row() for w in weights])

