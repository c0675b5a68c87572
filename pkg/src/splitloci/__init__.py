"""Gorenstein and Q-Gorenstein splitting loci of vector bundles on P^1."""

from .classgroup import (
    AbelianGroup,
    DivisorClass,
    InadmissibleModel,
    RelationLattice,
    c1_pushforward_twist,
    canonical_class,
    element_order,
    quotient_group,
    reduced_relations,
    relation_classes,
)
from .classifier import (
    GorensteinVerdict,
    Kind,
    Path,
    classify,
    classify_via_class_group,
    crosscheck,
    is_ap,
    is_block_ap,
    is_contiguous,
    proportionality_diagnostic,
)
from .extension import AffineModel, WeightBlock, choose_affine_model, torus_weights
from .smith import smith_normal_form
from .splitting import (
    Degeneration,
    SplittingType,
    codim_one_degenerations,
    dominates,
    enumerate_strata,
    from_entries,
    hasse_diagram,
    parse_type,
    u_invariant,
    valid_b_indices,
)

__version__ = "0.1.0"
