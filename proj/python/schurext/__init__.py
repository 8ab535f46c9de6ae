"""Exact Ext computations for strict polynomial functors over prime fields."""

from ._core import (
    ParseError,
    classical_split,
    contractions,
    cup_coproduct,
    degree,
    dimension,
    duality,
    ext_dims,
    hom_dim,
    invariants,
    normalize,
    nullspace,
    rank,
    run_suite,
    star_pipeline,
    suite_names,
    swap_square,
)

__all__ = [
    "ParseError",
    "classical_split",
    "contractions",
    "cup_coproduct",
    "degree",
    "dimension",
    "duality",
    "ext_dims",
    "hom_dim",
    "invariants",
    "normalize",
    "nullspace",
    "rank",
    "run_suite",
    "star_pipeline",
    "suite_names",
    "swap_square",
]
