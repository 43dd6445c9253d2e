"""Exact invariants of matroid basis-monomial ideals.

The package computes, in exact integer arithmetic throughout:

* connectivity block decompositions of matroids given by rank oracles,
* graded Betti numbers of the ideal generated by the basis monomials, by
  three independent algorithms (a Hochster-formula homology sweep, a
  block-by-block product, and a closed form for disjoint unions of circuits),
* the inverse problem for the closed form (recovering cycle lengths from a
  Betti vector),
* higher weight hierarchies, again by independent routes, and
* the minimum distance of the dual matroid.

The command line front end lives in ``matroidbetti.cli``.
"""

from .betti import (
    BettiTable,
    CycleProfile,
    betti,
    block_product_betti,
    cactus_betti,
    dual_min_distance,
    hilbert_check,
    hilbert_check_counts,
    hochster_betti,
    invert_cactus_betti,
    resolve_algorithm,
)
from .bitset import bits, complement, k_subsets, k_subsets_of, mask_of
from .complexes import (
    GF2,
    FVector,
    PrimeField,
    SimplicialComplex,
    boundary_rank,
    dual_alexander_complex,
    face_numbers,
    reduced_betti,
)
from .errors import ValidationError
from .graphs import (
    CactusCertificate,
    Graph,
    cycle_matroid,
    fixture,
    is_cactus,
    random_cactus,
)
from .matroid import (
    Block,
    BlockPartition,
    Matroid,
    direct_sum,
    from_bases,
    multi_uniform,
    uniform,
)
from .weights import (
    CircuitFamily,
    WeightHierarchy,
    block_weights,
    cactus_weights,
    degree_of_nonredundancy,
    is_nonredundant,
    weight_hierarchy,
    weights_via_circuits,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "Block",
    "BlockPartition",
    "CactusCertificate",
    "CircuitFamily",
    "CycleProfile",
    "FVector",
    "GF2",
    "Graph",
    "Matroid",
    "PrimeField",
    "SimplicialComplex",
    "ValidationError",
    "WeightHierarchy",
    "betti",
    "bits",
    "block_product_betti",
    "block_weights",
    "boundary_rank",
    "cactus_betti",
    "cactus_weights",
    "complement",
    "cycle_matroid",
    "degree_of_nonredundancy",
    "direct_sum",
    "dual_alexander_complex",
    "dual_min_distance",
    "face_numbers",
    "fixture",
    "from_bases",
    "hilbert_check",
    "hilbert_check_counts",
    "hochster_betti",
    "invert_cactus_betti",
    "is_cactus",
    "is_nonredundant",
    "k_subsets",
    "k_subsets_of",
    "mask_of",
    "multi_uniform",
    "random_cactus",
    "reduced_betti",
    "resolve_algorithm",
    "uniform",
    "weight_hierarchy",
    "weights_via_circuits",
    "__version__",
]
