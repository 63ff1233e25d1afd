"""Fixed points, characters and quiver data for the Hilbert scheme and T*Gr(k, n)."""
from .character import Character
from .grassmannian import gr_dual_attracting_split, gr_fixed_point, gr_nn_character, grassmannian_quiver
from .hilbert import hilb_attracting_split, hilb_fixed_point, hilb_tangent, jordan_quiver
from .partitions import (
    Box,
    Partition,
    SubsetPoint,
    arm_leg,
    diagram_from_subset,
    partitions_of,
    subset_from_diagram,
    subsets_of,
)
from .quiver import Arrow, FixedPointData, QuiverData, polarization, specialize_polarization

__all__ = [
    "Arrow",
    "Box",
    "Character",
    "FixedPointData",
    "Partition",
    "QuiverData",
    "SubsetPoint",
    "arm_leg",
    "diagram_from_subset",
    "gr_dual_attracting_split",
    "gr_fixed_point",
    "gr_nn_character",
    "grassmannian_quiver",
    "hilb_attracting_split",
    "hilb_fixed_point",
    "hilb_tangent",
    "jordan_quiver",
    "partitions_of",
    "polarization",
    "specialize_polarization",
    "subset_from_diagram",
    "subsets_of",
]
