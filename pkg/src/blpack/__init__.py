"""Bottom-left strip packing over an explicit set of rectilinear holes.

Rectangles are placed one at a time, each at the lowest (then leftmost)
position where it touches something on the left and below. The free space
is kept as a list of holes; each search splits a hole into monotone pieces
and sweeps their floors and ceilings.
"""

from .geometry import Packing, Placement, Point, Rect, fits_in_strip, overlaps, packing_height
from .hole_model import (CanonicalOrdering, EdgeClass, Hole, HoleError, classify_all,
                         classify_edge, compute_canonical_ordering, validate_bls)
from .instance_io import (FAMILIES, GeneratorSpec, Instance, ParseError, generate,
                          parse_instance, parse_packing, serialize_instance, serialize_packing)
from .nice_hole_scan import (CandidateStaircase, NiceHole, VisitCounter, all_bl_locs,
                             bottom_function, placing_function, top_function)
from .oracle import (OracleConfig, extract_holes, grid_bl_stable_set, oracle_bl_location,
                     oracle_pack, validate_bl_stability, validate_packing)
from .packer import HoleStore, PackError, PackReport, pack
from .partitioning import (all_bl_locs_bls, compute_anchors, flawed_all_bl_locs_bls,
                           qn_partition, qw_partition)

__version__ = "0.1.0"

__all__ = [
    "Point", "Rect", "Placement", "Packing", "overlaps", "fits_in_strip", "packing_height",
    "Hole", "HoleError", "EdgeClass", "CanonicalOrdering", "classify_edge", "classify_all",
    "compute_canonical_ordering", "validate_bls",
    "Instance", "ParseError", "GeneratorSpec", "FAMILIES", "generate", "parse_instance",
    "parse_packing", "serialize_instance", "serialize_packing",
    "NiceHole", "VisitCounter", "CandidateStaircase", "bottom_function", "top_function",
    "placing_function", "all_bl_locs",
    "OracleConfig", "oracle_bl_location", "oracle_pack", "validate_packing",
    "validate_bl_stability", "extract_holes", "grid_bl_stable_set",
    "HoleStore", "PackError", "PackReport", "pack",
    "compute_anchors", "qw_partition", "qn_partition", "all_bl_locs_bls",
    "flawed_all_bl_locs_bls",
]
