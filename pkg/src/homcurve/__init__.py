"""Homologous multicurves on closed oriented surfaces.

Multicurves live on combinatorial maps; the overlap function measures their
homological distance, middle paths realize it, and paths with side choices
describe surfaces in S x I.
"""

from .errors import TopologyError
from .instances import gen_bounding_pair, gen_disjoint_cobounding, gen_quasiflat, parse, serialize
from .overlap import homological_distance, overlap_field
from .pathfinder import cc_geodesic, middle_path
from .surface import CombinatorialMap, Configuration, validate_configuration
from .threespace import minimal_genus

__version__ = "0.1.0"

__all__ = [
    "CombinatorialMap", "Configuration", "TopologyError", "cc_geodesic", "gen_bounding_pair",
    "gen_disjoint_cobounding", "gen_quasiflat", "homological_distance", "middle_path",
    "minimal_genus", "overlap_field", "parse", "serialize", "validate_configuration",
]
