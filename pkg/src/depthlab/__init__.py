"""Exact treedepth, 2-treedepth and pathwidth toolkit for small graphs."""

from depthlab.errors import CapacityError, DepthLabError, InvalidInputError
from depthlab.graph import (
    Graph,
    build_graph,
    components,
    diameter,
    induced_subgraph,
    is_apex,
    is_induced_path,
)
from depthlab.blocks import (
    BlockForest,
    block_forest,
    blocks,
    cut_vertices,
    forest_diameter,
    verify_p4p5_structure,
)
from depthlab.params import (
    DepthCertificate,
    check_certificate,
    elimination_set,
    treedepth,
    treedepth2,
    treedepth_relative,
)
from depthlab.pathwidth import pathwidth
from depthlab.paths import (
    is_pt_free,
    longest_induced_path,
    longest_induced_s_path,
    longest_path,
)
from depthlab.cores import is_component_wise_connected, is_s_core, minimal_s_core
from depthlab.bounds import f_value, g_lower, g_upper, verify_f_closed_form
from depthlab.constructions import (
    ChainArtifact,
    IntervalRepresentation,
    chain_graph,
    grohe_graph,
    intersection_graph,
    ladder,
)
from depthlab.extraction import extract_induced_path

__version__ = "0.1.0"
