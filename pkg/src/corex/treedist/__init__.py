"""Structural similarity between label-only trees."""
from .encode import FlatTree, TreeEncoder, encode_pair
from .oracle import brute_force_rtdm, brute_force_stm, enumerate_mappings
from .rtdm import UNIT, CostModel, rtdm, rtdm_flat
from .simtree import Mapping, SimTree, from_sexpr, project_sim, to_sexpr, tree, validate_mapping
from .stm import (
    CallCounter,
    simple_tree_matching,
    simple_tree_matching_recursive,
    stm_mapping,
    stm_normalized,
)

__all__ = [
    "CallCounter", "CostModel", "FlatTree", "Mapping", "SimTree", "TreeEncoder", "UNIT",
    "brute_force_rtdm", "brute_force_stm", "encode_pair", "enumerate_mappings", "from_sexpr",
    "project_sim", "rtdm", "rtdm_flat", "simple_tree_matching", "simple_tree_matching_recursive",
    "stm_mapping", "stm_normalized", "to_sexpr", "tree", "validate_mapping",
]
