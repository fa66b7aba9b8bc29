"""treedraw: compact grid drawings of trees, exact verification, benchmarks."""

from .tree import (
    Tree,
    ChainRef,
    HeavyPathInfo,
    ParseError,
    MissingSideError,
    parse_tree,
    serialize,
    generate_tree,
    heavy_path_and_centroid,
)
from .drawing import GridDrawing
from .verify import VerifyReport, verify_drawing

__all__ = [
    "Tree",
    "ChainRef",
    "HeavyPathInfo",
    "ParseError",
    "MissingSideError",
    "parse_tree",
    "serialize",
    "generate_tree",
    "heavy_path_and_centroid",
    "GridDrawing",
    "VerifyReport",
    "verify_drawing",
]
