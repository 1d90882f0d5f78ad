"""Star-critical Gallai-Ramsey toolkit.

Builds and verifies the extremal edge colorings behind small Ramsey,
Gallai-Ramsey and star-critical numbers, extracts rainbow-triangle-free
partitions, and recomputes the numbers themselves by pruned exhaustive
search at desk scale.
"""

from ._kernels import backend as kernel_backend
from .core import (
    EdgeColoring,
    Embedding,
    HostGraph,
    TargetGraph,
    TargetProfile,
    canonical_key,
    classify_target,
    clique_graph,
    cycle_graph,
    find_monochromatic,
    find_rainbow_triangle,
    make_coloring,
    path_graph,
    star_graph,
    target_from_name,
)
from .gallai import (
    GallaiPartition,
    find_gallai_partition,
    random_gallai_coloring,
    reduced_coloring,
    verify_gallai_partition,
)

__version__ = "0.1.0"

__all__ = [
    "EdgeColoring",
    "Embedding",
    "GallaiPartition",
    "HostGraph",
    "TargetGraph",
    "TargetProfile",
    "canonical_key",
    "classify_target",
    "clique_graph",
    "cycle_graph",
    "find_gallai_partition",
    "find_monochromatic",
    "find_rainbow_triangle",
    "kernel_backend",
    "make_coloring",
    "path_graph",
    "random_gallai_coloring",
    "reduced_coloring",
    "star_graph",
    "target_from_name",
    "verify_gallai_partition",
    "__version__",
]
