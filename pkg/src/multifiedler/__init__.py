"""Spectral seriation with a multiple Fiedler value.

Build a similarity matrix from a units-by-types data matrix, detect the
multiplicity of the Fiedler value of its Laplacian and list every admissible
ordering of the units: by sorting when the Fiedler value is simple, by the
line-sweep graphical method when it is double, and by Monte Carlo sampling
otherwise.
"""

__version__ = "0.1.0"

from .errors import (
    BadParameter,
    DegenerateBasis,
    DimensionMismatch,
    DisconnectedGraph,
    ExplosionGuard,
    MultipleFiedler,
    NonConvergence,
    SeriationError,
    TooLarge,
    UnsupportedMultiplicity,
)
from .linalg import (
    FiedlerSpace,
    SpectralDecomposition,
    circulant,
    circulant_spectrum,
    degree_matrix,
    fiedler_space,
    laplacian,
    seriation_objective,
    symmetric_eig,
)
from .graphs import (
    gen_cycle,
    gen_family,
    gen_modified_star,
    gen_petersen,
    gen_star,
    is_pre_r_bruteforce,
    is_r_matrix,
    r_form_witness,
    similarity,
)
from .permutations import (
    Leaf,
    PermutationSet,
    PNode,
    QNode,
    canonicalize,
    pq_frontier,
    seriate_simple,
    tie_expand,
)
from .enumeration import (
    LineArrangement,
    build_line_arrangement,
    cone_feasible,
    enumerate_by_oracle,
    graphical_method,
    monte_carlo_method,
    seriate,
)
from . import oracles
