"""Complex unit gain graphs: matrices, spectra, balance and characteristic polynomials."""

from .eigen import Spectrum, eigenvalues, jacobi_eigh, spectra_equal, spectral_radius
from .errors import GainGraphError
from .fuzz import FuzzConfig, random_gain_graph
from .graph import (
    Cycle,
    GainGraph,
    SwitchingFunction,
    apply_switching,
    build,
    cycle_gain,
    is_balanced,
    is_bipartite,
    is_connected,
    negate,
    switching_equivalent,
    underlying,
)
from .matrices import adjacency, degree_matrix, laplacian, norm_adjacency, norm_laplacian, quadratic_form
from .subgraphs import (
    CharPolyCoeffs,
    DissectionSubgraph,
    ElementarySubgraph,
    adjacency_coeffs,
    charpoly_oracle,
    det_adjacency,
    enumerate_cycles,
    enumerate_dissection,
    enumerate_elementary,
    norm_lap_b_coeffs,
    norm_lap_c_coeffs,
)
from .theorems import (
    VerificationReport,
    conjecture_search,
    interlace_check,
    multi_edge_interlace,
    run_fuzz,
    theorem_suite,
)

__all__ = [name for name in dir() if not name.startswith("_")]
