"""magiclab: stabilizer enumeration, magic monotones, and their cross-checks."""

__version__ = "0.1.0"

from .binlin import (
    BitMatrix,
    FieldElement,
    IRREDUCIBLE_POLY,
    field_element,
    field_pow,
    field_trace,
    gf2_nullspace,
    gf2_rank,
    gf2_solve,
)
from .boolfn import (
    BooleanFunction,
    Hypergraph,
    anf_string,
    characteristic_function,
    dmin_bound_from_chi,
    from_truth_table,
    hypergraph_state,
    nonquadraticity,
    overlap_from_weight,
    parse_anf,
    truth_table_hex,
    welch_function,
)
from .haar import (
    ExperimentConfig,
    dmin_bound_curve,
    dmin_distribution,
    haar_sample,
    haar_state,
    overlap_cdf_pvalue,
    sample_dmin,
)
from .lattice import (
    CellDecomposition,
    Lattice,
    build_lattice_state,
    cell_decompose,
    decomposition_bound,
    lattice_bound,
    lattice_centers,
    make_lattice,
    separable_bound,
    triangular_lattice,
    union_jack_lattice,
)
from .mbqc import (
    MeasurementLayout,
    outcome_distribution,
    pbound_check,
    planted_verifier,
    randomized_search,
    search_repetition_bound,
)
from .measures import (
    MagicReport,
    TOLERANCES,
    dmin,
    extent,
    free_robustness,
    golden_state,
    magic_report,
    robustness_bound_check,
    stab_rank_bound,
    stabilizer_fidelity,
)
from .pauli import (
    InconsistentTableauError,
    PauliOperator,
    StabilizerTableau,
    hermitian_pauli,
    identity_pauli,
    is_hermitian_involution,
    mub_partition,
    pauli_commutes,
    pauli_from_string,
    pauli_to_string,
    tableau_to_state,
    weyl_operator,
)
from .solvers import (
    BasisPursuitProblem,
    LinearProgram,
    SolverError,
    basis_pursuit_polygon_lp,
    solve_basis_pursuit,
    solve_lp,
)
from .stabdict import (
    QuadraticStateSet,
    ResourceLimitError,
    StabilizerDictionary,
    count_stabilizer_states,
    enumerate_quadratic_states,
    enumerate_stabilizer_states,
    get_dictionary,
    iter_stabilizer_states,
)
from .wigner import (
    WignerFunction,
    mana,
    mana_lr_check,
    negativity_robustness_check,
    phase_point_operator,
    sum_negativity,
    wigner_function,
)
