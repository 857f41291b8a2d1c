from .core import Tolerance, RankReport, PenroseChecks, DEFAULT_TOLERANCE, \
    CHECK_TOLERANCE, as_matrix, as_vector, rank_of, pinv, check_penrose, \
    close_in_norm, frobenius_norm, matmul, transpose, sub, identity
from .projectors import GeneralizedInversePair, RankPreservingCheck, make_rng, \
    make_y_star, make_x, build_inverse_pair, check_rank_preserving, is_idempotent, \
    check_projector_equation, check_key_equation, random_rank_preserving_sketch
from .solver import SolverInputs, FactorizationTriple, ResidualReport, solve_mixing, \
    sketch_inverse_pair, mixing_from_pair, homogeneous_part, solve_vector, \
    solve_vector_oblique, project_onto_columns, pseudoinverse_mixing, verify_triple, \
    relative_residual
