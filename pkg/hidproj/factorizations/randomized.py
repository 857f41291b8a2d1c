import numpy as np

from hidproj import settings
from hidproj.errors import ParameterError, RankPreservationError
from hidproj.linalg.core import DEFAULT_TOLERANCE, rank_of
from hidproj.linalg.projectors import make_rng
from hidproj.linalg.solver import SolverInputs, solve_mixing
from .reduced_form import ReducedForm

# streams 0 and 1 of the seed go to the sketches B and D
OMEGA_STREAM = 2


def randomized_reduced(a, r, q, seed, tol=DEFAULT_TOLERANCE,
                       max_residual=settings.RESIDUAL_TOLERANCE):
    """F = AΩ (m×r), H* = Ω'*A (q×n) and G from `solve_mixing`.

    Raises:
        RankPreservationError when A is zero, ParameterError when r or q is
        below rank(A).
    """
    a = np.asarray(a, dtype=np.float64)
    m, n = a.shape
    k = rank_of(a, tol).rank
    if k == 0:
        raise RankPreservationError('ERROR: A has rank 0, no rank-preserving sketch '
                                    'exists', rank=0, target=1)
    if r < k or q < k:
        raise ParameterError('ERROR: r={} and q={} must be at least rank(A)={}'.format(
            r, q, k))
    rng = make_rng(seed, OMEGA_STREAM)
    f = a @ rng.standard_normal((n, r))
    h_star = rng.standard_normal((m, q)).T @ a
    triple = solve_mixing(SolverInputs(a, f, h_star), tol, seed, k, max_residual)
    return ReducedForm(triple.f, triple.g, triple.h_star, 'randomized')
