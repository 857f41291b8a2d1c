"""Package-wide defaults.

Edit this module to change tolerances or to attach a sacred observer to every
experiment run. Values exposed in an experiment's config scope can also be
overridden per run with `with key=value`.
"""
import numpy as np

# Numerical rank: singular values at or below
# max(RANK_ABSOLUTE, RANK_RELATIVE * sigma_max * max(m, n)) count as zero.
RANK_ABSOLUTE = 1e-12
RANK_RELATIVE = float(np.finfo(np.float64).eps)

# Equality checks (Penrose equations, idempotence, projector equation):
# ||lhs - rhs||_F <= max(CHECK_ABSOLUTE, CHECK_RELATIVE * ||operand||_F)
CHECK_ABSOLUTE = 1e-12
CHECK_RELATIVE = 1e-10

# relative reconstruction residual accepted for user matrices
RESIDUAL_TOLERANCE = 1e-8

SKETCH_RETRIES = 64
DICTIONARY_RETRIES = 64

DECODE_MARGIN = 1e-3
# keygen requires r >= k + KEY_RANK_GAP
KEY_RANK_GAP = 2

# sacred observers, both optional
EXPERIMENT_DB_HOST = None
EXPERIMENT_DB_USER = None
EXPERIMENT_DB_PWD = None
EXPERIMENT_DB_NAME = None
EXPERIMENT_STORAGE_FOLDER = None
