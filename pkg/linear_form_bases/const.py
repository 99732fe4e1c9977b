"""Linear form bases consts module."""

import math

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

# u1*u2 values for which the fundamental lemma does not apply
EXCLUDED_PRODUCTS = (1, -1, -2)

INF = math.inf

DEFAULT_MAX_RADIUS = 10_000
DEFAULT_WORK_CAP = 10_000_000

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_INPUT_ERROR = 2
EXIT_SEARCH_EXHAUSTED = 3
EXIT_CERTIFICATE_VIOLATION = 4
