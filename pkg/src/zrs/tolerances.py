"""Numerical tolerance configuration.

All classification margins in the package derive from a single base tolerance.
The default is 1e-12; set the ZRS_TOLERANCE environment variable to override it
(read on every call, so a change takes effect without re-import).
"""

import os

DEFAULT_TOLERANCE = 1e-12

_ENV_VAR = "ZRS_TOLERANCE"


def base_tol():
    """Current base tolerance, from the environment or the default."""
    raw = os.environ.get(_ENV_VAR)
    if raw is None:
        return DEFAULT_TOLERANCE
    try:
        value = float(raw)
    except ValueError:
        return DEFAULT_TOLERANCE
    if value <= 0:
        return DEFAULT_TOLERANCE
    return value
