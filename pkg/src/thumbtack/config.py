"""Desk-scale guardrails."""

import os

DEFAULT_NORM_DEGREE_LIMIT = 128


def norm_degree_limit(override=None) -> int:
    """Maximum total norm degree deg(p) * phi(N) accepted by the
    cyclotomic factorization oracle.  THUMBTACK_SIZE_LIMIT overrides the
    default; an explicit argument overrides both."""
    if override is not None:
        return int(override)
    env = os.environ.get("THUMBTACK_SIZE_LIMIT")
    return int(env) if env else DEFAULT_NORM_DEGREE_LIMIT
