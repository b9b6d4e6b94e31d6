"""Runtime limits shared by the number-theoretic routines.

Both limits can be overridden through the environment:

``UNUSUAL_SIEVE_LIMIT``
    largest integer covered by the smallest-prime-factor sieve (default 10**7)
``UNUSUAL_STEP_BUDGET``
    maximal number of continued-fraction / reduction steps per call (default 10**8)
"""

import os


class BudgetExceeded(RuntimeError):
    """A computation ran out of its configured step budget.

    This is never a substitute for a mathematical answer: callers that need a
    yes/no decision must propagate it instead of guessing.
    """


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


SIEVE_LIMIT = _env_int("UNUSUAL_SIEVE_LIMIT", 10**7)
STEP_BUDGET = _env_int("UNUSUAL_STEP_BUDGET", 10**8)
