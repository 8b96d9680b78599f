import logging
import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

from core.errors import UsageError

DEFAULT_BUDGET = 10**8
DEFAULT_CL_TOL = 1e-8
DEFAULT_MATCH_TOL = 1e-6
DEFAULT_RESIDUAL_TOL = 1e-10
DEFAULT_MAX_NUMERIC_DEGREE = 60

BUDGET_ENV = "EHRHART_LAB_BUDGET"
LOG_LEVEL_ENV = "EHRHART_LAB_LOG_LEVEL"
MAX_DEGREE_ENV = "EHRHART_LAB_MAX_NUMERIC_DEGREE"


def _positive_int(name: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise UsageError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class LabConfig:
    """
    Runtime settings shared by every command.
    Precedence: explicit flag > environment variable > default.
    """
    budget: int = DEFAULT_BUDGET
    cl_tol: float = DEFAULT_CL_TOL
    match_tol: float = DEFAULT_MATCH_TOL
    residual_tol: float = DEFAULT_RESIDUAL_TOL
    max_numeric_degree: int = DEFAULT_MAX_NUMERIC_DEGREE
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None, budget: Optional[int] = None) -> "LabConfig":
        env = os.environ if environ is None else environ
        config = cls()

        raw_budget = env.get(BUDGET_ENV)
        if raw_budget:
            config = replace(config, budget=_positive_int(BUDGET_ENV, raw_budget))

        raw_degree = env.get(MAX_DEGREE_ENV)
        if raw_degree:
            config = replace(config, max_numeric_degree=_positive_int(MAX_DEGREE_ENV, raw_degree))

        raw_level = env.get(LOG_LEVEL_ENV)
        if raw_level:
            level = raw_level.strip().upper()
            if not isinstance(logging.getLevelName(level), int):
                raise UsageError(f"{LOG_LEVEL_ENV} is not a logging level: {raw_level!r}")
            config = replace(config, log_level=level)

        if budget is not None:
            if budget <= 0:
                raise UsageError(f"--budget must be positive, got {budget}")
            config = replace(config, budget=budget)
        return config

    def with_tolerance(self, tol: Optional[float]) -> "LabConfig":
        if tol is None:
            return self
        if tol <= 0:
            raise UsageError(f"--tol must be positive, got {tol}")
        return replace(self, cl_tol=tol)
