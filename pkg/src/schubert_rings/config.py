"""Size budgets for the brute-force parts of the engine.

Budgets are read from a TOML file named by ``SCHUBERT_CONFIG`` (or passed
explicitly), with a ``[budgets]`` table::

    [budgets]
    p_max = 7
    tensor_budget = 262144
    exterior_mn = 9
    series_extra = 2
"""

from __future__ import annotations

import os
import sys
from dataclasses import dataclass, fields, replace
from pathlib import Path

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import BudgetExceeded

ENV_VAR = "SCHUBERT_CONFIG"


@dataclass(frozen=True)
class Budgets:
    p_max: int = 7  # largest symmetric group S_p handled by brute force
    tensor_budget: int = 2**18  # max entries d**p of a tensor power
    exterior_mn: int = 9  # max m*n, i.e. 2**(2mn) exterior monomials
    series_extra: int = 2  # extra truncation order beyond the queried degree

    def check_weight(self, p: int) -> None:
        if p > self.p_max:
            raise BudgetExceeded(f"weight {p} exceeds p_max={self.p_max}")

    def check_tensor(self, d: int, p: int) -> None:
        if d ** p > self.tensor_budget:
            raise BudgetExceeded(f"tensor power {d}**{p} exceeds budget {self.tensor_budget}")

    def check_exterior(self, m: int, n: int) -> None:
        if m * n > self.exterior_mn:
            raise BudgetExceeded(f"m*n = {m * n} exceeds exterior budget {self.exterior_mn}")


DEFAULT_BUDGETS = Budgets()


def load_budgets(path: str | os.PathLike | None = None) -> Budgets:
    """Budgets from ``path``, else from ``$SCHUBERT_CONFIG``, else the defaults."""
    if path is None:
        path = os.environ.get(ENV_VAR)
    if not path:
        return DEFAULT_BUDGETS
    with Path(path).open("rb") as fh:
        data = tomllib.load(fh)
    table = data.get("budgets", data)
    known = {f.name for f in fields(Budgets)}
    unknown = set(table) - known
    if unknown:
        raise ValueError(f"unknown budget keys: {sorted(unknown)}")
    return replace(DEFAULT_BUDGETS, **{k: int(v) for k, v in table.items()})
