"""Enumeration budget: a hard cap on brute-force tuple-space sizes.

Exceeding the cap raises, never truncates, so a verification sweep can
only pass on a complete count.
"""

import os

DEFAULT_BUDGET = 20_000_000

ENV_VAR = "SYMTOTIENT_BUDGET"


class BudgetExceededError(RuntimeError):
    """A brute-force enumeration would exceed the tuple budget."""


def resolve_budget(budget: int | None = None) -> int:
    """Effective tuple cap: explicit argument, else SYMTOTIENT_BUDGET, else default."""
    if budget is not None:
        return int(budget)
    raw = os.environ.get(ENV_VAR, "").strip()
    if raw:
        try:
            return int(raw)
        except ValueError:
            return int(float(raw))
    return DEFAULT_BUDGET


def check_budget(space: int, budget: int | None, what: str) -> int:
    """Raise BudgetExceededError unless `space` tuples fit under the cap."""
    limit = resolve_budget(budget)
    if space > limit:
        raise BudgetExceededError(
            f"{what} needs {space} tuples, over the enumeration budget of {limit}; "
            f"raise it via {ENV_VAR} or an explicit budget argument"
        )
    return limit
