"""Resource limits shared by the normaliser, the oracle and the CLI."""
from dataclasses import dataclass

DEFAULT_FUEL = 10**6
DEFAULT_ORACLE_DEPTH = 12


@dataclass(frozen=True)
class Limits:
    fuel: int = DEFAULT_FUEL
    oracle_depth: int = DEFAULT_ORACLE_DEPTH
