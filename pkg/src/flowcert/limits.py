"""Hard bounds for the exhaustive searches.

All brute-force components refuse inputs beyond these bounds with
:class:`flowcert.errors.LimitExceeded` instead of truncating silently.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    # cycle-space dimension bound for the mod-k flow search; dimension
    # m - n + components, i.e. cubic graphs up to 22 vertices at the default
    bf_dim: int = 12
    # vertex bound for exhaustive balance checking over connected sets
    balance_n: int = 24
    # vertex bound for full perfect-matching enumeration on cubic graphs
    matchings_n: int = 32
    # candidate-cut budget for the cyclic connectivity sweep
    cut_sweep: int = 2_000_000


DEFAULT_LIMITS = Limits()
