"""Seeded random market generation.

Output is a pure function of ``(agent_count, house_count, seed)`` and is
bit-identical across platforms.  The draw layout is pinned so frozen
fixtures survive reimplementation:

1. One splitmix64 stream is seeded with ``seed``.
2. Agent ids are Fisher-Yates shuffled with that stream.  The first
   ``house_count`` agents of the shuffle receive house types
   ``0, 1, ...`` in order, which guarantees every type has an owner.
3. Each remaining agent of the shuffle, in shuffle order, draws a
   uniform type via ``below(house_count)``.
4. For each agent in ascending id order, one ``next_u64`` draw seeds
   that agent's preference permutation, produced by the lazy
   Fisher-Yates shuffle of ``range(house_count)``.

Preference lists materialize on demand, so very large markets only pay
for the prefixes the solver actually reads.

Duplication pressure is steered by the house/agent ratio alone: equal
counts give an injective endowment, smaller house counts give more
copies per type.
"""

from __future__ import annotations

from dataclasses import dataclass

from .market import Market
from .rng import ShuffledRange, SplitMix64, fisher_yates


class InvalidParams(ValueError):
    pass


@dataclass(frozen=True)
class GenParams:
    """Generation knobs; ``1 <= house_count <= agent_count`` required."""

    agent_count: int
    house_count: int
    seed: int

    def __post_init__(self) -> None:
        if self.agent_count < 1:
            raise InvalidParams("agent_count must be at least 1")
        if not 1 <= self.house_count <= self.agent_count:
            raise InvalidParams(
                "house_count must be in [1, agent_count], got "
                f"{self.house_count} with {self.agent_count} agents"
            )
        if self.seed < 0:
            raise InvalidParams("seed must be a natural number")


def random_market(params: GenParams) -> Market:
    """Generate a valid market from ``params`` (see module docstring
    for the pinned draw layout)."""
    n, hc = params.agent_count, params.house_count
    rng = SplitMix64(params.seed)

    shuffled_agents = fisher_yates(list(range(n)), rng)
    endowments = [0] * n
    for k in range(hc):
        endowments[shuffled_agents[k]] = k
    for k in range(hc, n):
        endowments[shuffled_agents[k]] = rng.below(hc)

    prefs = tuple(ShuffledRange(hc, rng.next_u64()) for _ in range(n))

    return Market(
        house_names=tuple(f"h{h + 1}" for h in range(hc)),
        agent_names=tuple(f"a{i + 1}" for i in range(n)),
        endowments=tuple(endowments),
        prefs=prefs,
    )
