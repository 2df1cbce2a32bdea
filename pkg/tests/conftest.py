"""Shared market builders for the test suite.

The two hand-built markets here are the suite's workhorses: a five-agent
market whose unique strict-core allocation is known in full, and a
three-agent market whose strict core is empty.  Unit tests import the
builders directly; CLI tests read the same markets from fixture files.
"""

from __future__ import annotations

from pathlib import Path

from houseswap import Market, RawAgent, RawMarket, validate_market

FIXTURES = Path(__file__).parent / "fixtures"


def market_from(houses, agents) -> Market:
    """Build and validate a market from (name, endow, prefs) rows."""
    return validate_market(
        RawMarket(
            houses=tuple(houses),
            agents=tuple(
                RawAgent(name, endow, tuple(prefs))
                for name, endow, prefs in agents
            ),
        )
    )


def worked_market() -> Market:
    """Five agents, four house types, two copies of h2.

    The unique strict-core allocation assigns (h2, h1, h2, h4, h3); the
    solver reaches it by trading {h3, h4} first and {h1, h2} second.
    Matches tests/fixtures/worked.market.
    """
    return market_from(
        ["h1", "h2", "h3", "h4"],
        [
            ("1", "h1", ["h2", "h1", "h3", "h4"]),
            ("2", "h2", ["h1", "h2", "h3", "h4"]),
            ("3", "h2", ["h3", "h2", "h1", "h4"]),
            ("4", "h3", ["h4", "h1", "h2", "h3"]),
            ("5", "h4", ["h3", "h1", "h2", "h4"]),
        ],
    )


# worked_market's core allocation by internal ids: h2 h1 h2 h4 h3.
WORKED_ASSIGNMENT = (1, 0, 1, 3, 2)


def empty_core_market() -> Market:
    """Two owners of h1 both demand the single h2; strict core is empty.

    Matches tests/fixtures/empty_core.market.
    """
    return market_from(
        ["h1", "h2"],
        [
            ("1", "h1", ["h2", "h1"]),
            ("2", "h1", ["h2", "h1"]),
            ("3", "h2", ["h1", "h2"]),
        ],
    )


def minimal_market() -> Market:
    """One agent, one house type."""
    return market_from(["h1"], [("a1", "h1", ["h1"])])


def two_swap_pairs_market() -> Market:
    """Agents 1,2 swap h1/h2 and agents 3,4 swap h3/h4.

    The step-1 pointing graph has two sink SCCs, so tie-break seeds can
    process the pairs in either order; the allocation never changes.
    """
    return market_from(
        ["h1", "h2", "h3", "h4"],
        [
            ("1", "h1", ["h2", "h1", "h3", "h4"]),
            ("2", "h2", ["h1", "h2", "h3", "h4"]),
            ("3", "h3", ["h4", "h3", "h1", "h2"]),
            ("4", "h4", ["h3", "h4", "h1", "h2"]),
        ],
    )
