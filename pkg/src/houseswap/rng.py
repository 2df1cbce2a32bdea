"""Deterministic integer randomness shared by the generator and the solver.

Everything here is fixed-width integer arithmetic so that a market built
from a seed is bit-identical on every platform and in every language that
reimplements the same scheme.  The scheme is pinned:

* stream: splitmix64 (golden-gamma increment, 64-bit finalizer),
* bounded draw: ``(next_u64() * n) >> 64``,
* shuffle: Fisher-Yates from the front, ``j = i + below(n - i)``.

``ShuffledRange`` produces exactly the permutation the eager shuffle
would, but materializes elements on demand, so a market whose preference
lists are only ever read up to some prefix never pays for the full lists.
"""

from __future__ import annotations

from collections.abc import Sequence

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    """splitmix64 stream; ``seed`` is reduced mod 2**64."""

    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform-ish draw in [0, n) via the multiply-shift reduction."""
        return (self.next_u64() * n) >> 64


def fisher_yates(items: list, rng: SplitMix64) -> list:
    """Shuffle ``items`` in place with the pinned draw pattern."""
    n = len(items)
    for i in range(n - 1):
        j = i + rng.below(n - i)
        items[i], items[j] = items[j], items[i]
    return items


class ShuffledRange(Sequence):
    """Lazy uniform permutation of ``range(n)``.

    Element ``k`` is computed on first access by running the Fisher-Yates
    shuffle forward to position ``k``; pending swaps are kept in a dict so
    memory stays proportional to the materialized prefix.  Two instances
    compare equal iff they have the same ``(n, seed)``, which implies the
    same full sequence.
    """

    __slots__ = ("n", "seed", "_rng", "_done", "_ahead")

    def __init__(self, n: int, seed: int) -> None:
        self.n = n
        self.seed = seed & _MASK64
        self._rng = SplitMix64(seed)
        self._done: list[int] = []
        self._ahead: dict[int, int] = {}

    def _extend_to(self, k: int) -> None:
        done = self._done
        ahead = self._ahead
        n = self.n
        below = self._rng.below
        i = len(done)
        while i <= k:
            j = i + below(n - i)
            val_i = ahead.pop(i, i)
            if j == i:
                done.append(val_i)
            else:
                done.append(ahead.pop(j, j))
                ahead[j] = val_i
            i += 1

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, k: int) -> int:
        if isinstance(k, slice):
            raise TypeError("slicing not supported")
        if k < 0:
            k += self.n
        if not 0 <= k < self.n:
            raise IndexError(k)
        if k >= len(self._done):
            self._extend_to(k)
        return self._done[k]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ShuffledRange):
            return self.n == other.n and self.seed == other.seed
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.n, self.seed))

    def __repr__(self) -> str:
        return f"ShuffledRange(n={self.n}, seed={self.seed})"
