"""Seedable uniform source for inversion sampling.

The generator is the 32-bit Mersenne Twister (MT19937) from the standard
library's :class:`random.Random`, which builds each double from 53 random
bits. Seeding goes through ``init_by_array`` on the integer seed, so a given
seed produces the same stream on every platform and Python version.
"""

from __future__ import annotations

import random
import time

_U64_MASK = (1 << 64) - 1


class RandomState:
    """Owned generator state; not safe to share between threads."""

    __slots__ = ("seed", "_gen")

    def __init__(self, seed: int):
        if seed < 0 or seed > _U64_MASK:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
        self.seed = int(seed)
        self._gen = random.Random(self.seed)

    def next_uniform(self) -> float:
        """Next variate in ``[0, 1)``."""
        return self._gen.random()

    def __repr__(self) -> str:
        return f"RandomState(seed={self.seed})"


def seed_state(seed: int | None = None) -> RandomState:
    """Create a fresh state; ``None`` derives a seed from the clock."""
    if seed is None:
        seed = time.time_ns() & _U64_MASK
    return RandomState(seed)


def next_uniform(state: RandomState) -> float:
    return state.next_uniform()
