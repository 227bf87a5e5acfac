"""Counter-based splittable random streams.

Every Monte Carlo consumer in this package draws from a stream derived
from (master seed, *path), where the path is a short tuple of
nonnegative integers (purpose code, ladder index, replicate index, ...).
Streams for distinct paths are statistically independent and do not
depend on scheduling, so replicate work can be farmed out to any number
of workers and reassembled deterministically.
"""

from __future__ import annotations

import numpy as np

__all__ = ["substream"]


def substream(master_seed: int, *path: int) -> np.random.Generator:
    """Return the Philox generator for (master_seed, *path).

    The same arguments always yield an identical stream, regardless of
    process, thread, or call order.
    """
    if not 0 <= int(master_seed) < 2**64:
        raise ValueError("master seed must be a 64-bit unsigned integer")
    ss = np.random.SeedSequence(entropy=int(master_seed),
                                spawn_key=tuple(int(p) for p in path))
    return np.random.Generator(np.random.Philox(seed=ss))
