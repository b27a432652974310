"""Seeded, counter-based randomness.

Every randomized operation in the package draws from a Philox (4x64)
counter-based generator keyed by an explicit caller seed.  Substreams for
independent stages of one experiment come from `.jumped()`, so a run record
holding (seed, stream index) pins the stream exactly.
"""

from __future__ import annotations

import numpy as np

PRNG_NAME = "philox4x64"
PRNG_VERSION = f"numpy-{np.__version__}"


def generator(seed: int, stream: int = 0) -> np.random.Generator:
    """Deterministic generator for `seed`; `stream` selects a disjoint substream."""
    if seed < 0:
        raise ValueError("seed must be a non-negative integer")
    bits = np.random.Philox(key=seed)
    if stream:
        bits = bits.jumped(stream)
    return np.random.Generator(bits)


def prng_record() -> dict:
    """Identifier block stored in every run record."""
    return {"name": PRNG_NAME, "version": PRNG_VERSION}
