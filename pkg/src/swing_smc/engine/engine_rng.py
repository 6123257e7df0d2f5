# -*- coding: utf-8 -*-


# =============================================================================
# Docstring
# =============================================================================

"""
Provides Random Stream Class
============================

Named, counter-addressed random streams derived from one 64-bit master
seed. A stream is identified by a name and integer counters (typically the
time index), so the draws used at a given step never depend on how many
draws earlier steps consumed, nor on how the work is split across workers.

Usage:
------
    streams = RngStreams(seed=20240101)
    rng = streams.generator("kernel", 17)      # stream for step t = 17
    again = streams.generator("kernel", 17)    # identical stream

Links:
------
- https://numpy.org/doc/stable/reference/random/bit_generators/philox.html
- https://numpy.org/doc/stable/reference/random/parallel.html

"""  # noqa E501


# =============================================================================
# Imports
# =============================================================================

# Import | Standard Library
import zlib
from typing import Union

# Import | Libraries
import numpy as np

# Import | Local Modules
from swing_smc.errors import ConfigError


# =============================================================================
# Class
# =============================================================================

class RngStreams:
    """
    Random Stream Class
    ===================

    Factory of Philox generators keyed by (name, counters).

    Attributes:
        seed (int): Master seed, an unsigned 64-bit integer.
    """

    def __init__(self, seed: int) -> None:
        if seed is None or int(seed) < 0 or int(seed) >= 2 ** 64:
            raise ConfigError("seed", "must be an unsigned 64-bit integer", seed)
        self.seed = int(seed)

    @staticmethod
    def _name_key(name: str) -> int:
        return zlib.crc32(name.encode("utf-8"))

    def generator(self, name: str, *counters: int) -> np.random.Generator:
        """
        Generator for the stream `name` at `counters`.

        Args:
            name (str): Stream name (e.g., "resample", "kernel").
            *counters (int): Nonnegative integers addressing the stream.

        Returns:
            np.random.Generator: Fresh generator positioned at the stream
            start.
        """
        key = (self._name_key(name),) + tuple(int(c) for c in counters)
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=key)
        return np.random.Generator(np.random.Philox(sequence))

    def child(self, name: str) -> "RngStreams":
        """Independent stream family, e.g. one per job."""
        sequence = np.random.SeedSequence(entropy=self.seed, spawn_key=(self._name_key(name),))
        return RngStreams(int(sequence.generate_state(1, dtype=np.uint64)[0]))

    def __repr__(self) -> str:
        return f"RngStreams(seed={self.seed})"


# =============================================================================
# Functions
# =============================================================================

def as_streams(source: Union[int, RngStreams]) -> RngStreams:
    """Accept either a seed or an existing stream family."""
    if isinstance(source, RngStreams):
        return source
    return RngStreams(source)


# =============================================================================
# Exports
# =============================================================================

__all__ = [
    "RngStreams",
    "as_streams",
]
