"""Key hashing for the sliding-block table and deterministic key streams.

The pipeline is fixed so that runs are reproducible across machines and
implementations: ``mix64`` is the splitmix64 finalizer, the home block is
obtained with the fastrange multiply-high mapping, and the bump priority
comes from a second, independently mixed word.  Scalar and vectorized
(numpy) variants compute bit-identical results.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

import numpy as np

if TYPE_CHECKING:
    from .table import SlickConfig

MASK64 = (1 << 64) - 1

# 2^64 / golden ratio; increment of the splitmix64 stream.
GOLDEN = 0x9E3779B97F4A7C15
_MULT_1 = 0xBF58476D1CE4E5B9
_MULT_2 = 0x94D049BB133111EB


class HashedKey(NamedTuple):
    """Derived routing data for a key: its home block and bump priority."""

    home_block: int
    priority: int


def mix64(x: int) -> int:
    """splitmix64 finalizer: bijective shift-xor-multiply mix of a 64-bit word."""
    x &= MASK64
    x ^= x >> 30
    x = (x * _MULT_1) & MASK64
    x ^= x >> 27
    x = (x * _MULT_2) & MASK64
    return x ^ (x >> 31)


def hash_parts(key: int, seed: int, num_blocks: int, max_threshold: int) -> tuple[int, int]:
    """Return ``(home_block, priority)`` for a 64-bit key.

    ``home_block = mulhi64(mix64(key ^ seed), num_blocks)`` (fastrange), and
    the priority is ``mix64(h1 + GOLDEN) mod max_threshold``, so the two are
    independent even though only one mixing pass per word is paid.
    """
    x = (key ^ seed) & MASK64
    x ^= x >> 30
    x = (x * _MULT_1) & MASK64
    x ^= x >> 27
    x = (x * _MULT_2) & MASK64
    x ^= x >> 31
    y = (x + GOLDEN) & MASK64
    y ^= y >> 30
    y = (y * _MULT_1) & MASK64
    y ^= y >> 27
    y = (y * _MULT_2) & MASK64
    y ^= y >> 31
    return (x * num_blocks) >> 64, y % max_threshold


def hash_key(key: int, seed: int, config: "SlickConfig") -> HashedKey:
    """Hash a key under a table configuration.  Pure and deterministic."""
    b, p = hash_parts(key, seed, config.num_blocks, config.max_threshold)
    return HashedKey(b, p)


def mix64_array(values: np.ndarray) -> np.ndarray:
    """Vectorized ``mix64`` over a uint64 array (wrapping arithmetic)."""
    x = values.astype(np.uint64, copy=True)
    x ^= x >> np.uint64(30)
    x *= np.uint64(_MULT_1)
    x ^= x >> np.uint64(27)
    x *= np.uint64(_MULT_2)
    x ^= x >> np.uint64(31)
    return x


def _mulhi64(a: np.ndarray, b: int) -> np.ndarray:
    """High 64 bits of ``a * b`` for uint64 ``a``, computed in 32-bit limbs."""
    mask32 = np.uint64(0xFFFFFFFF)
    s32 = np.uint64(32)
    a_lo = a & mask32
    a_hi = a >> s32
    b_lo = np.uint64(b & 0xFFFFFFFF)
    b_hi = np.uint64(b >> 32)
    carry = (a_lo * b_lo) >> s32
    mid1 = a_hi * b_lo + carry
    mid2 = a_lo * b_hi + (mid1 & mask32)
    return a_hi * b_hi + (mid1 >> s32) + (mid2 >> s32)


def hash_arrays(
    keys: np.ndarray, seed: int, num_blocks: int, max_threshold: int
) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`hash_parts`: arrays of home blocks and priorities."""
    h1 = mix64_array(keys.astype(np.uint64) ^ np.uint64(seed))
    h2 = mix64_array(h1 + np.uint64(GOLDEN))
    homes = _mulhi64(h1, num_blocks).astype(np.int64)
    priorities = (h2 % np.uint64(max_threshold)).astype(np.int64)
    return homes, priorities


def key_stream(n: int, seed: int) -> np.ndarray:
    """First ``n`` outputs of the splitmix64 stream started at ``seed``.

    The stream state advances by ``GOLDEN`` per output and the finalizer is a
    bijection, so the outputs are pairwise distinct for any ``n <= 2**64``.
    """
    states = np.uint64(seed) + np.uint64(GOLDEN) * np.arange(1, n + 1, dtype=np.uint64)
    return mix64_array(states)
