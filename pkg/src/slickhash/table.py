"""The sliding-block hash table.

The main store is a flat slot array carved into blocks of nominal width
``block_size``.  Block boundaries slide within ``max_offset`` slots of their
nominal position so a full block can borrow free space from a neighbor, and a
block's total extent never exceeds ``sliding_block_size``.  When sliding
cannot free a slot, the block raises its threshold and bumps its
lowest-priority entries into the backyard, an unbounded fallback map.  Lookup
routing is a single comparison: keys whose priority falls below their home
block's threshold live in the backyard, everything else in the main store.

The only per-block metadata is a boundary offset and a threshold; everything
else is derived.  ``TableStats.metadata_bits_nominal`` reports the packed
width this metadata would occupy, which is the structure's space story.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional, Union

import numpy as np

from .hashing import MASK64, HashedKey, hash_arrays, hash_parts


@dataclass(frozen=True)
class SlickConfig:
    """Hyperparameters of a table.

    ``block_size`` is the nominal slot count per block, ``sliding_block_size``
    the hard cap on any block's extent after boundary shifts, ``max_offset``
    the bound on a boundary's displacement from its nominal position, and
    ``max_threshold`` the number of priority levels (priorities range over
    ``[0, max_threshold)``).
    """

    block_size: int
    sliding_block_size: int
    max_offset: int
    max_threshold: int
    capacity: int
    seed: int = 0

    def __post_init__(self) -> None:
        if self.block_size < 1:
            raise ValueError(f"block_size must be >= 1, got {self.block_size}")
        if self.sliding_block_size < self.block_size:
            raise ValueError(
                f"sliding_block_size must be >= block_size, got "
                f"{self.sliding_block_size} < {self.block_size}"
            )
        if self.max_offset < 0:
            raise ValueError(f"max_offset must be >= 0, got {self.max_offset}")
        if self.max_threshold < 1:
            raise ValueError(f"max_threshold must be >= 1, got {self.max_threshold}")
        if self.capacity < self.block_size:
            raise ValueError(
                f"capacity must be >= block_size, got {self.capacity} < {self.block_size}"
            )
        if self.sliding_block_size > self.block_size + 2 * self.max_offset:
            raise ValueError(
                f"sliding_block_size must be <= block_size + 2*max_offset "
                f"({self.block_size + 2 * self.max_offset}), got {self.sliding_block_size}"
            )
        if not 0 <= self.seed <= MASK64:
            raise ValueError(f"seed must be a 64-bit unsigned integer, got {self.seed}")

    @property
    def num_blocks(self) -> int:
        return self.capacity // self.block_size

    @property
    def metadata_bits_nominal(self) -> int:
        """Packed width of per-block metadata: offset plus threshold fields."""
        offset_bits = math.ceil(math.log2(2 * self.max_offset + 1)) if self.max_offset else 0
        threshold_bits = math.ceil(math.log2(self.max_threshold + 1))
        return self.num_blocks * (offset_bits + threshold_bits)

    @property
    def label(self) -> str:
        """Compact ``B_Bslide_omax_tmax`` form used in benchmark output."""
        return (
            f"{self.block_size}_{self.sliding_block_size}"
            f"_{self.max_offset}_{self.max_threshold}"
        )


def default_config(capacity: int, seed: int = 0, block_size: int = 10) -> SlickConfig:
    """The recommended configuration: sliding size 2B, offset and threshold B."""
    return SlickConfig(
        block_size=block_size,
        sliding_block_size=2 * block_size,
        max_offset=block_size,
        max_threshold=block_size,
        capacity=capacity,
        seed=seed,
    )


@dataclass(frozen=True)
class BlockMeta:
    """Per-block metadata: boundary offset and bump threshold."""

    offset: int
    threshold: int


class BumpReason(Enum):
    BELOW_THRESHOLD = "below_threshold"
    THRESHOLD_RAISED = "threshold_raised"


@dataclass(frozen=True)
class PlacedMain:
    """Entry landed in the main store at ``slot`` inside ``block``."""

    block: int
    slot: int


@dataclass(frozen=True)
class PlacedBackyard:
    """Entry landed in the backyard, either routed below the threshold or
    diverted by a threshold raise during this insert."""

    reason: BumpReason


@dataclass(frozen=True)
class ReplacedExisting:
    """Key was already present; its value was overwritten in place."""


InsertOutcome = Union[PlacedMain, PlacedBackyard, ReplacedExisting]


class Direction(Enum):
    LEFT = -1
    RIGHT = 1


class CleaningPolicy(Enum):
    """What to do with the backyard after a deletion frees space."""

    NONE = "none"
    NAIVE_FULL = "naive_full"
    TARGETED = "targeted"


@dataclass(frozen=True)
class CleanReport:
    moved: int


@dataclass(frozen=True)
class BumpReport:
    new_threshold: int
    evicted: int
    incoming_bumped: bool


@dataclass(frozen=True)
class TableStats:
    main_len: int
    backyard_len: int
    capacity: int
    num_blocks: int
    metadata_bits_nominal: int
    backyard_fraction: float
    max_abs_offset_seen: int
    max_threshold_seen: int


class SlickTable:
    """Sliding-block hash table with a backyard overflow store.

    Keys and values are 64-bit unsigned integers.  Single-writer: not safe
    for concurrent mutation.  ``main_store_reads`` / ``backyard_store_reads``
    count which store :meth:`get` consulted; tests use them to assert that
    lookups never touch the store the threshold comparison ruled out.
    """

    def __init__(self, config: SlickConfig):
        self.config = config
        m = config.num_blocks
        self._m = m
        cap = config.capacity
        self._bounds = [i * config.block_size for i in range(m)] + [cap]
        self._thresholds = [0] * m
        self._fill = [0] * m
        self._keys = [0] * cap
        self._vals = [0] * cap
        self._prios = [0] * cap
        self._backyard: dict[int, int] = {}
        self._backyard_by_block: dict[int, set[int]] = {}
        self._main_len = 0
        self.bump_events = 0
        self.main_store_reads = 0
        self.backyard_store_reads = 0
        self._max_abs_offset_seen = 0
        self._max_threshold_seen = 0
        # Trailing capacity % block_size slots merge into the last block, whose
        # base extent may then exceed sliding_block_size; its cap is relaxed to
        # that base extent so the geometry stays consistent.
        last_base = cap - (m - 1) * config.block_size
        self._ext_cap_last = max(config.sliding_block_size, last_base)
        # Over-arc guard: never use an empty single-slot block as a slide
        # donor.  Disabled only by tests that demonstrate the failure mode.
        self._overarc_guard = True

    # -- sizes ------------------------------------------------------------

    @property
    def main_len(self) -> int:
        return self._main_len

    @property
    def backyard_len(self) -> int:
        return len(self._backyard)

    @property
    def total_len(self) -> int:
        return self._main_len + len(self._backyard)

    def __len__(self) -> int:
        return self.total_len

    def __contains__(self, key: int) -> bool:
        return self.contains(key)

    # -- geometry ---------------------------------------------------------

    def block_extent(self, block: int) -> tuple[int, int]:
        """Half-open slot range ``[start, end)`` currently owned by ``block``."""
        return self._bounds[block], self._bounds[block + 1]

    def block_meta(self, block: int) -> BlockMeta:
        return BlockMeta(
            offset=self._bounds[block] - block * self.config.block_size,
            threshold=self._thresholds[block],
        )

    def _ext_cap(self, block: int) -> int:
        if block == self._m - 1:
            return self._ext_cap_last
        return self.config.sliding_block_size

    # -- hashing ----------------------------------------------------------

    def hash_key(self, key: int) -> HashedKey:
        b, p = hash_parts(key, self.config.seed, self._m, self.config.max_threshold)
        return HashedKey(b, p)

    @staticmethod
    def _check_word(value: int, what: str) -> None:
        if not 0 <= value <= MASK64:
            raise ValueError(f"{what} must be a 64-bit unsigned integer, got {value}")

    # -- lookup -----------------------------------------------------------

    def get(self, key: int) -> Optional[int]:
        """Value stored for ``key``, or None.

        Routes by one threshold comparison and then consults exactly one
        store: the backyard for below-threshold priorities, otherwise the
        occupied prefix of the home block.
        """
        # First mix round inlined; the second is only needed when the home
        # block's threshold can actually route a key to the backyard.
        x = key ^ self.config.seed
        x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
        x ^= x >> 31
        b = (x * self._m) >> 64
        thr = self._thresholds[b]
        if thr:
            y = (x + 0x9E3779B97F4A7C15) & MASK64
            y = ((y ^ (y >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
            y = ((y ^ (y >> 27)) * 0x94D049BB133111EB) & MASK64
            y ^= y >> 31
            if y % self.config.max_threshold < thr:
                self.backyard_store_reads += 1
                return self._backyard.get(key)
        self.main_store_reads += 1
        s = self._bounds[b]
        try:
            i = self._keys[s : s + self._fill[b]].index(key)
        except ValueError:
            return None
        return self._vals[s + i]

    def contains(self, key: int) -> bool:
        return self.get(key) is not None

    def _find_in_block(self, block: int, key: int) -> int:
        """Slot index of ``key`` inside its block's occupied prefix, or -1."""
        s = self._bounds[block]
        try:
            return s + self._keys[s : s + self._fill[block]].index(key)
        except ValueError:
            return -1

    # -- insertion --------------------------------------------------------

    def try_insert(self, key: int, value: int) -> InsertOutcome:
        """Insert or replace ``key``.  Never fails: the backyard is unbounded.

        Placement order for a new key: free slot in the home block, then a
        boundary slide toward the nearest donor block, then a threshold raise
        that bumps the block's lowest-priority entries (possibly including
        this key) into the backyard.
        """
        self._check_word(key, "key")
        self._check_word(value, "value")
        b, p = hash_parts(key, self.config.seed, self._m, self.config.max_threshold)
        if p < self._thresholds[b]:
            if key in self._backyard:
                self._backyard[key] = value
                return ReplacedExisting()
            self._backyard_put(key, value, b)
            return PlacedBackyard(BumpReason.BELOW_THRESHOLD)
        slot = self._find_in_block(b, key)
        if slot >= 0:
            self._vals[slot] = value
            return ReplacedExisting()
        return self._place_new(b, p, key, value)

    def _place_new(self, b: int, p: int, key: int, value: int) -> InsertOutcome:
        fill = self._fill
        if fill[b] >= self._bounds[b + 1] - self._bounds[b]:
            # Full block: free a slot via the nearer feasible donor (tie goes
            # right), else raise the threshold.
            left = self._plan_slide(b, -1)
            right = self._plan_slide(b, 1)
            if right is not None and (left is None or b - left >= right - b):
                self._execute_slide(b, right, 1)
            elif left is not None:
                self._execute_slide(b, left, -1)
            else:
                report = self._raise_threshold_and_bump(b, p)
                if report.incoming_bumped:
                    self._backyard_put(key, value, b)
                    return PlacedBackyard(BumpReason.THRESHOLD_RAISED)
        slot = self._bounds[b] + fill[b]
        self._keys[slot] = key
        self._vals[slot] = value
        self._prios[slot] = p
        fill[b] += 1
        self._main_len += 1
        return PlacedMain(b, slot)

    # -- sliding ----------------------------------------------------------

    def _plan_slide(self, b: int, sign: int) -> Optional[int]:
        """Nearest feasible donor block in direction ``sign``, or None.

        Walks outward from ``b``; every boundary on the path must stay within
        the offset bound, and the donor must have a free slot.  The search
        stops dead at the first immovable boundary, which also keeps the
        fixed end boundary of the table honest: it is simply never on a path.
        """
        bounds = self._bounds
        fill = self._fill
        if bounds[b + 1] - bounds[b] >= self._ext_cap(b):
            return None
        B = self.config.block_size
        o = self.config.max_offset
        guard = self._overarc_guard
        if sign > 0:
            for j in range(b + 1, self._m):
                if bounds[j] - j * B + 1 > o:
                    return None
                ext = bounds[j + 1] - bounds[j]
                f = fill[j]
                if f < ext and not (guard and f == 0 and ext == 1):
                    return j
            return None
        for j in range(b - 1, -1, -1):
            if bounds[j + 1] - (j + 1) * B - 1 < -o:
                return None
            ext = bounds[j + 1] - bounds[j]
            f = fill[j]
            if f < ext and not (guard and f == 0 and ext == 1):
                return j
        return None

    def _execute_slide(self, b: int, donor: int, sign: int) -> None:
        """Shift every boundary between ``b`` and ``donor`` one slot so the
        donor's free slot arrives at ``b``'s edge.  Each block on the path
        relocates at most one entry, keeping occupancy contiguous."""
        bounds = self._bounds
        fill = self._fill
        keys, vals, prios = self._keys, self._vals, self._prios
        B = self.config.block_size
        if sign > 0:
            for i in range(donor, b, -1):
                f = fill[i]
                if f:
                    src = bounds[i]
                    dst = src + f
                    keys[dst] = keys[src]
                    vals[dst] = vals[src]
                    prios[dst] = prios[src]
                bounds[i] += 1
                off = abs(bounds[i] - i * B)
                if off > self._max_abs_offset_seen:
                    self._max_abs_offset_seen = off
        else:
            for i in range(donor + 1, b + 1):
                f = fill[i]
                if f:
                    src = bounds[i] + f - 1
                    dst = bounds[i] - 1
                    keys[dst] = keys[src]
                    vals[dst] = vals[src]
                    prios[dst] = prios[src]
                bounds[i] -= 1
                off = abs(bounds[i] - i * B)
                if off > self._max_abs_offset_seen:
                    self._max_abs_offset_seen = off

    def slide_toward(self, b: int, direction: Direction) -> bool:
        """Try to free one slot in full block ``b`` by sliding boundaries in
        ``direction``.  Returns False (table untouched) if no donor currently
        qualifies."""
        donor = self._plan_slide(b, direction.value)
        if donor is None:
            return False
        self._execute_slide(b, donor, direction.value)
        return True

    # -- bumping ----------------------------------------------------------

    def _raise_threshold_and_bump(self, b: int, incoming_priority: int) -> BumpReport:
        """Raise block ``b``'s threshold to the smallest level that frees a
        slot or exceeds the incoming priority, and move the evicted entries
        to the backyard."""
        s = self._bounds[b]
        f = self._fill[b]
        keys, vals, prios = self._keys, self._vals, self._prios
        if f:
            lowest = min(prios[s : s + f])
            new_thr = min(lowest, incoming_priority) + 1
        else:
            new_thr = incoming_priority + 1
        w = s
        evicted = 0
        for i in range(s, s + f):
            if prios[i] < new_thr:
                self._backyard_put(keys[i], vals[i], b)
                evicted += 1
            else:
                keys[w] = keys[i]
                vals[w] = vals[i]
                prios[w] = prios[i]
                w += 1
        self._fill[b] = w - s
        self._main_len -= evicted
        self._thresholds[b] = new_thr
        if new_thr > self._max_threshold_seen:
            self._max_threshold_seen = new_thr
        incoming_bumped = incoming_priority < new_thr
        self.bump_events += evicted + (1 if incoming_bumped else 0)
        return BumpReport(new_thr, evicted, incoming_bumped)

    def _backyard_put(self, key: int, value: int, home: int) -> None:
        self._backyard[key] = value
        bucket = self._backyard_by_block.get(home)
        if bucket is None:
            self._backyard_by_block[home] = {key}
        else:
            bucket.add(key)

    def _backyard_remove(self, key: int, home: int) -> None:
        del self._backyard[key]
        bucket = self._backyard_by_block[home]
        bucket.discard(key)
        if not bucket:
            del self._backyard_by_block[home]

    # -- deletion ---------------------------------------------------------

    def delete_entry(self, key: int, policy: CleaningPolicy = CleaningPolicy.NONE) -> bool:
        """Remove ``key`` if present, then run the cleaning policy.

        Main-store removal swaps the block's last occupied slot into the hole
        so occupancy stays contiguous.  Deletion never shrinks offsets or
        thresholds itself; only the cleaning policy moves entries back.
        """
        b, p = hash_parts(key, self.config.seed, self._m, self.config.max_threshold)
        if p < self._thresholds[b]:
            if key not in self._backyard:
                return False
            self._backyard_remove(key, b)
        else:
            slot = self._find_in_block(b, key)
            if slot < 0:
                return False
            last = self._bounds[b] + self._fill[b] - 1
            self._keys[slot] = self._keys[last]
            self._vals[slot] = self._vals[last]
            self._prios[slot] = self._prios[last]
            self._fill[b] -= 1
            self._main_len -= 1
        if policy is not CleaningPolicy.NONE:
            self.clean_backyard(policy, block=b)
        return True

    # -- backyard cleaning ------------------------------------------------

    def clean_backyard(
        self, policy: CleaningPolicy, block: Optional[int] = None
    ) -> CleanReport:
        """Move backyard entries back into the main store.

        ``TARGETED`` steps ``block``'s threshold down one level at a time,
        pulling back that level's keys, and stops at the first level it
        cannot fully honor.  ``NAIVE_FULL`` reinserts the whole backyard
        through the normal insert path, but only when the main store has
        room for all of it; this is the policy whose cost grows with the
        backyard and makes per-delete cleaning impractical at scale.
        """
        if policy is CleaningPolicy.NONE:
            return CleanReport(0)
        if policy is CleaningPolicy.TARGETED:
            if block is None:
                raise ValueError("targeted cleaning requires a block")
            return self._clean_targeted(block)
        return self._clean_naive_full()

    def _clean_targeted(self, b: int) -> CleanReport:
        seed = self.config.seed
        t_max = self.config.max_threshold
        moved = 0
        while True:
            thr = self._thresholds[b]
            if thr == 0:
                break
            free = self._bounds[b + 1] - self._bounds[b] - self._fill[b]
            if free <= 0:
                break
            bucket = self._backyard_by_block.get(b)
            if not bucket:
                break
            level = thr - 1
            candidates = sorted(
                k for k in bucket if hash_parts(k, seed, self._m, t_max)[1] == level
            )
            if not candidates or len(candidates) > free:
                break
            for k in candidates:
                v = self._backyard[k]
                self._backyard_remove(k, b)
                slot = self._bounds[b] + self._fill[b]
                self._keys[slot] = k
                self._vals[slot] = v
                self._prios[slot] = level
                self._fill[b] += 1
                self._main_len += 1
            self._thresholds[b] = level
            moved += len(candidates)
        return CleanReport(moved)

    def _clean_naive_full(self) -> CleanReport:
        # Sum of extents is exactly the capacity, so free slots are cheap to count.
        if self.config.capacity - self._main_len < len(self._backyard):
            return CleanReport(0)
        snapshot = list(self._backyard.items())
        self._backyard.clear()
        affected = list(self._backyard_by_block)
        self._backyard_by_block.clear()
        for b in affected:
            self._thresholds[b] = 0
        moved = 0
        for k, v in snapshot:
            if isinstance(self.try_insert(k, v), PlacedMain):
                moved += 1
        return CleanReport(moved)

    # -- statistics and checking ------------------------------------------

    def stats(self) -> TableStats:
        total = self.total_len
        return TableStats(
            main_len=self._main_len,
            backyard_len=len(self._backyard),
            capacity=self.config.capacity,
            num_blocks=self._m,
            metadata_bits_nominal=self.config.metadata_bits_nominal,
            backyard_fraction=len(self._backyard) / total if total else 0.0,
            max_abs_offset_seen=self._max_abs_offset_seen,
            max_threshold_seen=self._max_threshold_seen,
        )

    def items(self) -> Iterator[tuple[int, int]]:
        """All (key, value) pairs, main store first, in slot order."""
        for b in range(self._m):
            s = self._bounds[b]
            for i in range(s, s + self._fill[b]):
                yield self._keys[i], self._vals[i]
        yield from self._backyard.items()

    def verify_invariants(self) -> Optional[str]:
        """Full re-scan of the table; returns the first violated invariant's
        name (with detail) or None.

        GEOMETRY: boundaries anchored and monotone, every block's extent in
        [1, cap], offsets within bound.  MEMBERSHIP: every main entry hashes
        home with priority >= its block's threshold, every backyard entry
        below its home's threshold.  CONSERVATION: lengths add up, no key is
        in both stores, no duplicates.
        """
        cfg = self.config
        m = self._m
        bounds = np.asarray(self._bounds, dtype=np.int64)
        fill = np.asarray(self._fill, dtype=np.int64)
        thresholds = np.asarray(self._thresholds, dtype=np.int64)

        if bounds[0] != 0:
            return f"GEOMETRY: first boundary {bounds[0]} != 0"
        if bounds[-1] != cfg.capacity:
            return f"GEOMETRY: last boundary {bounds[-1]} != capacity {cfg.capacity}"
        ext = np.diff(bounds)
        if (ext < 1).any():
            b = int(np.argmax(ext < 1))
            return f"GEOMETRY: block {b} squished to extent {int(ext[b])}"
        caps = np.full(m, cfg.sliding_block_size, dtype=np.int64)
        caps[m - 1] = self._ext_cap_last
        if (ext > caps).any():
            b = int(np.argmax(ext > caps))
            return f"GEOMETRY: block {b} extent {int(ext[b])} exceeds cap {int(caps[b])}"
        offsets = bounds[:-1] - np.arange(m, dtype=np.int64) * cfg.block_size
        if offsets[0] != 0:
            return f"GEOMETRY: block 0 offset {int(offsets[0])} != 0"
        if (np.abs(offsets) > cfg.max_offset).any():
            b = int(np.argmax(np.abs(offsets) > cfg.max_offset))
            return f"GEOMETRY: block {b} offset {int(offsets[b])} beyond +/-{cfg.max_offset}"
        if (fill < 0).any() or (fill > ext).any():
            b = int(np.argmax((fill < 0) | (fill > ext)))
            return f"GEOMETRY: block {b} fill {int(fill[b])} outside [0, {int(ext[b])}]"
        if (thresholds < 0).any() or (thresholds > cfg.max_threshold).any():
            b = int(np.argmax((thresholds < 0) | (thresholds > cfg.max_threshold)))
            return f"GEOMETRY: block {b} threshold {int(thresholds[b])} outside [0, {cfg.max_threshold}]"

        slots = np.arange(cfg.capacity, dtype=np.int64)
        owner = np.searchsorted(bounds, slots, side="right") - 1
        occupied = slots - bounds[owner] < fill[owner]
        main_keys = np.asarray(self._keys, dtype=np.uint64)[occupied]
        if main_keys.size:
            homes, prios = hash_arrays(main_keys, cfg.seed, m, cfg.max_threshold)
            if (homes != owner[occupied]).any():
                i = int(np.argmax(homes != owner[occupied]))
                return (
                    f"MEMBERSHIP: main key {int(main_keys[i])} stored in block "
                    f"{int(owner[occupied][i])} but hashes to {int(homes[i])}"
                )
            if (prios < thresholds[homes]).any():
                i = int(np.argmax(prios < thresholds[homes]))
                return (
                    f"MEMBERSHIP: main key {int(main_keys[i])} priority {int(prios[i])} "
                    f"below threshold {int(thresholds[homes[i]])}"
                )
            cached = np.asarray(self._prios, dtype=np.int64)[occupied]
            if (cached != prios).any():
                i = int(np.argmax(cached != prios))
                return (
                    f"MEMBERSHIP: cached priority {int(cached[i])} for key "
                    f"{int(main_keys[i])} disagrees with recomputed {int(prios[i])}"
                )
        if self._backyard:
            by_keys = np.fromiter(self._backyard, dtype=np.uint64, count=len(self._backyard))
            homes, prios = hash_arrays(by_keys, cfg.seed, m, cfg.max_threshold)
            if (prios >= thresholds[homes]).any():
                i = int(np.argmax(prios >= thresholds[homes]))
                return (
                    f"MEMBERSHIP: backyard key {int(by_keys[i])} priority {int(prios[i])} "
                    f"not below threshold {int(thresholds[homes[i]])}"
                )
        else:
            by_keys = np.empty(0, dtype=np.uint64)

        if self._main_len != int(fill.sum()):
            return f"CONSERVATION: main_len {self._main_len} != sum of fills {int(fill.sum())}"
        if self.total_len != self._main_len + len(self._backyard):
            return "CONSERVATION: total_len out of sync"
        if main_keys.size and np.unique(main_keys).size != main_keys.size:
            return "CONSERVATION: duplicate key in main store"
        if main_keys.size and by_keys.size and np.isin(main_keys, by_keys).any():
            k = int(main_keys[np.isin(main_keys, by_keys)][0])
            return f"CONSERVATION: key {k} present in both stores"
        index_total = sum(len(s) for s in self._backyard_by_block.values())
        if index_total != len(self._backyard):
            return (
                f"CONSERVATION: backyard index holds {index_total} keys, "
                f"map holds {len(self._backyard)}"
            )
        for home, bucket in self._backyard_by_block.items():
            for k in bucket:
                if k not in self._backyard:
                    return f"CONSERVATION: indexed key {k} missing from backyard map"
                if hash_parts(k, cfg.seed, m, cfg.max_threshold)[0] != home:
                    return f"CONSERVATION: key {k} indexed under wrong home block {home}"
        return None


def new_table(config: SlickConfig) -> SlickTable:
    """Create an empty table; rejects configurations violating any invariant."""
    return SlickTable(config)
