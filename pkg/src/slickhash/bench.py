"""Workload benchmark harness.

Times insert/query/delete phases over the sliding-block table and two
platform baselines (dict for the unordered map, a plain binary search tree
for the ordered map, which the standard library does not provide), runs the
hyperparameter grid, and writes one CSV row per measured phase.  Timing
wraps the tight loop only; nothing is measured or recorded inside it.
"""

from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .hashing import key_stream
from .table import SlickConfig, SlickTable, default_config

PHASES = ("insert", "query", "delete")
BASELINES = ("unordered_map", "ordered_map")
DESK_CAPACITY = 100_000
PAPER_CAPACITY = 2_000_000
DELETE_BATCH = 10_000

CSV_HEADER = (
    "impl",
    "config",
    "phase",
    "ops",
    "total_ns",
    "ns_per_op",
    "backyard_len",
    "metadata_bits",
    "seed",
    "repetition",
)


class BenchError(ValueError):
    """Invalid plan or backend/phase combination."""


@dataclass(frozen=True)
class BenchPlan:
    """One harness run: which table configs, baselines, phases, and sizes."""

    capacity: int = DESK_CAPACITY
    n_ops: int = DESK_CAPACITY
    phases: tuple[str, ...] = PHASES
    configs: tuple[SlickConfig, ...] = ()
    baselines: tuple[str, ...] = BASELINES
    seed: int = 0
    repetitions: int = 3

    def __post_init__(self) -> None:
        if self.repetitions < 1:
            raise BenchError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.n_ops < 1:
            raise BenchError(f"n_ops must be >= 1, got {self.n_ops}")
        for p in self.phases:
            if p not in PHASES:
                raise BenchError(f"unknown phase {p!r}; choose from {', '.join(PHASES)}")
        for b in self.baselines:
            if b not in BASELINES:
                raise BenchError(f"unknown baseline {b!r}; choose from {', '.join(BASELINES)}")
        if "insert" in self.phases and self.n_ops > self.capacity:
            raise BenchError(
                f"n_ops {self.n_ops} exceeds capacity {self.capacity}; "
                "insert phases target load factor <= 1"
            )


@dataclass(frozen=True)
class BenchRecord:
    """One CSV row: a single phase of a single backend repetition."""

    impl_name: str
    config_label: str
    phase: str
    ops: int
    total_ns: int
    ns_per_op: float
    backyard_len: Optional[int]
    metadata_bits: Optional[int]
    seed: int
    repetition: int


def gen_keys(n: int, seed: int) -> list[int]:
    """n distinct pseudo-random 64-bit keys, deterministic in seed."""
    if n < 1:
        raise BenchError(f"key count must be >= 1, got {n}")
    return key_stream(n, seed).tolist()


# -- backends -------------------------------------------------------------


class SlickBackend:
    impl_name = "slick"

    def __init__(self, config: SlickConfig):
        self.table = SlickTable(config)
        self.config_label = config.label

    def insert(self, key: int, value: int) -> None:
        self.table.try_insert(key, value)

    def get(self, key: int) -> Optional[int]:
        return self.table.get(key)

    def delete(self, key: int) -> bool:
        return self.table.delete_entry(key)

    def __len__(self) -> int:
        return self.table.total_len


class UnorderedMapBackend:
    impl_name = "unordered_map"
    config_label = ""

    def __init__(self) -> None:
        self._map: dict[int, int] = {}

    def insert(self, key: int, value: int) -> None:
        self._map[key] = value

    def get(self, key: int) -> Optional[int]:
        return self._map.get(key)

    def delete(self, key: int) -> bool:
        return self._map.pop(key, None) is not None

    def __len__(self) -> int:
        return len(self._map)


class OrderedMapBackend:
    """Unbalanced binary search tree over parallel node arrays.

    The baseline stands in for a standard ordered map.  Keys arrive in
    pseudo-random order, so expected depth is logarithmic without rebalance
    machinery.  Deleted node slots are not reused; fine for benchmark runs,
    which insert each key once.
    """

    impl_name = "ordered_map"
    config_label = ""

    def __init__(self) -> None:
        self._keys: list[int] = []
        self._vals: list[int] = []
        self._left: list[int] = []
        self._right: list[int] = []
        self._root = -1
        self._size = 0

    def insert(self, key: int, value: int) -> None:
        keys = self._keys
        if self._root < 0:
            self._root = self._new_node(key, value)
            return
        cur = self._root
        while True:
            k = keys[cur]
            if key == k:
                self._vals[cur] = value
                return
            if key < k:
                nxt = self._left[cur]
                if nxt < 0:
                    self._left[cur] = self._new_node(key, value)
                    return
            else:
                nxt = self._right[cur]
                if nxt < 0:
                    self._right[cur] = self._new_node(key, value)
                    return
            cur = nxt

    def _new_node(self, key: int, value: int) -> int:
        self._keys.append(key)
        self._vals.append(value)
        self._left.append(-1)
        self._right.append(-1)
        self._size += 1
        return len(self._keys) - 1

    def get(self, key: int) -> Optional[int]:
        keys = self._keys
        left = self._left
        right = self._right
        cur = self._root
        while cur >= 0:
            k = keys[cur]
            if key == k:
                return self._vals[cur]
            cur = left[cur] if key < k else right[cur]
        return None

    def delete(self, key: int) -> bool:
        keys = self._keys
        left = self._left
        right = self._right
        cur = self._root
        parent = -1
        was_left = False
        while cur >= 0:
            k = keys[cur]
            if key == k:
                break
            parent = cur
            if key < k:
                was_left = True
                cur = left[cur]
            else:
                was_left = False
                cur = right[cur]
        if cur < 0:
            return False
        if left[cur] >= 0 and right[cur] >= 0:
            # Two children: overwrite with the in-order successor, then
            # unlink the successor node instead.
            sp = cur
            s = right[cur]
            s_left = False
            while left[s] >= 0:
                sp = s
                s = left[s]
                s_left = True
            keys[cur] = keys[s]
            self._vals[cur] = self._vals[s]
            cur = s
            parent = sp
            was_left = s_left
        child = left[cur] if left[cur] >= 0 else right[cur]
        if parent < 0:
            self._root = child
        elif was_left:
            left[parent] = child
        else:
            right[parent] = child
        self._size -= 1
        return True

    def __len__(self) -> int:
        return self._size


# -- measurement ----------------------------------------------------------


def run_phase(
    backend, phase: str, keys: Sequence[int], plan: BenchPlan, repetition: int = 0
) -> BenchRecord:
    """Time one phase over ``keys`` on an already-prepared backend."""
    if phase not in PHASES:
        raise BenchError(f"unknown phase {phase!r}")
    for method in ("insert", "get", "delete"):
        if not callable(getattr(backend, method, None)):
            raise BenchError(
                f"backend {backend.impl_name!r} does not support the "
                f"{'query' if method == 'get' else method} phase"
            )
    if phase == "insert":
        ins = backend.insert
        start = time.perf_counter_ns()
        for k in keys:
            ins(k, k)
        total_ns = time.perf_counter_ns() - start
    elif phase == "query":
        get = backend.get
        start = time.perf_counter_ns()
        for k in keys:
            get(k)
        total_ns = time.perf_counter_ns() - start
    else:
        delete = backend.delete
        n = len(keys)
        batches = [keys[i : i + DELETE_BATCH] for i in range(0, n, DELETE_BATCH)]
        start = time.perf_counter_ns()
        for batch in batches:
            for k in batch:
                delete(k)
        total_ns = time.perf_counter_ns() - start
    ops = len(keys)
    if isinstance(backend, SlickBackend):
        stats = backend.table.stats()
        backyard_len: Optional[int] = stats.backyard_len
        metadata_bits: Optional[int] = stats.metadata_bits_nominal
    else:
        backyard_len = None
        metadata_bits = None
    return BenchRecord(
        impl_name=backend.impl_name,
        config_label=backend.config_label,
        phase=phase,
        ops=ops,
        total_ns=total_ns,
        ns_per_op=total_ns / ops,
        backyard_len=backyard_len,
        metadata_bits=metadata_bits,
        seed=plan.seed,
        repetition=repetition,
    )


def _run_backend(factory, plan: BenchPlan, keys: Sequence[int]) -> list[BenchRecord]:
    records = []
    ordered_phases = [p for p in PHASES if p in plan.phases]
    for rep in range(plan.repetitions):
        backend = factory()
        if "insert" not in plan.phases and ordered_phases:
            # Query and delete phases presuppose a populated backend.
            for k in keys:
                backend.insert(k, k)
        for phase in ordered_phases:
            records.append(run_phase(backend, phase, keys, plan, rep))
    return records


def run_bench(plan: BenchPlan) -> list[BenchRecord]:
    """Run every config and baseline in the plan; phases run in the fixed
    order insert, query, delete on a fresh backend per repetition."""
    keys = gen_keys(plan.n_ops, plan.seed)
    records: list[BenchRecord] = []
    for config in plan.configs:
        records.extend(_run_backend(lambda c=config: SlickBackend(c), plan, keys))
    for baseline in plan.baselines:
        factory = UnorderedMapBackend if baseline == "unordered_map" else OrderedMapBackend
        records.extend(_run_backend(factory, plan, keys))
    return records


# -- the hyperparameter grid ----------------------------------------------

# (block, sliding, offset, threshold): a block-size sweep with the other
# parameters at their defaults, a joint sliding-size/offset sweep, and a
# threshold sweep.  The default 10_20_10_10 appears once.
GRID_POINTS = (
    (5, 10, 5, 5),
    (10, 20, 10, 10),
    (50, 100, 50, 50),
    (200, 400, 200, 200),
    (10, 40, 20, 10),
    (10, 100, 50, 10),
    (10, 20, 10, 40),
    (10, 20, 10, 100),
)


def grid_configs(capacity: int, seed: int = 0) -> list[SlickConfig]:
    configs = []
    for b, sb, off, thr in GRID_POINTS:
        configs.append(
            SlickConfig(
                block_size=b,
                sliding_block_size=sb,
                max_offset=off,
                max_threshold=thr,
                capacity=capacity,
                seed=seed,
            )
        )
    return configs


def run_grid(plan: BenchPlan) -> list[BenchRecord]:
    """Run the full grid at the plan's capacity, plus requested baselines.

    A config that fails validation at this capacity is skipped with a
    stderr note; the rest of the grid still runs.
    """
    import sys

    configs = []
    for b, sb, off, thr in GRID_POINTS:
        try:
            configs.append(SlickConfig(b, sb, off, thr, plan.capacity, plan.seed))
        except ValueError as exc:
            print(f"skipping config {b}_{sb}_{off}_{thr}: {exc}", file=sys.stderr)
    grid_plan = BenchPlan(
        capacity=plan.capacity,
        n_ops=plan.n_ops,
        phases=plan.phases,
        configs=tuple(configs),
        baselines=plan.baselines,
        seed=plan.seed,
        repetitions=plan.repetitions,
    )
    return run_bench(grid_plan)


# -- CSV ------------------------------------------------------------------


def _row(record: BenchRecord) -> list[str]:
    return [
        record.impl_name,
        record.config_label,
        record.phase,
        str(record.ops),
        str(record.total_ns),
        f"{record.ns_per_op:.3f}",
        "" if record.backyard_len is None else str(record.backyard_len),
        "" if record.metadata_bits is None else str(record.metadata_bits),
        str(record.seed),
        str(record.repetition),
    ]


def render_csv(records: Sequence[BenchRecord]) -> str:
    """CSV text with the fixed header, sorted rows, and LF line endings."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    ordered = sorted(
        records, key=lambda r: (r.impl_name, r.config_label, r.phase, r.repetition)
    )
    for record in ordered:
        writer.writerow(_row(record))
    return buf.getvalue()


def write_csv(records: Sequence[BenchRecord], path: str) -> None:
    text = render_csv(records)
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc}") from exc


def read_csv_rows(path: str) -> list[dict[str, str]]:
    """Rows as dicts keyed by header names; extra columns pass through."""
    try:
        with open(path, "r", encoding="utf-8", newline="") as fh:
            return list(csv.DictReader(fh))
    except OSError as exc:
        raise OSError(f"cannot read CSV from {path}: {exc}") from exc
