"""Sliding-block hash table with a bumped backyard store.

The table keeps almost every entry in a flat slot array whose block
boundaries slide within a small bounded offset; entries that do not fit are
bumped into a backyard map chosen by a per-block priority threshold.  See
:mod:`slickhash.table` for the data structure and :mod:`slickhash.bench`
for the benchmark harness behind the ``slick-bench`` command.
"""

from .bench import (
    BenchError,
    BenchPlan,
    BenchRecord,
    gen_keys,
    grid_configs,
    read_csv_rows,
    render_csv,
    run_bench,
    run_grid,
    run_phase,
    write_csv,
)
from .hashing import HashedKey, hash_key, key_stream, mix64
from .table import (
    BlockMeta,
    BumpReason,
    CleaningPolicy,
    CleanReport,
    Direction,
    InsertOutcome,
    PlacedBackyard,
    PlacedMain,
    ReplacedExisting,
    SlickConfig,
    SlickTable,
    TableStats,
    default_config,
    new_table,
)

__all__ = [
    "BenchError",
    "BenchPlan",
    "BenchRecord",
    "BlockMeta",
    "BumpReason",
    "CleaningPolicy",
    "CleanReport",
    "Direction",
    "HashedKey",
    "InsertOutcome",
    "PlacedBackyard",
    "PlacedMain",
    "ReplacedExisting",
    "SlickConfig",
    "SlickTable",
    "TableStats",
    "default_config",
    "gen_keys",
    "grid_configs",
    "hash_key",
    "key_stream",
    "mix64",
    "new_table",
    "read_csv_rows",
    "render_csv",
    "run_bench",
    "run_grid",
    "run_phase",
    "write_csv",
]

__version__ = "0.1.0"
