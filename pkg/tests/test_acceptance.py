"""Acceptance gate: one test per top-level criterion, at stated tolerances.

The expensive campaigns (the mixed-operation oracle run and the desk-scale
grid) execute once in module-scoped fixtures; the criteria that share their
evidence read from the same run.
"""

import copy
import csv
import random
import subprocess
import sys
import time

import pytest

from slickhash import (
    CleaningPolicy,
    SlickConfig,
    SlickTable,
    default_config,
    grid_configs,
)
from slickhash.bench import CSV_HEADER

from reference import ModelMap, find_keys

DESK = 100_000
ORACLE_OPS = 100_000
ORACLE_UNIVERSE = 50_000
SCAN_EVERY = 1_000


def _passline(name):
    print(f"ACCEPTANCE {name}: PASS")


@pytest.fixture(scope="module")
def oracle_campaign():
    """Mixed-operation runs for the 8 grid configs plus the degenerate one,
    with a full invariant scan every 1,000 operations."""
    configs = grid_configs(ORACLE_UNIVERSE) + [
        SlickConfig(1, 1, 0, 1, capacity=ORACLE_UNIVERSE)
    ]
    divergences = []
    violations = []
    start = time.perf_counter()
    for idx, cfg in enumerate(configs):
        table = SlickTable(cfg)
        model = ModelMap()
        rng = random.Random(1000 + idx)
        for step in range(ORACLE_OPS):
            op = rng.random()
            key = rng.randrange(ORACLE_UNIVERSE)
            if op < 0.60:
                value = rng.getrandbits(64)
                table.try_insert(key, value)
                model.insert(key, value)
            elif op < 0.725:
                if table.get(key) != model.get(key):
                    divergences.append((cfg.label, step, "get", key))
            elif op < 0.85:
                if table.contains(key) != model.contains(key):
                    divergences.append((cfg.label, step, "contains", key))
            else:
                if table.delete_entry(key) != model.delete(key):
                    divergences.append((cfg.label, step, "delete", key))
            if step % SCAN_EVERY == SCAN_EVERY - 1:
                err = table.verify_invariants()
                if err is not None:
                    violations.append((cfg.label, step, err))
                if len(table) != len(model):
                    divergences.append((cfg.label, step, "len", None))
        err = table.verify_invariants()
        if err is not None:
            violations.append((cfg.label, ORACLE_OPS, err))
        for k, v in model.data.items():
            if table.get(k) != v:
                divergences.append((cfg.label, ORACLE_OPS, "final-get", k))
                break
    elapsed = time.perf_counter() - start
    return {
        "divergences": divergences,
        "violations": violations,
        "elapsed": elapsed,
        "configs": len(configs),
    }


@pytest.fixture(scope="module")
def grid_run(tmp_path_factory):
    """The real CLI, desk scale, defaults: 8 configs, both baselines,
    3 phases, 3 repetitions."""
    path = tmp_path_factory.mktemp("acceptance") / "grid.csv"
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "slickhash.cli", "grid", "--csv", str(path)],
        capture_output=True,
        text=True,
        timeout=600,
    )
    elapsed = time.perf_counter() - start
    assert proc.returncode == 0, proc.stderr
    with open(path, newline="") as fh:
        rows = list(csv.DictReader(fh))
    return {"rows": rows, "elapsed": elapsed, "path": path}


def test_oracle_equivalence_all_configs(oracle_campaign):
    # 100,000 mixed operations (60/25/15) from a 50,000-key universe, for
    # the 8 grid configs plus the degenerate config: zero divergences from
    # the reference map, under 60 s total.
    assert oracle_campaign["configs"] == 9
    assert oracle_campaign["divergences"] == []
    assert oracle_campaign["elapsed"] < 60.0, (
        f"oracle campaign took {oracle_campaign['elapsed']:.1f}s"
    )
    _passline("oracle-equivalence")


def test_invariant_scans_during_oracle_run(oracle_campaign):
    # Full MEMBERSHIP/GEOMETRY/CONSERVATION re-scan every 1,000 operations:
    # zero violations across all nine configurations.
    assert oracle_campaign["violations"] == []
    _passline("invariant-scans")


def test_backyard_occupancy_default_config(grid_run):
    inserts = [
        r
        for r in grid_run["rows"]
        if r["impl"] == "slick" and r["config"] == "10_20_10_10" and r["phase"] == "insert"
    ]
    assert len(inserts) == 3
    fractions = {int(r["backyard_len"]) / DESK for r in inserts}
    assert len(fractions) == 1
    fraction = fractions.pop()
    assert 0.02 <= fraction <= 0.06, f"backyard fraction {fraction:.4f}"
    _passline(f"backyard-occupancy ({fraction:.4f})")


def test_backyard_monotonicity_across_sweeps(grid_run):
    by = {}
    for r in grid_run["rows"]:
        if r["impl"] == "slick" and r["phase"] == "insert" and r["repetition"] == "0":
            by[r["config"]] = int(r["backyard_len"])
    block_sweep = [by["5_10_5_5"], by["10_20_10_10"], by["50_100_50_50"], by["200_400_200_200"]]
    assert block_sweep == sorted(block_sweep, reverse=True) and len(set(block_sweep)) == 4, block_sweep
    joint_sweep = [by["10_20_10_10"], by["10_40_20_10"], by["10_100_50_10"]]
    assert joint_sweep == sorted(joint_sweep, reverse=True) and len(set(joint_sweep)) == 3, joint_sweep
    threshold_sweep = [by["10_20_10_10"], by["10_20_10_40"], by["10_20_10_100"]]
    assert threshold_sweep == sorted(threshold_sweep, reverse=True), threshold_sweep
    _passline("backyard-monotonicity")


def test_metadata_bits_exact_at_desk_scale(grid_run):
    cfg = default_config(DESK)
    assert cfg.num_blocks == 10_000
    assert cfg.metadata_bits_nominal == 10_000 * 9 == 90_000
    csv_bits = {
        r["metadata_bits"]
        for r in grid_run["rows"]
        if r["impl"] == "slick" and r["config"] == "10_20_10_10"
    }
    assert csv_bits == {"90000"}
    _passline("metadata-accounting")


def test_guard_regressions_overarc_and_rightmost():
    # Over-arc: a full block borrowing over an empty single-slot neighbor
    # must not squish it.  Same insert sequence, guard on vs off.
    def run_overarc(guard):
        t = SlickTable(SlickConfig(2, 4, 2, 4, capacity=8))
        t._overarc_guard = guard
        for home, count in ((0, 2), (1, 4)):
            for k in find_keys(0, 4, 4, home=home, count=count):
                t.try_insert(k, k)
        return t

    ok = run_overarc(True)
    assert ok.verify_invariants() is None
    assert min(ok.block_extent(i)[1] - ok.block_extent(i)[0] for i in range(4)) >= 1

    broken = run_overarc(False)
    err = broken.verify_invariants()
    assert err is not None and "GEOMETRY" in err, err

    # Rightmost block: pressure next to the fixed final boundary never
    # moves it and never exceeds the offset bound.
    t = SlickTable(SlickConfig(4, 8, 2, 4, capacity=16))
    last = t.config.num_blocks - 1
    for k in find_keys(0, t.config.num_blocks, 4, home=last - 1, count=8):
        t.try_insert(k, k)
        assert t.block_extent(last)[1] == t.config.capacity
        assert abs(t.block_meta(last).offset) <= t.config.max_offset
        assert t.verify_invariants() is None
    _passline("guard-regressions")


def test_cleaning_policies_targeted_and_naive_full():
    # Targeted after bulk deletion: entries flow back, membership intact.
    cfg = default_config(10_000, seed=6)
    t = SlickTable(cfg)
    for k in range(10_000):
        t.try_insert(k, k)
    assert t.backyard_len > 0
    for k in range(0, 10_000, 2):
        t.delete_entry(k)
    moved = sum(
        t.clean_backyard(CleaningPolicy.TARGETED, block=b).moved
        for b in range(cfg.num_blocks)
    )
    assert moved >= 1
    assert t.verify_invariants() is None

    # NaiveFull at capacity 10,000: terminates, conserves entries.
    def overfilled(n_keys):
        table = SlickTable(default_config(10_000, seed=8))
        for k in range(n_keys):
            table.try_insert(k, k)
        k = 0
        while table.config.capacity - table.main_len < table.backyard_len:
            table.delete_entry(k)
            k += 1
        return table

    small = overfilled(10_000)
    big = overfilled(14_000)
    assert big.backyard_len > 4 * small.backyard_len > 0

    def clean_time(table):
        best = None
        for _ in range(3):
            trial = copy.deepcopy(table)
            t0 = time.perf_counter()
            report = trial.clean_backyard(CleaningPolicy.NAIVE_FULL)
            dt = time.perf_counter() - t0
            assert report.moved >= 1
            assert trial.total_len == table.total_len
            assert trial.verify_invariants() is None
            best = dt if best is None else min(best, dt)
        return best

    t_small = clean_time(small)
    t_big = clean_time(big)
    assert t_big > t_small, f"naive-full times: small {t_small:.4f}s, big {t_big:.4f}s"
    _passline("cleaning-policies")


def test_grid_end_to_end_under_budget(grid_run):
    rows = grid_run["rows"]
    assert rows and list(rows[0].keys()) == list(CSV_HEADER)
    slick = [r for r in rows if r["impl"] == "slick"]
    assert len(slick) == 8 * 3 * 3
    combos = {(r["config"], r["phase"], r["repetition"]) for r in slick}
    assert len(combos) == 72
    baselines = [r for r in rows if r["impl"] in ("unordered_map", "ordered_map")]
    assert len(baselines) == 2 * 3 * 3
    for r in rows:
        assert r["ops"] == str(DESK)
        float(r["ns_per_op"])
    assert grid_run["elapsed"] < 300.0, f"grid took {grid_run['elapsed']:.1f}s"
    _passline(f"grid-end-to-end ({grid_run['elapsed']:.1f}s)")


def test_slick_query_beats_ordered_map(grid_run):
    def best(impl, config):
        vals = [
            float(r["ns_per_op"])
            for r in grid_run["rows"]
            if r["impl"] == impl and r["config"] == config and r["phase"] == "query"
        ]
        assert len(vals) == 3
        return min(vals)

    slick_q = best("slick", "10_20_10_10")
    ordered_q = best("ordered_map", "")
    assert slick_q < ordered_q, f"slick {slick_q:.0f} ns/op vs ordered map {ordered_q:.0f} ns/op"
    _passline(f"query-vs-ordered-map ({slick_q:.0f} < {ordered_q:.0f} ns/op)")
