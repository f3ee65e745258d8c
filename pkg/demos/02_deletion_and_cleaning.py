"""Deletion and the two backyard cleaning policies.

Fills a small table past the point where bumping starts, deletes a batch,
and shows why cleaning is a policy decision: plain deletion leaves bumped
entries stranded in the backyard, targeted cleaning walks one block's
threshold back down, and naive full cleaning rebuilds everything at a cost
that grows with the backyard.
"""

import time

from slickhash import CleaningPolicy, SlickTable, default_config


def occupancy(table, note):
    s = table.stats()
    print(
        f"{note}: main {s.main_len}, backyard {s.backyard_len} "
        f"({100 * s.backyard_fraction:.2f}%), max threshold seen {s.max_threshold_seen}"
    )


def main():
    capacity = 10_000
    table = SlickTable(default_config(capacity, seed=3))
    for k in range(capacity):
        table.try_insert(k, k)
    occupancy(table, "after filling to capacity")

    # Plain deletion never lowers thresholds, so the backyard keeps its
    # population even as main slots free up.
    for k in range(0, capacity, 2):
        table.delete_entry(k)
    occupancy(table, "after deleting every other key (policy NONE)")

    # Targeted cleaning fixes one home block at a time.
    moved = 0
    for b in range(table.config.num_blocks):
        moved += table.clean_backyard(CleaningPolicy.TARGETED, block=b).moved
    occupancy(table, f"after targeted cleaning of every block (moved {moved})")
    assert table.verify_invariants() is None

    # Naive full cleaning reinserts the whole backyard, guarded by a room
    # check.  Its cost is proportional to the backyard size, which is what
    # makes it impractical to run after every delete at scale.
    for trial_keys in (11_000, 14_000):
        t = SlickTable(default_config(capacity, seed=3))
        for k in range(trial_keys):
            t.try_insert(k, k)
        k = 0
        while t.config.capacity - t.main_len < t.backyard_len:
            t.delete_entry(k)
            k += 1
        before = t.backyard_len
        start = time.perf_counter()
        report = t.clean_backyard(CleaningPolicy.NAIVE_FULL)
        elapsed = time.perf_counter() - start
        assert t.verify_invariants() is None
        print(
            f"naive full with backyard {before}: moved {report.moved} "
            f"in {1000 * elapsed:.1f} ms"
        )


if __name__ == "__main__":
    main()
