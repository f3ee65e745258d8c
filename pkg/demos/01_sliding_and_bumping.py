"""Walkthrough of the two core mechanisms: boundary sliding and bumping.

Builds a deliberately tiny table (4 blocks of 2 slots) and narrates what
happens as one block fills past its nominal size: first boundaries slide to
borrow free slots from neighbors, then, once geometry is exhausted, the
block raises its threshold and bumps low-priority entries to the backyard.
"""

from slickhash import PlacedBackyard, PlacedMain, SlickConfig, SlickTable


def show(table, note):
    cfg = table.config
    print(f"\n{note}")
    for b in range(cfg.num_blocks):
        lo, hi = table.block_extent(b)
        meta = table.block_meta(b)
        slots = table._keys[lo : lo + table._fill[b]]
        print(
            f"  block {b}: slots [{lo},{hi})  offset {meta.offset:+d}  "
            f"threshold {meta.threshold}  entries {slots}"
        )
    if table.backyard_len:
        print(f"  backyard: {sorted(table._backyard)}")


def keys_homed_at(table, block, count, start=0):
    """Scan upward from start for keys the hash sends to the given block."""
    out = []
    k = start
    while len(out) < count:
        if table.hash_key(k).home_block == block:
            out.append(k)
        k += 1
    return out


def main():
    cfg = SlickConfig(
        block_size=2, sliding_block_size=4, max_offset=2, max_threshold=4, capacity=8
    )
    table = SlickTable(cfg)
    print(f"capacity {cfg.capacity}, {cfg.num_blocks} blocks of {cfg.block_size}")
    show(table, "fresh table, all boundaries at their nominal positions:")

    target = 1
    keys = keys_homed_at(table, target, 6)
    print(f"\nsix keys that all hash to block {target}: {keys}")

    for i, k in enumerate(keys[:2]):
        table.try_insert(k, k)
    show(table, f"after 2 inserts, block {target} is exactly full:")

    outcome = table.try_insert(keys[2], keys[2])
    assert isinstance(outcome, PlacedMain)
    show(table, "3rd insert: the right boundary slid to borrow a free slot:")

    for k in keys[3:]:
        outcome = table.try_insert(k, k)
        kind = type(outcome).__name__
        if isinstance(outcome, PlacedBackyard):
            kind += f" ({outcome.reason.value})"
        print(f"insert {k}: {kind}")
    show(table, "after all six, sliding ran out and bumping took over:")

    print("\nlookups route by one threshold comparison, then touch one store:")
    for k in keys:
        prio = table.hash_key(k).priority
        thr = table.block_meta(target).threshold
        store = "backyard" if prio < thr else "main"
        print(f"  get({k}) = {table.get(k)}  priority {prio} vs threshold {thr} -> {store}")

    assert table.verify_invariants() is None
    print("\ninvariant scan: clean")


if __name__ == "__main__":
    main()
