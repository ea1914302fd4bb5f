"""Jordan block updates, two ways.

An embedding datum (rho, x, y, base blocks) describes how a square
integrable representation sits inside an induced one.  The block set of
the bigger representation can be read off a closed-form update rule, or
recomputed from scratch by scanning which normalized intertwining
ratios contribute a pole of order two.  The two routes agree on the
nose, and the demo shows both plus the guarded edge cases.

Run with:  python3 demos/block_update_vs_pole_orders.py
"""

from segtriples import (
    CuspidalSymbol,
    EmbeddingDatum,
    HalfInt,
    ODD,
    PreconditionError,
    jord_update,
    jordan_set_from_pole_orders,
)

rho = CuspidalSymbol("rho", 1, ODD)


def both_ways(x, y, base):
    emb = EmbeddingDatum(rho, HalfInt(x), HalfInt(y), frozenset(base))
    closed = jord_update(emb)
    scanned = jordan_set_from_pole_orders(emb, 13)
    assert closed == scanned
    print(f"x={x} y={y} base={sorted(base)} -> {sorted(closed)}")


# y > 0 consumes the block 2y-1 and grows 2x+1 in its place
both_ways(2, 1, {1, 7})

# y <= 0 grows both 2x+1 and the mirrored block 1-2y
both_ways(2, -1, {7})
both_ways(0, 0, set())

# growing and mirroring can land on the same block; sets absorb it
both_ways(2, -2, {5})

print()

# the rule needs the consumed block to actually be there
try:
    jord_update(EmbeddingDatum(rho, HalfInt(2), HalfInt(1), frozenset({5})))
except PreconditionError as exc:
    print(f"rejected: {exc}")

# and a negative top exponent would not produce a positive block at all
try:
    jord_update(EmbeddingDatum(rho, HalfInt(-1), HalfInt(-1), frozenset()))
except PreconditionError as exc:
    print(f"rejected: {exc}")
