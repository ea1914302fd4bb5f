"""Enumerating admissible triples, counting them per block set, and
rendering the one-step dominance relation as a DOT digraph.

Run with:  python3 demos/enumerate_and_count.py
"""

from segtriples import (
    CuspidalSupport,
    CuspidalSymbol,
    EVEN,
    count_by_jord,
    dominance_edges,
    enumerate_admissible,
    triple_text,
)

tau = CuspidalSymbol("tau", 2, EVEN)
cusp = CuspidalSupport("sigma", {})

found = enumerate_admissible(cusp, [tau], max_a=6)
print(f"admissible triples over {cusp.id} with even blocks up to 6: {len(found)}")
for t in found:
    print("  " + triple_text(t))
print()

# the same tally, block set by block set
for blocks in ((), (2,), (2, 4), (2, 4, 6)):
    n = count_by_jord(cusp, {tau: blocks})
    print(f"block set {blocks or '{}'}: {n} admissible sign pattern(s)")
print()

print("dominance digraph (an edge means one subordination step):")
print("digraph dominance {")
for t in found:
    print(f'  "{triple_text(t)}";')
for parent, child in dominance_edges(found):
    print(f'  "{parent}" -> "{child}";')
print("}")
