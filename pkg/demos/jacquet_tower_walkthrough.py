"""Expanding an induced tower into its graded Jacquet terms.

We stack two segments over a cuspidal leaf and expand the result.  The
expansion of the inner level is computed once, memoized in the table,
and reused by the outer level.

Run with:  python3 demos/jacquet_tower_walkthrough.py
"""

from segtriples import (
    CuspidalSymbol,
    ExpansionTable,
    ODD,
    Segment,
    degree_conserved,
    expand_induced,
    induce,
    render_term,
)

rho = CuspidalSymbol("rho", 1, ODD)

table = ExpansionTable()
leaf = table.add_cuspidal("sigma")

inner = Segment(rho, 0, 0)
outer = Segment(rho, -1, 1)

mid = induce(inner, leaf)
print(f"inner level {mid}:")
for term, coeff in expand_induced(inner, leaf, table).terms:
    print("  " + render_term(term, coeff))
print()

top = induce(outer, mid)
expansion = expand_induced(outer, mid, table)
print(f"outer level {top}, {len(expansion)} distinct terms:")
for term, coeff in expansion.terms:
    print("  " + render_term(term, coeff))
print()

# every term carries the same total degree as the tower itself
leaf_degree = {"sigma": 2}
total = leaf_degree["sigma"] + inner.degree + outer.degree
assert degree_conserved(expansion, total, leaf_degree)
print(f"degree {total} conserved across all {expansion.total} terms (with multiplicity)")

# the table now holds the leaf and both levels
assert mid in table and top in table
print(f"memoized nodes: leaf, {mid}, {top}")
