"""Tour of the segment layer: exact half-integer endpoints, segments,
and the comultiplication that splits a segment into left/right pieces.

Run with:  python3 demos/segments_and_comultiplication.py
"""

from segtriples import CuspidalSymbol, EVEN, HalfInt, ODD, Segment, comult

rho = CuspidalSymbol("rho", 1, ODD)
tau = CuspidalSymbol("tau", 2, EVEN)


def show(seg):
    expansion = comult(seg)
    print(f"m*({seg}) has {len(expansion)} terms:")
    for (left, right), coeff in expansion.terms:
        print(f"  {coeff} * {left} (x) {right}")
    print()


# A point segment splits two ways: keep it on the left or on the right.
show(Segment(rho, 0, 0))

# Span one: one extra cut position in the middle.
show(Segment(rho, -1, 0))

# Half-integer endpoints are exact, no floats involved anywhere.
a = HalfInt.parse("-3/2")
show(Segment(tau, a, a + 2))

# The number of terms is always span + 2, and every coefficient is 1.
for span in range(6):
    seg = Segment(rho, 0, span)
    assert len(comult(seg)) == span + 2
    assert all(c == 1 for _, c in comult(seg).terms)
print("term count is span + 2 with unit coefficients, spans 0..5: ok")
