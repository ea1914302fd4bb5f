"""Jacquet-module expansion of segments induced to the tower of groups.

An object of the tower grade is a stack of GL factors riding on a named
base object (a cuspidal symbol or a fixture standing for a known
representation).  Its expansion lives in the tensor grade
GL (x) tower and records, level by level, what the normalized Jacquet
restriction sees.  The expansion of an induced object is computed from
the expansion of its base by the structural formula: a double sum over
the ways the inducing segment can shed a contragredient prefix and a
plain suffix.
"""

from __future__ import annotations

from .algebra import FormalSum, GLTerm, GradeError, Segment
from .halfint import HalfInt


class GSpinTerm:
    """A formal induced object: gl_terms[0] x gl_terms[1] x ... |x base.

    The base is a bare name; cuspidal leaves have an empty stack.  The
    stack order records how the object was built, which is convenient
    for memoization; ``flattened`` forgets it, since products commute in
    the Grothendieck group.
    """

    __slots__ = ("gl_terms", "base")

    def __init__(self, gl_terms, base: str):
        gl_terms = tuple(gl_terms)
        for t in gl_terms:
            if not isinstance(t, GLTerm):
                raise TypeError("gl_terms must contain GLTerm objects")
            if t.is_unit:
                raise ValueError("unit GL factors are not stored on the stack")
        if not isinstance(base, str) or not base:
            raise ValueError("base must be a nonempty name")
        self.gl_terms = gl_terms
        self.base = base

    @classmethod
    def cuspidal(cls, name: str) -> "GSpinTerm":
        return cls((), name)

    @property
    def is_cuspidal(self) -> bool:
        return not self.gl_terms

    def flattened(self) -> "GSpinTerm":
        """Merge the stack into one multiset; canonical up to commutation."""
        merged = GLTerm.unit()
        for t in self.gl_terms:
            merged = merged * t
        if merged.is_unit:
            return GSpinTerm((), self.base)
        return GSpinTerm((merged,), self.base)

    def degree(self, leaf_degree=None) -> int:
        """GL degree of the stack plus the declared degree of the base."""
        d = sum(t.degree for t in self.gl_terms)
        if leaf_degree:
            d += leaf_degree.get(self.base, 0)
        return d

    @property
    def sort_key(self):
        return (tuple(t.sort_key for t in self.gl_terms), self.base)

    def __eq__(self, other):
        if not isinstance(other, GSpinTerm):
            return NotImplemented
        return self.gl_terms == other.gl_terms and self.base == other.base

    def __hash__(self):
        return hash((self.gl_terms, self.base))

    def __str__(self):
        if self.is_cuspidal:
            return self.base
        stack = " |x ".join(str(t) for t in self.gl_terms)
        return f"{stack} |x {self.base}"

    def __repr__(self):
        return f"GSpinTerm({list(self.gl_terms)!r}, {self.base!r})"


def induce(top, obj: GSpinTerm) -> GSpinTerm:
    """Put a segment or GL term on top of an object; the unit is dropped."""
    if isinstance(top, Segment):
        top = GLTerm.of(top)
    if not isinstance(top, GLTerm):
        raise TypeError("can only induce from a Segment or GLTerm")
    if top.is_unit:
        return obj
    return GSpinTerm((top,) + obj.gl_terms, obj.base)


def _check_entry(obj: GSpinTerm, expansion: FormalSum):
    unit_terms = [(t, c) for t, c in expansion.terms
                  if isinstance(t, tuple) and len(t) == 2 and t[0] == GLTerm.unit()]
    if len(unit_terms) != 1 or unit_terms[0][0][1] != obj or unit_terms[0][1] != 1:
        raise ValueError("an expansion must contain exactly one unit-left term, "
                         "1 (x) the object itself, with coefficient 1")
    for t, _ in expansion.terms:
        if not (isinstance(t, tuple) and len(t) == 2
                and isinstance(t[0], GLTerm) and isinstance(t[1], GSpinTerm)):
            raise GradeError("expansion terms must be GL (x) tower pairs")


class ExpansionTable:
    """Known Jacquet expansions, keyed by the object they expand.

    Cuspidal leaves expand to exactly 1 (x) themselves; fixture entries
    may declare anything satisfying the unit-left rule.  The table also
    serves as the memo for ``expand_induced``: keys are structural, so
    the same stack built the same way is computed once.  Entries are
    written at most once per key and never mutated, so concurrent
    readers racing a writer still see a consistent value.
    """

    def __init__(self):
        self._rows = {}

    def add_cuspidal(self, name: str) -> GSpinTerm:
        leaf = GSpinTerm.cuspidal(name)
        self.register(leaf, FormalSum.of((GLTerm.unit(), leaf), 1))
        return leaf

    def register(self, obj: GSpinTerm, expansion: FormalSum):
        _check_entry(obj, expansion)
        if obj.is_cuspidal and len(expansion) != 1:
            # a cuspidal leaf restricts to nothing but itself
            raise ValueError("a cuspidal entry must be exactly 1 (x) itself")
        if obj in self._rows:
            raise ValueError(f"an expansion for {obj} is already registered")
        self._rows[obj] = expansion

    def lookup(self, obj: GSpinTerm) -> FormalSum:
        try:
            return self._rows[obj]
        except KeyError:
            raise ValueError(f"no expansion registered for {obj}") from None

    def __contains__(self, obj) -> bool:
        return obj in self._rows


def expand_induced(seg: Segment, base: GSpinTerm, table: ExpansionTable,
                   memoize: bool = True) -> FormalSum:
    """Expansion of the object obtained by inducing ``seg`` over ``base``.

    Write the segment as [nu^(-k) rho, nu^l rho].  For every pair
    i <= j drawn from {-k-1, ..., l}, every term tau (x) s' of the base
    expansion contributes

        [nu^(-i) rho, nu^k rho] x [nu^(j+1) rho, nu^l rho] x tau
            (x) [nu^(i+1) rho, nu^j rho] |x s',

    where segments of span -1 evaporate (they are units).  Degrees are
    conserved term by term, and the unique unit-left term is
    1 (x) (seg |x base) with coefficient one.
    """
    if seg.is_empty:
        raise ValueError("induction by the empty segment expands nothing new")
    node = induce(seg, base)
    if memoize and node in table:
        return table.lookup(node)
    base_rows = table.lookup(base)
    rho = seg.rho
    k = -seg.a
    l = seg.b
    out = {}
    for i in HalfInt.range_inclusive(-k - 1, l):
        for j in HalfInt.range_inclusive(i, l):
            shed_left = Segment(rho, -i, k)
            shed_right = Segment(rho, j + 1, l)
            kept = Segment(rho, i + 1, j)
            for (tau, sprime), c in base_rows.terms:
                gl = GLTerm.of(shed_left, shed_right) * tau
                key = (gl, induce(kept, sprime))
                out[key] = out.get(key, 0) + c
    result = FormalSum(out)
    if memoize:
        table.register(node, result)
    return result


def flatten_sum(expansion: FormalSum) -> FormalSum:
    """Forget stack order on every induced leg; sums from different
    build orders of the same object agree after this."""
    out = {}
    for (gl, obj), c in expansion.terms:
        key = (gl, obj.flattened())
        out[key] = out.get(key, 0) + c
    return FormalSum(out)


def degree_conserved(expansion: FormalSum, total: int, leaf_degree=None) -> bool:
    """True iff every term's GL degree plus induced-leg degree is ``total``."""
    for (gl, obj), _ in expansion.terms:
        if gl.degree + obj.degree(leaf_degree) != total:
            return False
    return True
