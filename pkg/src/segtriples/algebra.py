"""Segment algebra over the Grothendieck group of general linear groups.

The basic objects are segments: intervals of consecutive twists
[nu^a rho, nu^b rho] of a fixed self-dual cuspidal symbol rho.  Products
of segments span the positive cone of the Grothendieck group, and the
comultiplication sends a segment to the sum of its suffix (x) prefix
splittings.  Everything here is exact integer combinatorics: terms are
immutable, sums are multisets with positive integer coefficients.
"""

from __future__ import annotations

from .halfint import HalfInt

EVEN = "even"
ODD = "odd"


class GradeError(ValueError):
    """Raised when formal sums from different grades are combined."""


class CuspidalSymbol:
    """An irreducible self-dual cuspidal placeholder.

    Only three attributes matter to the calculus: an identifier, the
    rank of the group the symbol lives on, and the parity of the Jordan
    block sizes it supports (even when the symmetric-type L-function has
    a pole at the origin, odd otherwise).  Symbols compare by id; using
    one id with two different ranks or parities in a session is a
    configuration error, not something this class can detect.
    """

    __slots__ = ("id", "rank", "parity")

    def __init__(self, id: str, rank: int = 1, parity: str = ODD):
        if not isinstance(id, str) or not id:
            raise ValueError("symbol id must be a nonempty string")
        if not isinstance(rank, int) or isinstance(rank, bool) or rank < 1:
            raise ValueError(f"rank must be a positive integer, got {rank!r}")
        if parity not in (EVEN, ODD):
            raise ValueError(f"parity must be {EVEN!r} or {ODD!r}, got {parity!r}")
        self.id = id
        self.rank = rank
        self.parity = parity

    def matches_parity(self, a: int) -> bool:
        """True when the integer a has this symbol's block parity."""
        return (a % 2 == 0) == (self.parity == EVEN)

    def __eq__(self, other):
        if not isinstance(other, CuspidalSymbol):
            return NotImplemented
        return self.id == other.id

    def __hash__(self):
        return hash(self.id)

    def __str__(self):
        return self.id

    def __repr__(self):
        return f"CuspidalSymbol({self.id!r}, rank={self.rank}, parity={self.parity!r})"


class Segment:
    """The interval [nu^a rho, nu^b rho] of consecutive twists.

    The span b - a must be an integer >= -1; the value -1 encodes the
    empty segment, which acts as the unit of the term monoid and is
    silently dropped when terms are assembled.
    """

    __slots__ = ("rho", "a", "b")

    def __init__(self, rho: CuspidalSymbol, a, b):
        if not isinstance(rho, CuspidalSymbol):
            raise TypeError("rho must be a CuspidalSymbol")
        a = HalfInt(a) if not isinstance(a, HalfInt) else a
        b = HalfInt(b) if not isinstance(b, HalfInt) else b
        span = b - a
        if not span.is_integer:
            raise ValueError(f"segment endpoints must differ by an integer: a={a}, b={b}")
        if int(span) < -1:
            raise ValueError(f"segment [{a},{b}] is shorter than empty")
        self.rho = rho
        self.a = a
        self.b = b

    @property
    def is_empty(self) -> bool:
        return int(self.b - self.a) == -1

    @property
    def length(self) -> int:
        return int(self.b - self.a) + 1

    @property
    def degree(self) -> int:
        return self.length * self.rho.rank

    @property
    def center(self) -> HalfInt:
        """The exponent (a+b)/2 making the twisted segment unitarizable."""
        return HalfInt.from_twice((self.a.twice + self.b.twice) // 2)

    @property
    def sort_key(self):
        return (self.rho.id, self.a.twice, self.b.twice)

    def __eq__(self, other):
        if not isinstance(other, Segment):
            return NotImplemented
        return self.rho == other.rho and self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.rho, self.a.twice, self.b.twice))

    def __str__(self):
        if self.is_empty:
            return "1"
        return f"d([{self.a},{self.b}],{self.rho.id})"

    def __repr__(self):
        return f"Segment({self.rho.id}, {self.a}, {self.b})"


class GLTerm:
    """A formal product of nonempty segments, i.e. a multiset.

    The empty multiset is the unit of the Grothendieck-group product.
    """

    __slots__ = ("segments",)

    def __init__(self, segments=()):
        segs = tuple(sorted(segments, key=lambda s: s.sort_key))
        for s in segs:
            if not isinstance(s, Segment):
                raise TypeError("GLTerm holds Segment objects")
            if s.is_empty:
                raise ValueError("GLTerm must not contain empty segments")
        self.segments = segs

    @classmethod
    def of(cls, *segments) -> "GLTerm":
        """Build a term, dropping empty segments (they are the unit)."""
        return cls(tuple(s for s in segments if not s.is_empty))

    @classmethod
    def unit(cls) -> "GLTerm":
        return cls(())

    @property
    def is_unit(self) -> bool:
        return not self.segments

    @property
    def degree(self) -> int:
        return sum(s.degree for s in self.segments)

    @property
    def sort_key(self):
        return tuple(s.sort_key for s in self.segments)

    def __mul__(self, other):
        if not isinstance(other, GLTerm):
            return NotImplemented
        return GLTerm(self.segments + other.segments)

    def __eq__(self, other):
        if not isinstance(other, GLTerm):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self):
        return hash(self.segments)

    def __str__(self):
        if self.is_unit:
            return "1"
        return " x ".join(str(s) for s in self.segments)

    def __repr__(self):
        return f"GLTerm({list(self.segments)!r})"


def term_key(term):
    """Canonical sort key for any term a FormalSum may carry."""
    if isinstance(term, tuple):
        return tuple(term_key(t) for t in term)
    return term.sort_key


def _term_mul(s, t):
    """Product of two terms of the same grade, or GradeError."""
    if isinstance(s, GLTerm) and isinstance(t, GLTerm):
        return s * t
    if isinstance(s, tuple) and isinstance(t, tuple) and len(s) == len(t) == 2:
        left = _term_mul(s[0], t[0])
        if isinstance(s[1], GLTerm) and isinstance(t[1], GLTerm):
            return (left, s[1] * t[1])
        raise GradeError("no product is defined on the induced leg")
    raise GradeError(f"grade mismatch: cannot multiply {type(s).__name__} by {type(t).__name__}")


class FormalSum:
    """A finite Z>=0-linear combination of terms, stored term -> coefficient.

    Terms are either GLTerm (plain grade) or 2-tuples for tensor grades;
    all coefficients are positive, and a missing term has coefficient 0.
    Sums are immutable: arithmetic returns new objects.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        if coeffs:
            for term, c in (coeffs.items() if isinstance(coeffs, dict) else coeffs):
                if not isinstance(c, int) or isinstance(c, bool):
                    raise ValueError("coefficients must be integers")
                if c < 0:
                    raise ValueError("coefficients must be nonnegative")
                if c:
                    data[term] = data.get(term, 0) + c
        self._coeffs = data

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    @classmethod
    def of(cls, term, coeff: int = 1) -> "FormalSum":
        return cls({term: coeff})

    def coefficient(self, term) -> int:
        return self._coeffs.get(term, 0)

    @property
    def terms(self):
        """Pairs (term, coefficient) in canonical order."""
        return tuple(sorted(self._coeffs.items(), key=lambda kv: term_key(kv[0])))

    @property
    def total(self) -> int:
        """Number of terms counted with multiplicity."""
        return sum(self._coeffs.values())

    def __len__(self):
        return len(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __iter__(self):
        return iter(self.terms)

    def __add__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        merged = dict(self._coeffs)
        for term, c in other._coeffs.items():
            merged[term] = merged.get(term, 0) + c
        return FormalSum(merged)

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if other < 0:
                raise ValueError("scalars must be nonnegative")
            if other == 0:
                return FormalSum()
            return FormalSum({t: c * other for t, c in self._coeffs.items()})
        if isinstance(other, FormalSum):
            out = {}
            for s, cs in self._coeffs.items():
                for t, ct in other._coeffs.items():
                    prod = _term_mul(s, t)
                    out[prod] = out.get(prod, 0) + cs * ct
            return FormalSum(out)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return self.__mul__(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __str__(self):
        if not self._coeffs:
            return "0"
        return " + ".join(render_term(t, c) for t, c in self.terms)

    def __repr__(self):
        return f"FormalSum({dict(self.terms)!r})"


def render_term(term, coeff: int = 1) -> str:
    if isinstance(term, tuple):
        body = " (x) ".join(str(t) for t in term)
    else:
        body = str(term)
    if coeff == 1:
        return body
    return f"{coeff} * {body}"


def comult(seg: Segment) -> FormalSum:
    """Comultiplication of a segment in the GL Grothendieck group.

    The segment [nu^a rho, nu^b rho] splits into every suffix (x) prefix
    pair: the sum over i from a-1 to b of
    [nu^(i+1) rho, nu^b rho] (x) [nu^a rho, nu^i rho],
    with b-a+2 terms in total, all of coefficient one.  The boundary
    values of i contribute the unit on one side.
    """
    if seg.is_empty:
        raise ValueError("the comultiplication is defined on nonempty segments")
    out = {}
    for i in HalfInt.range_inclusive(seg.a - 1, seg.b):
        left = GLTerm.of(Segment(seg.rho, i + 1, seg.b))
        right = GLTerm.of(Segment(seg.rho, seg.a, i))
        key = (left, right)
        out[key] = out.get(key, 0) + 1
    return FormalSum(out)
