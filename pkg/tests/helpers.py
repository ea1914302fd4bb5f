"""Checking utilities shared between the module tests and the
acceptance suite."""

import contextlib
import io

from segtriples import (
    FormalSum,
    GLTerm,
    ODD,
    comult,
    is_alternated,
    reduce_at,
)
from segtriples.cli import main


def comult_gl(term):
    """The comultiplication extended multiplicatively to a GL term."""
    out = FormalSum.of((GLTerm.unit(), GLTerm.unit()))
    for seg in term.segments:
        out = out * comult(seg)
    return out


def coassoc_sides(seg):
    """Both triple-tensor refinements of m*(seg), as term dicts.

    Splitting the left leg again must agree with splitting the right
    leg again; the caller asserts the two dicts are equal.
    """
    left = {}
    right = {}
    for (l, r), c in comult(seg).terms:
        for (u, v), d in comult_gl(l).terms:
            key = (u, v, r)
            left[key] = left.get(key, 0) + c * d
        for (u, v), d in comult_gl(r).terms:
            key = (l, u, v)
            right[key] = right.get(key, 0) + c * d
    return left, right


def gap_insertions(t, rho, top):
    """Every (a, b) insertion interval at rho with blocks of the right
    parity, a < b <= top, and no existing block inside [a, b]."""
    blocks = set(t.jord_of(rho))
    start = 1 if rho.parity == ODD else 2
    out = []
    for a in range(start, top + 1, 2):
        if a in blocks:
            continue
        for b in range(a + 2, top + 1, 2):
            if b in blocks:
                break
            out.append((a, b))
    return out


def condition3_checks(t, chain):
    """Replay the chain top-down from t and recompute every bridge.

    At each removal whose pair has neighbours on both sides, the
    reduced triple's bridging pair must equal the product of the two
    crossing pairs.  Returns how many bridges were recomputed.
    """
    checked = 0
    cur = t
    for step in reversed(chain.steps):
        blocks = cur.jord_of(step.rho)
        pred = max((x for x in blocks if x < step.lower), default=None)
        succ = min((x for x in blocks if x > step.upper), default=None)
        nxt = reduce_at(cur, step.rho, step.lower, step.upper)
        if pred is not None and succ is not None:
            expected = (cur.pair(step.rho, pred, step.lower)
                        * cur.pair(step.rho, step.upper, succ))
            assert nxt.pair(step.rho, pred, succ) == expected
            checked += 1
        cur = nxt
    assert is_alternated(cur) is not None
    return checked


def run_cli(argv):
    """Run the command line entry point in-process.

    Returns (exit_code, stdout, stderr).  Argument-parsing failures
    surface as SystemExit and are mapped to their exit code.
    """
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:
            code = exc.code if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()
