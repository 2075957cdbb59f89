"""The collecting process: rewriting arbitrary bracket terms into linear
combinations of basic commutators.

Two moves are used.  Sign swaps (skew-symmetry) are folded into
canonicalization.  The generalized Jacobi identity

    [[a_1,...,a_n], y_2,...,y_n] = sum_i [a_1,...,[a_i,y_2,...,y_n],...,a_n]

expands a bracket whose first child is itself a bracket.  A canonical term
with basic children that fails the basic predicate always has a bracket in
its first slot (the first child carries the maximal weight), so the
identity applies at the deepest offending node until only basic terms
remain.

Termination of the process is not guaranteed a priori; a configurable
step budget caps the work, and exhaustion is surfaced via the `capped`
flag on the trace, never silently.  All coefficients are exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .basis import EnumerationMode, is_basic
from .terms import (
    Term,
    canonicalize,
    check_term,
    is_leaf,
    lc_add,
    term_key,
)

DEFAULT_STEP_BUDGET = 10_000

SKEW = "SKEW"
JACOBI = "JACOBI"
ZERO = "ZERO"


@dataclass
class RewriteTrace:
    """Audit log of a collecting run: (rule, node path, size before,
    size after) per step, where sizes count terms in the working
    combination."""

    steps: list = field(default_factory=list)
    capped: bool = False

    def record(self, rule: str, path: tuple, before: int, after: int) -> None:
        self.steps.append((rule, path, before, after))


def _subterm(t: Term, path: tuple) -> Term:
    for i in path:
        if is_leaf(t) or i >= len(t):
            raise ValueError(f"invalid path {path!r} in {t!r}")
        t = t[i]
    return t


def _replace(t: Term, path: tuple, new: Term) -> Term:
    if not path:
        return new
    i = path[0]
    return t[:i] + (_replace(t[i], path[1:], new),) + t[i + 1 :]


def _jacobi_terms(node: Term, n: int) -> list[Term]:
    """RHS of the generalized Jacobi identity for a node whose first child
    is a bracket."""
    head, ys = node[0], node[1:]
    out = []
    for i in range(n):
        inner = (head[i],) + ys
        out.append(head[:i] + (inner,) + head[i + 1 :])
    return out


def expand_jacobi(t: Term, path: tuple, n: int) -> dict:
    """Replace the node at `path` by its Jacobi expansion; the result is a
    combination (each term canonicalized) congruent to t modulo the
    defining relations."""
    check_term(t, n)
    node = _subterm(t, path)
    if is_leaf(node) or is_leaf(node[0]):
        raise ValueError(
            f"node at {path!r} is not a bracket with a bracket in its first slot"
        )
    lc: dict = {}
    for summand in _jacobi_terms(node, n):
        s, ct = canonicalize(_replace(t, path, summand), n)
        if s != 0:
            lc_add(lc, ct, Fraction(s))
    return lc


def _deepest_nonbasic_path(t: Term, n: int) -> Optional[tuple]:
    """Path to a deepest subterm that is not basic although all of its
    children are; None if t itself is basic."""
    if is_leaf(t):
        return None
    for i, c in enumerate(t):
        sub = _deepest_nonbasic_path(c, n)
        if sub is not None:
            return (i,) + sub
    if is_basic(t, n, EnumerationMode.FULL_RULE3):
        return None
    return ()


def collect(t: Term, n: int, cap: int = DEFAULT_STEP_BUDGET):
    """Rewrite t into a combination of FULL_RULE3 basic commutators.

    Returns (combination, trace).  If the step budget runs out,
    trace.capped is True and the residual non-basic terms are left in the
    combination."""
    check_term(t, n)
    trace = RewriteTrace()
    s, ct = canonicalize(t, n)
    if s == 0:
        trace.record(ZERO, (), 1, 0)
        return {}, trace
    if ct != t or s != 1:
        trace.record(SKEW, (), 1, 1)
    work = {ct: Fraction(s)}
    out: dict = {}
    steps = 0
    while work:
        # largest term first: expansions feed cancellations deterministically
        u = max(work, key=lambda v: term_key(v, n))
        c = work.pop(u)
        path = _deepest_nonbasic_path(u, n)
        if path is None:
            lc_add(out, u, c)
            continue
        if steps >= cap:
            trace.capped = True
            lc_add(out, u, c)
            for v, cv in work.items():
                lc_add(out, v, cv)
            break
        steps += 1
        before = len(work) + 1
        node = _subterm(u, path)
        for summand in _jacobi_terms(node, n):
            ss, cs = canonicalize(_replace(u, path, summand), n)
            if ss != 0:
                lc_add(work, cs, c * ss)
        trace.record(JACOBI, path, before, len(work))
    return out, trace


def collect_lc(lc: dict, n: int, cap: int = DEFAULT_STEP_BUDGET):
    """Termwise collect with exact merging of coefficients."""
    out: dict = {}
    trace = RewriteTrace()
    for t, c in lc.items():
        part, tr = collect(t, n, cap=cap)
        trace.steps.extend(tr.steps)
        trace.capped = trace.capped or tr.capped
        for u, cu in part.items():
            lc_add(out, u, c * cu)
    return out, trace
