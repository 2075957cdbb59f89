"""n-ary bracket terms: parsing, ordering, weight/length arithmetic, and
sign canonicalization.

A term is either a generator x_k, represented by the positive int k, or a
bracket, represented by a tuple of exactly n terms.  Everything here is an
immutable value and every function is pure, so terms can be shared freely
and used as dict keys.

The grammar accepted by `parse` (and emitted by `format_term`) is

    term := "x" INT | "[" term ("," term)* "]"

with no whitespace.

Weights follow the grading of the lower central series: a generator has
weight 1 and a bracket of children with weights w_1..w_n has weight
sum(w_i) - (n - 2).  With this rule the length (number of generator
occurrences) of any weight-w term is n + (w - 2)(n - 1).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Union

Term = Union[int, tuple]

LT, EQ, GT = -1, 0, 1


class TermSyntaxError(ValueError):
    """Raised by `parse` with the offending position in the message."""


class ArityError(ValueError):
    """A bracket does not have exactly n children."""


def is_leaf(t: Term) -> bool:
    return isinstance(t, int)


def check_term(t: Term, n: int) -> None:
    """Raise if t is not a well-formed term of arity n."""
    if is_leaf(t):
        if t < 1:
            raise ValueError(f"generator index must be >= 1, got {t}")
        return
    if not isinstance(t, tuple):
        raise TypeError(f"not a term: {t!r}")
    if len(t) != n:
        raise ArityError(f"bracket with {len(t)} children, expected {n}")
    for c in t:
        check_term(c, n)


def parse(text: str, n: int) -> Term:
    """Parse `text` into a term of arity n.  Round-trips with format_term."""
    pos = 0

    def err(msg):
        raise TermSyntaxError(f"{msg} at position {pos}")

    def term():
        nonlocal pos
        if pos >= len(text):
            err("unexpected end of input")
        ch = text[pos]
        if ch == "x":
            pos += 1
            start = pos
            while pos < len(text) and text[pos].isdigit():
                pos += 1
            if start == pos:
                err("expected generator index after 'x'")
            idx = int(text[start:pos])
            if idx < 1:
                err("generator index must be >= 1")
            return idx
        if ch == "[":
            pos += 1
            children = [term()]
            while pos < len(text) and text[pos] == ",":
                pos += 1
                children.append(term())
            if pos >= len(text) or text[pos] != "]":
                err("expected ',' or ']'")
            pos += 1
            if len(children) != n:
                raise ArityError(
                    f"bracket with {len(children)} children, expected {n}"
                )
            return tuple(children)
        err(f"unexpected character {ch!r}")

    t = term()
    if pos != len(text):
        err("trailing input")
    return t


def format_term(t: Term) -> str:
    if is_leaf(t):
        return f"x{t}"
    return "[" + ",".join(format_term(c) for c in t) + "]"


def weight(t: Term, n: int) -> int:
    if is_leaf(t):
        return 1
    return sum(weight(c, n) for c in t) - (n - 2)


def length(t: Term) -> int:
    if is_leaf(t):
        return 1
    return sum(length(c) for c in t)


def term_key(t: Term, n: int):
    """A sort key realizing the term order: weight first, then generator
    index for leaves, then children compared right-to-left (recursively)
    for equal-weight brackets."""
    if is_leaf(t):
        return (1, 0, t)
    return (
        weight(t, n),
        1,
        tuple(term_key(c, n) for c in reversed(t)),
    )


def compare(a: Term, b: Term, n: int) -> int:
    """Return LT/EQ/GT for the total term order."""
    ka, kb = term_key(a, n), term_key(b, n)
    if ka < kb:
        return LT
    if ka > kb:
        return GT
    return EQ


class SignedTerm(NamedTuple):
    sign: int  # -1, 0, +1
    term: Optional[Term]  # None iff sign == 0


def _permutation_parity(order: list[int]) -> int:
    """Sign of the permutation given as a list of source indices."""
    seen = [False] * len(order)
    sign = 1
    for i in range(len(order)):
        if seen[i]:
            continue
        # walk the cycle containing i
        j, clen = i, 0
        while not seen[j]:
            seen[j] = True
            j = order[j]
            clen += 1
        if clen % 2 == 0:
            sign = -sign
    return sign


def canonicalize(t: Term, n: int) -> SignedTerm:
    """Sort the children of every bracket strictly descending, tracking the
    sign of the permutation; sign 0 means the term vanished (two equal
    children somewhere)."""
    if is_leaf(t):
        return SignedTerm(1, t)
    sign = 1
    kids = []
    for c in t:
        s, cc = canonicalize(c, n)
        if s == 0:
            return SignedTerm(0, None)
        sign *= s
        kids.append(cc)
    keys = [term_key(c, n) for c in kids]
    order = sorted(range(len(kids)), key=lambda i: keys[i], reverse=True)
    sorted_keys = [keys[i] for i in order]
    for a, b in zip(sorted_keys, sorted_keys[1:]):
        if a == b:
            return SignedTerm(0, None)
    sign *= _permutation_parity(order)
    return SignedTerm(sign, tuple(kids[i] for i in order))


def is_canonical(t: Term, n: int) -> bool:
    s, ct = canonicalize(t, n)
    return s == 1 and ct == t


# ---------------------------------------------------------------------------
# Linear combinations: plain dicts mapping canonical terms to exact rationals.
# No zero coefficients are ever stored.

LinearCombination = dict


def lc_add(lc: dict, t: Term, coeff) -> None:
    """Accumulate coeff * t into lc in place, dropping zeros."""
    c = lc.get(t, 0) + coeff
    if c == 0:
        lc.pop(t, None)
    else:
        lc[t] = c


def lc_merge(lc: dict, other: dict, scale=1) -> None:
    for t, c in other.items():
        lc_add(lc, t, c * scale)


def lc_scaled(lc: dict, scale) -> dict:
    if scale == 0:
        return {}
    return {t: c * scale for t, c in lc.items()}


def lc_from_term(t: Term, n: int, coeff=1) -> dict:
    """Canonicalize t and return it as a one-term combination (or {})."""
    s, ct = canonicalize(t, n)
    if s == 0 or coeff == 0:
        return {}
    return {ct: Fraction(coeff) * s}


def lc_terms_sorted(lc: dict, n: int) -> Iterator[tuple[Term, Fraction]]:
    for t in sorted(lc, key=lambda u: term_key(u, n)):
        yield t, lc[t]


def lc_format(lc: dict, n: int) -> str:
    """Render a combination as e.g. '-1*[x3,x2,x1] +1/2*[x2,x1,...]'.
    The empty combination renders as '0'."""
    if not lc:
        return "0"
    parts = []
    for t, c in lc_terms_sorted(lc, n):
        sign = "+" if c > 0 else "-"
        parts.append(f"{sign}{abs(Fraction(c))}*{format_term(t)}")
    return " ".join(parts)
