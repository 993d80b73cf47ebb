"""
Classical computations used to cross-check the evaluators.

Both are deliberately independent of :mod:`skeinpoly.algebra`: the Jones
polynomial comes from the Kauffman bracket state sum over crossing
smoothings, the Alexander polynomial from the reduced Burau
representation (via sympy).  Only the final conversion to
:class:`~skeinpoly.rings.LaurentPoly` touches this package.
"""

from __future__ import annotations

from collections import Counter
from itertools import product

import sympy

from .braid import BraidWord, markov_stabilize
from .rings import LaurentPoly

__all__ = [
    "STATE_SUM_CAP",
    "jones_via_bracket",
    "kauffman_bracket",
    "burau_matrix",
    "alexander_via_burau",
    "equal_up_to_unit",
    "normalize_unit",
]

STATE_SUM_CAP = 20

_T = sympy.Symbol("t")


def _loops(beta: BraidWord, state: tuple[int, ...]) -> int:
    """Count loops of the closed braid with each crossing smoothed.

    ``state[j] == 0`` keeps strands vertical, ``1`` inserts a cap/cup.
    Points are (level, position) with level ``len(beta)`` glued to 0.
    """
    n, c = beta.n, len(beta.letters)
    parent = list(range((c + 1) * n))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(u, v):
        parent[find(u)] = find(v)

    def pt(level, pos):
        return level * n + pos

    for j, l in enumerate(beta.letters):
        i = abs(l) - 1
        for pos in range(n):
            if pos in (i, i + 1):
                continue
            union(pt(j, pos), pt(j + 1, pos))
        if state[j] == 0:
            union(pt(j, i), pt(j + 1, i))
            union(pt(j, i + 1), pt(j + 1, i + 1))
        else:
            union(pt(j, i), pt(j, i + 1))
            union(pt(j + 1, i), pt(j + 1, i + 1))
    for pos in range(n):
        union(pt(c, pos), pt(0, pos))
    return len({find(pt(0, pos)) for pos in range(n)} |
               {find(pt(level, pos)) for level in range(c + 1) for pos in range(n)})


def _mul(p: Counter, q: Counter) -> Counter:
    out: Counter = Counter()
    for i, a in p.items():
        for j, b in q.items():
            out[i + j] += a * b
    return Counter({k: v for k, v in out.items() if v})


def kauffman_bracket(beta: BraidWord, cap: int = STATE_SUM_CAP) -> Counter:
    """Bracket of the closure as ``{exponent of A: coefficient}``, unknot = 1.

    ``sigma_i`` smooths as ``A * id + A^-1 * cupcap``; the inverse swaps
    the weights.
    """
    c = len(beta.letters)
    if c > cap:
        raise ValueError(f"state sum over {c} crossings exceeds the cap of {cap}")
    loop = Counter({2: -1, -2: -1})
    total: Counter = Counter()
    for state in product((0, 1), repeat=c):
        exp = 0
        for l, s in zip(beta.letters, state):
            a_side = (s == 0) == (l > 0)
            exp += 1 if a_side else -1
        term = Counter({exp: 1})
        for _ in range(_loops(beta, state) - 1):
            term = _mul(term, loop)
        total.update(term)
    return Counter({k: v for k, v in total.items() if v})


def jones_via_bracket(beta: BraidWord, cap: int = STATE_SUM_CAP) -> LaurentPoly:
    """Jones polynomial of the closure via ``(-A)^(-3w) <L>`` and ``t = A^-4``."""
    br = kauffman_bracket(beta, cap)
    w = beta.writhe()
    sign = -1 if w % 2 else 1
    terms = {}
    for k, v in br.items():
        e = k - 3 * w
        # A^e = t^(-e/4) = (t^(1/2))^(-e/2)
        if e % 2:
            raise AssertionError("odd power of A in a normalized bracket")
        terms[(-e // 2, 0)] = terms.get((-e // 2, 0), 0) + sign * v
    return LaurentPoly(terms, half=True)


def burau_matrix(letter: int, n: int) -> sympy.Matrix:
    """Reduced Burau matrix of ``sigma_i^{+-1}`` on ``n`` strands."""
    i = abs(letter)
    t = _T
    m = sympy.eye(n - 1)
    r = i - 1
    m[r, r] = -t
    if r - 1 >= 0:
        m[r, r - 1] = t
    if r + 1 <= n - 2:
        m[r, r + 1] = 1
    if letter < 0:
        m = m.inv()
    return m.applyfunc(sympy.cancel)


def alexander_via_burau(beta: BraidWord) -> LaurentPoly:
    """``det(I - rho(beta)) * (1 - t) / (1 - t^n)``, determined up to ``+-t^(k/2)``.

    Returned in half-exponent mode; compare with :func:`equal_up_to_unit`.
    """
    if beta.n < 2:
        beta = markov_stabilize(beta, 1)
    n = beta.n
    m = sympy.eye(n - 1)
    for l in beta.letters:
        m = m * burau_matrix(l, n)
    det = sympy.cancel((sympy.eye(n - 1) - m).det())
    num, den = sympy.fraction(sympy.together(det))
    den_poly = sympy.Poly(den, _T)
    if len(den_poly.terms()) != 1:
        raise AssertionError(f"non-monomial denominator {den} for {beta}")
    (shift,), den_c = den_poly.terms()[0]
    q, rem = sympy.div(sympy.expand(num), sum(_T ** k for k in range(n)), _T)
    if rem != 0:
        raise AssertionError(f"Burau determinant not divisible by [n]_t for {beta}")
    q = sympy.expand(q / den_c)
    return _to_half(sympy.Poly(q, _T), -shift)


def _to_half(poly: sympy.Poly, shift: int = 0) -> LaurentPoly:
    terms = {}
    for (k,), c in poly.terms():
        if c != int(c):
            raise AssertionError(f"non-integer coefficient {c} in Burau quotient")
        terms[(2 * (k + shift), 0)] = int(c)
    return LaurentPoly(terms, half=True)


def normalize_unit(p: LaurentPoly) -> LaurentPoly:
    """Representative of ``p`` modulo units: lowest exponent 0, positive lowest coefficient."""
    if p.is_zero():
        return p
    (e1, e2), c = p.trailing()
    q = p.shift(-e1, -e2)
    return -q if c < 0 else q


def equal_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    return normalize_unit(p) == normalize_unit(q)
