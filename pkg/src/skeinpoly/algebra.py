"""
Formal linear combinations of braids and the rewrite engine modulo (II), (III).

Every rewrite here replaces a braid word by a combination that differs from
it by an element of the two-sided ideal generated by the quadratic relator

    p * s^2 + q * s^-2 - r * e

and the cubic relator

    u^-1 s1 s2 s1^-1 + u s1^-1 s2^-1 s1 - u^-1 s1^-1 s2 s1 - u s1 s2^-1 s1^-1

(and their shifts to any index).  The engine brings an ``n``-braid to *band
form*: a combination of words ``alpha * s_{n-1}^k * gamma`` with ``alpha``
and ``gamma`` on the first ``n - 1`` strands and ``k`` in ``{0, +-1, 2}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Iterator, Mapping

from .braid import BraidWord, free_reduce, underlying_permutation
from .rings import LaurentPoly, const

__all__ = [
    "RewriteParams",
    "AlgebraElement",
    "Reducer",
    "normalize_exponent",
    "key_reduce",
    "reduce_to_band_form",
    "is_band_form",
    "split_blocks",
    "homogeneous_components",
    "relator_I",
    "relator_II",
    "relator_III",
]

Word = tuple[int, ...]
Terms = dict[Word, LaurentPoly]


@dataclass(frozen=True)
class RewriteParams:
    """Coefficients of the quadratic relation ``p s^2 + q s^-2 = r e`` and the cubic weight ``u``."""

    u: LaurentPoly
    p: LaurentPoly
    q: LaurentPoly
    r: LaurentPoly

    def __post_init__(self):
        if not (self.p.is_unit() and self.q.is_unit() and self.u.is_unit()):
            raise ValueError("u, p and q must be unit monomials")

    @cached_property
    def one(self) -> LaurentPoly:
        return const(1, self.u.half)

    @cached_property
    def u2(self) -> LaurentPoly:
        return self.u * self.u

    @cached_property
    def r_over_p(self) -> LaurentPoly:
        return self.r * self.p.inverse()

    @cached_property
    def q_over_p(self) -> LaurentPoly:
        return self.q * self.p.inverse()

    @cached_property
    def r_over_q(self) -> LaurentPoly:
        return self.r * self.q.inverse()

    @cached_property
    def p_over_q(self) -> LaurentPoly:
        return self.p * self.q.inverse()


# --- formal combinations ------------------------------------------------


class AlgebraElement:
    """Finite combination ``sum c_i * w_i`` of braid words on ``n`` strands."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[BraidWord, LaurentPoly] | Iterable = ()):
        self.n = n
        acc: dict[BraidWord, LaurentPoly] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for w, c in items:
            if not isinstance(w, BraidWord):
                w = BraidWord(n, tuple(w))
            if w.n != n:
                raise ValueError(f"word on {w.n} strands in an element of B_{n}")
            acc[w] = acc[w] + c if w in acc else c
        self._terms = {w: c for w, c in acc.items() if not c.is_zero()}

    @classmethod
    def word(cls, w: BraidWord, coeff: LaurentPoly | None = None) -> AlgebraElement:
        return cls(w.n, {w: coeff if coeff is not None else const(1)})

    @property
    def terms(self) -> dict[BraidWord, LaurentPoly]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[BraidWord]:
        return iter(self._terms)

    def __getitem__(self, w: BraidWord) -> LaurentPoly:
        return self._terms[w]

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: AlgebraElement) -> None:
        if self.n != other.n:
            raise ValueError(f"strand counts differ: {self.n} vs {other.n}")

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.n, list(self.items()) + list(other.items()))

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement(self.n, {w: -c for w, c in self.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        return self + (-other)

    def scale(self, c: LaurentPoly) -> AlgebraElement:
        return AlgebraElement(self.n, {w: c * d for w, d in self.items()})

    def mul_word(self, g: BraidWord, side: str = "right") -> AlgebraElement:
        """Multiply every term by ``g`` on the given side."""
        if g.n != self.n:
            raise ValueError(f"strand counts differ: {self.n} vs {g.n}")
        if side == "right":
            return AlgebraElement(self.n, [(w * g, c) for w, c in self.items()])
        if side == "left":
            return AlgebraElement(self.n, [(g * w, c) for w, c in self.items()])
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    def __mul__(self, other: AlgebraElement) -> AlgebraElement:
        self._check(other)
        return AlgebraElement(self.n, [(w * v, c * d) for w, c in self.items()
                                       for v, d in other.items()])

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self) -> str:
        return f"AlgebraElement(n={self.n}, {self.to_text()})"

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({c}) * [{w}]" for w, c in self._sorted())

    def _sorted(self):
        return sorted(self.items(), key=lambda wc: (len(wc[0]), wc[0].letters))

    def to_json(self) -> list[dict]:
        return [{"coeff": c.to_text(), "coeff_terms": c.to_json(), "word": str(w)}
                for w, c in self._sorted()]


def homogeneous_components(x: AlgebraElement) -> list[AlgebraElement]:
    """Split ``x`` by the underlying permutation of its words."""
    parts: dict = {}
    for w, c in x.items():
        parts.setdefault(underlying_permutation(w).images, []).append((w, c))
    return [AlgebraElement(x.n, parts[k]) for k in sorted(parts)]


def _gen(i: int, k: int) -> Word:
    return (i if k > 0 else -i,) * abs(k)


def _shift_word(w: Word, d: int) -> Word:
    return tuple(l + d if l > 0 else l - d for l in w)


def relator_I(u: LaurentPoly, z: LaurentPoly, n: int = 2, i: int = 1) -> AlgebraElement:
    """Crossing-change relator ``u^-1 s_i - u s_i^-1 - z e``."""
    return AlgebraElement(n, [((i,), u.inverse()), ((-i,), -u), ((), -z)])


def relator_II(params: RewriteParams, n: int = 2, i: int = 1) -> AlgebraElement:
    return AlgebraElement(n, [(_gen(i, 2), params.p), (_gen(i, -2), params.q),
                              ((), -params.r)])


def relator_III(params: RewriteParams, n: int = 3, i: int = 1) -> AlgebraElement:
    u, ui = params.u, params.u.inverse()
    j = i + 1
    return AlgebraElement(n, [((i, j, -i), ui), ((-i, -j, i), u),
                              ((-i, j, i), -ui), ((i, -j, -i), -u)])


# --- the rewrite machinery ---------------------------------------------


@lru_cache(maxsize=None)
def _norm_exp(k: int, params: RewriteParams) -> tuple[tuple[int, LaurentPoly], ...]:
    if k in (-1, 0, 1, 2):
        return ((k, params.one),)
    acc: dict[int, LaurentPoly] = {}
    if k >= 3:
        parts = [(k - 2, params.r_over_p), (k - 4, -params.q_over_p)]
    else:
        parts = [(k + 2, params.r_over_q), (k + 4, -params.p_over_q)]
    for kk, c in parts:
        for j, d in _norm_exp(kk, params):
            acc[j] = acc[j] + c * d if j in acc else c * d
    return tuple((j, c) for j, c in sorted(acc.items()) if not c.is_zero())


# Rewrites of s2 s1^l s2^m for l, m in {-1, 1, 2}, written at index 1.
# Coefficient templates take the RewriteParams.
_Coeff = Callable[[RewriteParams], LaurentPoly]
_ONE: _Coeff = lambda P: P.one
_U2: _Coeff = lambda P: P.u2
_NEG_U2: _Coeff = lambda P: -P.u2
_U4: _Coeff = lambda P: P.u2 * P.u2
_NEG_U4: _Coeff = lambda P: -(P.u2 * P.u2)

KEY_TABLE: dict[tuple[int, int], list[tuple[Word, _Coeff]]] = {
    # braid identities
    (1, 1): [((1, 2, 1), _ONE)],
    (1, -1): [((-1, 2, 1), _ONE)],
    (-1, -1): [((-1, -2, 1), _ONE)],
    (1, 2): [((1, 1, 2, 1), _ONE)],
    (2, -1): [((-1, 2, 2, 1), _ONE)],
    # cubic relator times s1^-1 on the left and s2 on the right
    (-1, 1): [((-1, 2, -1), _NEG_U2), ((-1, 2, 1), _ONE), ((1, -2, -1), _U2)],
    # previous case times s2 on the right, inner s2 s1^-1 s2 expanded
    (-1, 2): [((-1, -1, 2, -1), _U4), ((-1, -1, 2, 1), _NEG_U2), ((-2, -1), _NEG_U4),
              ((2, 1), _ONE), ((1, 1, -2, -1), _U2)],
    # cubic relator times s1 s2 s1 on the right
    (2, 1): [((1, 2, 2, 1), _ONE), ((2, 2), _U2), ((1, 1), _NEG_U2)],
    # previous case times s2, with s2^3 reduced by the quadratic relation
    (2, 2): [((1, 1, 2, 1, 1), _ONE), ((2,), lambda P: P.u2 * P.r_over_p),
             ((-2,), lambda P: -(P.u2 * P.q_over_p)), ((1, 1, 2), _NEG_U2)],
}


def _acc(out: Terms, w: Word, c: LaurentPoly) -> None:
    if w in out:
        s = out[w] + c
        if s.is_zero():
            del out[w]
        else:
            out[w] = s
    elif not c.is_zero():
        out[w] = c


def split_blocks(w: Word, top: int) -> tuple[Word, list[tuple[int, Word]]]:
    """Write ``w = b0 s^k1 b1 ... s^kr br`` for ``s = s_top``.

    Returns ``b0`` and the list ``[(k1, b1), ..., (kr, br)]``.  Runs of
    ``top`` letters cannot mix signs in a freely reduced word.
    """
    head: list[int] = []
    blocks: list[tuple[int, list[int]]] = []
    cur = head
    i = 0
    while i < len(w):
        l = w[i]
        if abs(l) == top:
            k = 0
            while i < len(w) and abs(w[i]) == top:
                k += 1 if w[i] > 0 else -1
                i += 1
            seg: list[int] = []
            blocks.append((k, seg))
            cur = seg
            continue
        cur.append(l)
        i += 1
    return tuple(head), [(k, tuple(seg)) for k, seg in blocks]


def _sandwich(w: Word) -> tuple[int, int, int]:
    """Exponents ``(a, b, c)`` of a word ``s1^a s2^b s1^c``."""
    a = b = c = 0
    stage = 0
    for l in w:
        g = abs(l)
        e = 1 if l > 0 else -1
        if g == 1 and stage == 0:
            a += e
        elif g == 2 and stage <= 1:
            stage = 1
            b += e
        else:
            stage = 2
            c += e
    return a, b, c


class Reducer:
    """Band-form reduction for one set of rewrite parameters.

    Results are memoized per instance.  Passing ``trace`` (a list) records
    each rule application and disables memoization of band forms so the
    log is complete.
    """

    def __init__(self, params: RewriteParams, trace: list | None = None):
        self.params = params
        self.trace = trace
        self._band_cache: dict[tuple[Word, int], tuple[tuple[Word, LaurentPoly], ...]] = {}
        self._key_cache: dict[tuple[int, int, int], Terms] = {}

    def _log(self, rule: str, **info) -> None:
        if self.trace is not None:
            self.trace.append({"rule": rule, **info})

    # exponent normalization

    def norm(self, k: int) -> tuple[tuple[int, LaurentPoly], ...]:
        return _norm_exp(k, self.params)

    # the nine-case table and its extensions to k in {-1, 2, 3}

    def _key1(self, k: int, l: int, m: int) -> Terms:
        key = (k, l, m)
        if key in self._key_cache:
            return self._key_cache[key]
        P = self.params
        out: Terms = {}
        if k == 1:
            for w, coeff in KEY_TABLE[(l, m)]:
                _acc(out, w, coeff(P))
        elif k >= 2:
            for w, c in self._key1(k - 1, l, m).items():
                for w2, d in self._prepend_s2(w).items():
                    _acc(out, w2, c * d)
        elif k == -1:
            for w, c in self._key1(1, l, m).items():
                _acc(out, w, c * P.r_over_q)
            for w, c in self._key1(3, l, m).items():
                _acc(out, w, -(c * P.p_over_q))
        else:
            raise ValueError(f"exponent {k} outside the supported range")
        self._key_cache[key] = out
        return out

    def _prepend_s2(self, w: Word) -> Terms:
        """Rewrite ``s2 * w`` for ``w = s1^a s2^b s1^c`` back into that shape."""
        a, b, c = _sandwich(w)
        out: Terms = {}
        if b == 0:
            _acc(out, free_reduce((2,) + _gen(1, a + c)), self.params.one)
            return out
        for a2, ca in self.norm(a):
            if a2 == 0:
                for j, cj in self.norm(1 + b):
                    _acc(out, free_reduce(_gen(2, j) + _gen(1, c)), ca * cj)
            else:
                for w2, d in self._key1(1, a2, b).items():
                    _acc(out, free_reduce(w2 + _gen(1, c)), ca * d)
        return out

    def key(self, k: int, l: int, m: int, i: int) -> Terms:
        """``s_{i+1}^k s_i^l s_{i+1}^m`` as a combination of ``s_i^* s_{i+1}^{l'} s_i^*``."""
        if k not in (-1, 1, 2) or l not in (-1, 1, 2) or m not in (-1, 1, 2):
            raise ValueError(f"key reduction needs exponents in {{-1, 1, 2}}, got {(k, l, m)}")
        if i < 1:
            raise ValueError(f"generator index must be >= 1, got {i}")
        self._log("key_reduce", index=i, exponents=[k, l, m])
        base = self._key1(k, l, m)
        if i == 1:
            return dict(base)
        return {_shift_word(w, i - 1): c for w, c in base.items()}

    # band form

    def band(self, w: Word, n: int) -> tuple[tuple[Word, LaurentPoly], ...]:
        if n < 2:
            raise ValueError("band form needs at least 2 strands")
        memo = self.trace is None
        if memo and (w, n) in self._band_cache:
            return self._band_cache[(w, n)]
        out = self._band(w, n)
        res = tuple(out.items())
        if memo:
            self._band_cache[(w, n)] = res
        return res

    def _band(self, w: Word, n: int) -> Terms:
        top = n - 1
        head, blocks = split_blocks(w, top)
        out: Terms = {}
        if not blocks:
            out[w] = self.params.one
            return out
        if len(blocks) == 1:
            k, tail = blocks[0]
            if k not in (-1, 1, 2):
                self._log("normalize_exponent", index=top, exponent=k)
            for j, c in self.norm(k):
                _acc(out, free_reduce(head + _gen(top, j) + tail), c)
            return out
        self._log("split", index=top, blocks=len(blocks))
        k1, first = blocks[0]
        suffix = first + tuple(x for k, seg in blocks[1:] for x in _gen(top, k) + seg)
        for t, c in self.band(suffix, n):
            w2 = free_reduce(head + _gen(top, k1) + t)
            h2, b2 = split_blocks(w2, top)
            if len(b2) <= 1:
                for t2, d in self.band(w2, n):
                    _acc(out, t2, c * d)
                continue
            assert len(b2) == 2, "band form of the suffix has more than one block"
            (ka, alpha), (kb, gamma) = b2
            for t2, d in self._solve2(ka, alpha, kb, n).items():
                _acc(out, free_reduce(h2 + t2 + gamma), c * d)
        return out

    def _solve2(self, k: int, alpha: Word, m: int, n: int) -> Terms:
        """Band form of ``s^k alpha s^m`` with ``alpha`` a nontrivial (n-1)-braid."""
        top = n - 1
        out: Terms = {}
        for k2, ck in self.norm(k):
            for m2, cm in self.norm(m):
                coef = ck * cm
                if k2 == 0 or m2 == 0:
                    _acc(out, free_reduce(_gen(top, k2) + alpha + _gen(top, m2)), coef)
                    continue
                for t, ct in self.band(alpha, n - 1):
                    a1, inner = split_blocks(t, top - 1)
                    if not inner:
                        self._log("commute", index=top)
                        for j, cj in self.norm(k2 + m2):
                            _acc(out, free_reduce(t + _gen(top, j)), coef * ct * cj)
                        continue
                    (l, g1), = inner
                    for kw, ckw in self.key(k2, l, m2, top - 1).items():
                        _acc(out, free_reduce(a1 + kw + g1), coef * ct * ckw)
        return out


_REDUCERS: dict[RewriteParams, Reducer] = {}


def _reducer(params: RewriteParams) -> Reducer:
    if params not in _REDUCERS:
        _REDUCERS[params] = Reducer(params)
    return _REDUCERS[params]


def normalize_exponent(i: int, k: int, params: RewriteParams, n: int) -> AlgebraElement:
    """``s_i^k`` modulo the quadratic relation, with exponents in ``{0, +-1, 2}``."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator {i} out of range for {n} strands")
    return AlgebraElement(n, [(_gen(i, j), c) for j, c in _norm_exp(k, params)])


def key_reduce(k: int, l: int, m: int, i: int, params: RewriteParams, n: int) -> AlgebraElement:
    if i + 1 > n - 1:
        raise ValueError(f"generators {i}, {i + 1} out of range for {n} strands")
    return AlgebraElement(n, _reducer(params).key(k, l, m, i).items())


def reduce_to_band_form(beta: BraidWord, params: RewriteParams,
                        trace: list | None = None) -> AlgebraElement:
    reducer = _reducer(params) if trace is None else Reducer(params, trace)
    return AlgebraElement(beta.n, reducer.band(beta.letters, beta.n))


def is_band_form(x: AlgebraElement) -> bool:
    top = x.n - 1
    for w in x:
        _, blocks = split_blocks(w.letters, top)
        if len(blocks) > 1 or (blocks and blocks[0][0] not in (-1, 1, 2)):
            return False
    return True
