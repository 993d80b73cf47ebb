"""
Exact Laurent polynomial arithmetic over the integers.

A :class:`LaurentPoly` is a sparse map from exponent pairs ``(e1, e2)`` to
nonzero Python integers.  In the default mode the two variables are ``a``
and ``z``.  In *half-exponent* mode variable 1 stands for ``t^(1/2)``, so
``e1`` counts half-steps of ``t``; variable 2 is normally unused there.

:class:`Localized` adjoins the inverse of one fixed base element ``D``
(e.g. ``a^-2 - 1``) and keeps values as ``num / D^dpow`` in lowest terms.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "Localized",
    "NotDivisible",
    "NotInteger",
    "poly_add",
    "poly_mul",
    "poly_div_exact",
    "poly_subst",
    "loc_make",
    "loc_add",
    "loc_mul",
    "loc_to_poly",
    "monomial",
    "const",
    "var_a",
    "var_z",
    "var_t_half",
]

Exponent = tuple[int, int]


class NotDivisible(ArithmeticError):
    """Raised when an exact division leaves a remainder."""


class NotInteger(ArithmeticError):
    """Raised when a localized value still carries a denominator."""


class LaurentPoly:
    """Sparse Laurent polynomial with integer coefficients in two variables.

    Instances are immutable and hashable.  Zero coefficients are never
    stored, so two polynomials are equal exactly when their term maps are.
    """

    __slots__ = ("_terms", "half", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = (),
                 half: bool = False):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for (e1, e2), c in items:
            key = (int(e1), int(e2))
            acc[key] = acc.get(key, 0) + int(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}
        self.half = bool(half)
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], half: bool) -> LaurentPoly:
        # terms must already be canonical
        obj = cls.__new__(cls)
        obj._terms = terms
        obj.half = half
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def sorted_items(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical order: ascending ``e1``, then ``e2``."""
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for ``±`` a monomial, the units of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def coefficient(self, e1: int, e2: int = 0) -> int:
        return self._terms.get((e1, e2), 0)

    def leading(self) -> tuple[Exponent, int]:
        """Largest term in the lexicographic order on ``(e1, e2)``."""
        key = max(self._terms)
        return key, self._terms[key]

    def trailing(self) -> tuple[Exponent, int]:
        key = min(self._terms)
        return key, self._terms[key]

    def _check_mode(self, other: LaurentPoly) -> None:
        if self.half != other.half:
            raise ValueError("cannot combine polynomials with different half_exponent modes")

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            self._check_mode(other)
            return other
        if isinstance(other, int):
            return const(other, self.half)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._raw(out, self.half)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({k: -c for k, c in self._terms.items()}, self.half)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for (a1, a2), c in self._terms.items():
            for (b1, b2), d in other._terms.items():
                k = (a1 + b1, a2 + b2)
                out[k] = out.get(k, 0) + c * d
        return LaurentPoly._raw({k: c for k, c in out.items() if c}, self.half)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            return self.inverse() ** (-k)
        result = const(1, self.half)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> LaurentPoly:
        """Inverse of a unit monomial ``±x^i z^j``."""
        if not self.is_unit():
            raise NotDivisible(f"{self} is not a unit")
        (e1, e2), c = next(iter(self._terms.items()))
        return LaurentPoly._raw({(-e1, -e2): c}, self.half)

    def shift(self, e1: int, e2: int = 0) -> LaurentPoly:
        """Multiply by the monomial ``x1^e1 x2^e2``."""
        return LaurentPoly._raw({(a + e1, b + e2): c for (a, b), c in self._terms.items()},
                                self.half)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = const(other, self.half)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.half == other.half and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.half, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r}, half={self.half})"

    def __str__(self) -> str:
        return self.to_text()

    # --- rendering -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text, e.g. ``2*a^2 + a^2*z^2 - a^4`` or ``-t^(1/2) - t^(5/2)``."""
        if not self._terms:
            return "0"
        parts = []
        for (e1, e2), c in self.sorted_items():
            factors = []
            if self.half:
                factors.append(_power("t", Fraction(e1, 2)))
            else:
                factors.append(_power("a", e1))
            factors.append(_power("z", e2))
            factors = [f for f in factors if f]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            parts.append((c < 0, body))
        first_neg, first = parts[0]
        out = ("-" if first_neg else "") + first
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    @classmethod
    def from_text(cls, text: str, half: bool | None = None) -> LaurentPoly:
        """Parse the output of :meth:`to_text` (and light variations of it)."""
        src = text.replace(" ", "")
        if half is None:
            half = "t" in src
        if src in ("", "0"):
            return cls({}, half)
        terms: dict[Exponent, int] = {}
        for sign, body in _split_terms(src, text):
            coeff = 1
            e1 = e2 = 0
            for factor in body.split("*"):
                if factor.isdigit():
                    coeff *= int(factor)
                    continue
                fm = _FACTOR_RE.fullmatch(factor)
                if not fm:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                name, exp = fm.group("var"), _parse_exp(fm.group("exp"))
                if name == "t":
                    if not half:
                        raise ValueError("variable t requires half-exponent mode")
                    doubled = exp * 2
                    if doubled.denominator != 1:
                        raise ValueError(f"exponent {exp} of t is not a half-integer")
                    e1 += int(doubled)
                elif name == "a":
                    if exp.denominator != 1:
                        raise ValueError("fractional exponent of a")
                    e1 += int(exp)
                else:
                    if exp.denominator != 1:
                        raise ValueError("fractional exponent of z")
                    e2 += int(exp)
            terms[(e1, e2)] = terms.get((e1, e2), 0) + sign * coeff
        return cls(terms, half)

    def to_json(self) -> dict:
        return {
            "half_exponent": self.half,
            "terms": [{"e1": e1, "e2": e2, "c": c} for (e1, e2), c in self.sorted_items()],
        }

    @classmethod
    def from_json(cls, data: dict | str) -> LaurentPoly:
        if isinstance(data, str):
            data = json.loads(data)
        return cls({(t["e1"], t["e2"]): t["c"] for t in data["terms"]},
                   bool(data["half_exponent"]))




def _split_terms(src: str, text: str) -> list[tuple[int, str]]:
    # a sign splits terms unless it follows '^' or '(' (exponent signs)
    out = []
    sign, start = 1, 0
    if src[0] in "+-":
        sign, start = (-1 if src[0] == "-" else 1), 1
    for i in range(start, len(src)):
        ch = src[i]
        if ch in "+-" and src[i - 1] not in "^(":
            if i == start:
                raise ValueError(f"empty term at position {i} in {text!r}")
            out.append((sign, src[start:i]))
            sign, start = (-1 if ch == "-" else 1), i + 1
    if start >= len(src):
        raise ValueError(f"dangling sign in {text!r}")
    out.append((sign, src[start:]))
    return out

_FACTOR_RE = re.compile(r"(?P<var>[atz])(?:\^(?P<exp>\(-?\d+(?:/\d+)?\)|-?\d+))?")


def _parse_exp(raw: str | None) -> Fraction:
    if raw is None:
        return Fraction(1)
    return Fraction(raw.strip("()"))


def _power(name: str, exp) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return name
    if isinstance(exp, Fraction) and exp.denominator != 1:
        return f"{name}^({exp.numerator}/{exp.denominator})"
    return f"{name}^{int(exp)}"


def monomial(e1: int = 0, e2: int = 0, c: int = 1, half: bool = False) -> LaurentPoly:
    return LaurentPoly({(e1, e2): c}, half)


def const(c: int, half: bool = False) -> LaurentPoly:
    return LaurentPoly({(0, 0): c}, half)


def var_a() -> LaurentPoly:
    return monomial(1, 0)


def var_z() -> LaurentPoly:
    return monomial(0, 1)


def var_t_half() -> LaurentPoly:
    """``t^(1/2)`` in half-exponent mode."""
    return monomial(1, 0, half=True)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check_mode(q)
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    p._check_mode(q)
    return p * q


def _quotient_box(p: LaurentPoly, d: LaurentPoly) -> tuple[int, int, int, int]:
    """Per-variable exponent bounds for ``q`` if ``q * d == p``."""
    out = []
    for v in (0, 1):
        pe = [e[v] for e in p._terms]
        de = [e[v] for e in d._terms]
        out += [min(pe) - min(de), max(pe) - max(de)]
    return out[0], out[1], out[2], out[3]


def poly_div_exact(p: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * d == p``, or raise :class:`NotDivisible`.

    Leading-term elimination in the lex order on exponents.  Lex order on
    Z^2 is not a well-order, so termination comes from degree bounds
    instead: in each variable separately the lowest and highest degrees
    of a true quotient are fixed by those of ``p`` and ``d``.  A step
    outside that box means there is a remainder.  Steps strictly decrease
    in lex order and the box is finite, so the loop ends.
    """
    p._check_mode(d)
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    (l1, l2), lc = d.leading()
    if d.is_monomial():
        out = {}
        for (e1, e2), c in p.items():
            if c % lc:
                raise NotDivisible(f"{p} is not divisible by {d}")
            out[(e1 - l1, e2 - l2)] = c // lc
        return LaurentPoly._raw(out, p.half)
    lo1, hi1, lo2, hi2 = _quotient_box(p, d)
    rem = dict(p._terms)
    quot: dict[Exponent, int] = {}
    dterms = list(d.items())
    while rem:
        (r1, r2) = max(rem)
        rc = rem[(r1, r2)]
        step = (r1 - l1, r2 - l2)
        if not (lo1 <= step[0] <= hi1 and lo2 <= step[1] <= hi2) or rc % lc:
            raise NotDivisible(f"{p} is not divisible by {d}")
        qc = rc // lc
        quot[step] = qc
        for (e1, e2), c in dterms:
            k = (e1 + step[0], e2 + step[1])
            v = rem.get(k, 0) - qc * c
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return LaurentPoly._raw(quot, p.half)


def poly_subst(p: LaurentPoly, image1: LaurentPoly, image2: LaurentPoly) -> LaurentPoly:
    """Ring homomorphism sending variable 1 to ``image1`` and variable 2 to ``image2``.

    ``image1`` must be a unit monomial.  Negative powers of variable 2 are
    cleared by multiplying through and dividing exactly at the end; a
    leftover remainder means the image is not a Laurent polynomial.
    """
    image1._check_mode(image2)
    if not image1.is_unit():
        raise ValueError("image of variable 1 must be a unit monomial")
    half = image1.half
    if p.is_zero():
        return LaurentPoly({}, half)
    low = min(e2 for (_, e2) in p._terms)
    shift = -low if low < 0 else 0
    powers: dict[int, LaurentPoly] = {}

    def img2_pow(k: int) -> LaurentPoly:
        if k not in powers:
            powers[k] = image2 ** k
        return powers[k]

    total = LaurentPoly({}, half)
    for (e1, e2), c in p.items():
        total = total + (image1 ** e1) * img2_pow(e2 + shift) * c
    if shift:
        try:
            total = poly_div_exact(total, img2_pow(shift))
        except NotDivisible:
            raise ValueError(f"substitution of {p} produces a genuine denominator") from None
    return total


class Localized:
    """Element ``num / base^dpow`` of the Laurent ring with ``base`` inverted.

    Always stored normalized: when ``dpow > 0`` the base does not divide
    ``num``.  Equal values therefore have equal fields.
    """

    __slots__ = ("num", "dpow", "base")

    def __init__(self, num: LaurentPoly, dpow: int, base: LaurentPoly):
        self.num = num
        self.dpow = dpow
        self.base = base

    def __eq__(self, other) -> bool:
        if not isinstance(other, Localized):
            return NotImplemented
        return (self.num, self.dpow, self.base) == (other.num, other.dpow, other.base)

    def __hash__(self) -> int:
        return hash((self.num, self.dpow, self.base))

    def __repr__(self) -> str:
        return f"Localized(({self.num}) / ({self.base})^{self.dpow})"

    def __add__(self, other: Localized) -> Localized:
        return loc_add(self, other)

    def __mul__(self, other: Localized) -> Localized:
        return loc_mul(self, other)


def loc_make(num: LaurentPoly, dpow: int, base: LaurentPoly) -> Localized:
    if dpow < 0:
        raise ValueError("dpow must be nonnegative")
    if base.is_zero() or base.is_unit():
        raise ValueError(f"degenerate localization base {base}")
    num._check_mode(base)
    if num.is_zero():
        return Localized(num, 0, base)
    while dpow > 0:
        try:
            num = poly_div_exact(num, base)
        except NotDivisible:
            break
        dpow -= 1
    return Localized(num, dpow, base)


def _check_base(x: Localized, y: Localized) -> None:
    if x.base != y.base:
        raise ValueError(f"localization bases differ: {x.base} vs {y.base}")


def loc_add(x: Localized, y: Localized) -> Localized:
    _check_base(x, y)
    if x.dpow < y.dpow:
        x, y = y, x
    num = x.num + y.num * x.base ** (x.dpow - y.dpow)
    return loc_make(num, x.dpow, x.base)


def loc_mul(x: Localized, y: Localized) -> Localized:
    _check_base(x, y)
    return loc_make(x.num * y.num, x.dpow + y.dpow, x.base)


def loc_to_poly(x: Localized) -> LaurentPoly:
    x = loc_make(x.num, x.dpow, x.base)
    if x.dpow:
        raise NotInteger(f"{x.num} still has denominator ({x.base})^{x.dpow}")
    return x.num
