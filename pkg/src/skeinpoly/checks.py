"""
Property suites over seeded random braids.

Each suite returns a :class:`SuiteResult`; the ``check`` command and the
acceptance tests both drive them.  Braids are drawn by
:func:`skeinpoly.braid.random_braid` (2 to 5 strands, at most 10 letters),
so a failing case can be reproduced from the seed alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    AlgebraElement,
    KEY_TABLE,
    homogeneous_components,
    key_reduce,
    normalize_exponent,
    reduce_to_band_form,
    relator_I,
    relator_II,
    relator_III,
)
from .braid import (
    BraidWord,
    closure_components,
    concat,
    conjugate,
    markov_stabilize,
    random_braid,
    shift,
)
from .evaluator import (
    ALEXANDER,
    HOMFLY,
    JONES,
    InvariantSpec,
    check_skein_relation_I,
    eval_fixed_mu_alexander,
    eval_fixed_mu_skein,
    eval_general,
)
from .oracles import alexander_via_burau, equal_up_to_unit, jones_via_bracket
from .rings import LaurentPoly, NotDivisible, const, monomial, poly_div_exact, poly_subst

__all__ = [
    "SuiteResult",
    "SUITES",
    "run_suites",
    "random_word",
    "eval_element",
]

ALL_SPECS = (HOMFLY, JONES, ALEXANDER)


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def failed(self) -> int:
        return len(self.failures)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, detail: Callable[[], str]) -> None:
        if ok:
            self.passed += 1
        else:
            self.failures.append(detail())

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f" ({'; '.join(self.notes)})" if self.notes else ""
        return f"{status} {self.name}: {self.passed} passed, {self.failed} failed{extra}"


def random_word(rng: random.Random, n: int, max_length: int = 10) -> BraidWord:
    length = rng.randint(0, max_length)
    if n < 2:
        return BraidWord(n, ())
    return BraidWord(n, tuple(rng.choice([-1, 1]) * rng.randint(1, n - 1)
                              for _ in range(length)))


def eval_element(x: AlgebraElement, spec: InvariantSpec) -> LaurentPoly:
    """Sum of ``c * P(closure of w)`` over the terms of ``x``."""
    total = const(0, spec.half)
    for w, c in x.items():
        total = total + c * eval_general(w, spec)
    return total


def _specialize_jones(p: LaurentPoly) -> LaurentPoly:
    x = monomial(1, half=True)
    return poly_subst(p, x ** 2, x - x ** -1)


def _specialize_alexander(p: LaurentPoly) -> LaurentPoly:
    x = monomial(1, half=True)
    return poly_subst(p, const(1, True), x - x ** -1)


def suite_isotopy(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("isotopy")
    for _ in range(cases):
        b = random_braid(rng)
        g = random_word(rng, b.n, 6)
        sign = rng.choice([-1, 1])
        moved = [("conjugate", conjugate(b, g)), ("markov", markov_stabilize(b, sign))]
        for spec in ALL_SPECS:
            base = eval_general(b, spec)
            for label, b2 in moved:
                v = eval_general(b2, spec)
                res.record(v == base, lambda: f"{spec.name} {label} [{b}]_{b.n} -> "
                                              f"[{b2}]_{b2.n}: {base} vs {v}")
    return res


def suite_relation_I(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("relation_I")
    for _ in range(cases):
        n = rng.randint(2, 5)
        g, h = random_word(rng, n, 4), random_word(rng, n, 4)
        i = rng.randint(1, n - 1)
        for spec in ALL_SPECS:
            res.record(check_skein_relation_I(g, h, i, spec),
                       lambda: f"{spec.name} g=[{g}] h=[{h}] i={i} n={n}")
    return res


def suite_quadratic_cubic(rng: random.Random, cases: int) -> SuiteResult:
    """The defining relations hold on evaluator outputs in arbitrary context."""
    res = SuiteResult("relations_II_III")
    for _ in range(cases):
        n = rng.randint(3, 5)
        g, h = random_word(rng, n, 4), random_word(rng, n, 4)
        i = rng.randint(1, n - 2)
        for spec in ALL_SPECS:
            for rel in (relator_II(spec.rewrite, n, i), relator_III(spec.rewrite, n, i)):
                v = eval_element(rel.mul_word(g, "left").mul_word(h, "right"), spec)
                res.record(v.is_zero(), lambda: f"{spec.name} g=[{g}] h=[{h}] i={i}: {v}")
    return res


def suite_stabilization(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("stabilization")
    for _ in range(cases):
        n, p = rng.randint(1, 3), rng.randint(1, 2)
        beta = random_word(rng, n, 5)
        gamma = random_word(rng, p, 4)
        N = n + p
        b0 = BraidWord(N, beta.letters)
        lhs_b = concat(b0, shift(gamma, n, N))
        rhs_b = concat(concat(b0, BraidWord(N, (n, n))), shift(gamma, n, N))
        for spec in (HOMFLY, JONES):
            lhs = spec.stab_num * eval_general(lhs_b, spec)
            rhs = spec.stab_base * eval_general(rhs_b, spec)
            res.record(lhs == rhs, lambda: f"{spec.name} beta=[{beta}]_{n} gamma=[{gamma}]_{p}")
    return res


def suite_split(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("split_alexander")
    for _ in range(cases):
        n, p = rng.randint(1, 3), rng.randint(1, 2)
        beta, gamma = random_word(rng, n, 5), random_word(rng, p, 5)
        b = concat(BraidWord(n + p, beta.letters), shift(gamma, n, n + p))
        v = eval_general(b, ALEXANDER)
        res.record(v.is_zero(), lambda: f"[{b}]_{b.n}: {v}")
    return res


def suite_specialization(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("specialization")
    for _ in range(cases):
        b = random_braid(rng)
        h = eval_general(b, HOMFLY)
        j, a = eval_general(b, JONES), eval_general(b, ALEXANDER)
        res.record(_specialize_jones(h) == j, lambda: f"jones [{b}]_{b.n}")
        res.record(_specialize_alexander(h) == a, lambda: f"alexander [{b}]_{b.n}")
    return res


def suite_cross_algorithm(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("cross_algorithm")
    x = monomial(1, half=True)
    for _ in range(cases):
        b = random_braid(rng)
        for spec in (HOMFLY, JONES):
            g, f = eval_general(b, spec), eval_fixed_mu_skein(b, spec)
            res.record(g == f, lambda: f"{spec.name} [{b}]_{b.n}: {g} vs {f}")
        g, f = eval_general(b, ALEXANDER), eval_fixed_mu_alexander(b)
        res.record(g == f, lambda: f"ALEXANDER [{b}]_{b.n}: {g} vs {f}")
        mu = closure_components(b)
        try:
            poly_div_exact(f, (x - x ** -1) ** (mu - 1))
            divisible = True
        except NotDivisible:
            divisible = False
        res.record(divisible, lambda: f"chain divisibility [{b}]_{b.n}: {f}")
    return res


def suite_oracles(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("oracles")
    for _ in range(cases):
        b = random_braid(rng)
        j = eval_general(b, JONES)
        jb = jones_via_bracket(b)
        res.record(j == jb, lambda: f"bracket [{b}]_{b.n}: {j} vs {jb}")
        a = eval_general(b, ALEXANDER)
        ab = alexander_via_burau(b)
        res.record(equal_up_to_unit(a, ab), lambda: f"burau [{b}]_{b.n}: {a} vs {ab}")
    return res


def suite_homogeneity(rng: random.Random, cases: int) -> SuiteResult:
    res = SuiteResult("homogeneity")
    P = HOMFLY.rewrite
    z = HOMFLY.z_const
    counts = {
        "I_B": len(homogeneous_components(relator_I(P.u, z))),
        "II_B": len(homogeneous_components(relator_II(P))),
        "III_B": len(homogeneous_components(relator_III(P))),
    }
    res.notes.append(", ".join(f"{k}: {v} component{'s' * (v != 1)}" for k, v in counts.items()))
    res.record(counts == {"I_B": 2, "II_B": 1, "III_B": 1}, lambda: f"component counts {counts}")
    identity_part = [c for c in homogeneous_components(relator_I(P.u, z))
                     if list(c) == [BraidWord(2, ())]]
    res.record(len(identity_part) == 1 and identity_part[0][BraidWord(2, ())] == -z,
               lambda: "(I_B) has no -z*e component")
    return res


def _rule_instances(rng: random.Random, n: int, spec: InvariantSpec):
    """(original word, rewritten element) pairs for the stored rewrite rules."""
    P = spec.rewrite
    i = rng.randint(1, n - 1)
    k = rng.choice([-4, -3, -2, 3, 4, 5])
    yield BraidWord(n, (i,) * k if k > 0 else (-i,) * -k), normalize_exponent(i, k, P, n)
    if n >= 3:
        i = rng.randint(1, n - 2)
        kk = rng.choice([-1, 1, 2])
        l, m = rng.choice(sorted(KEY_TABLE))
        word = BraidWord(n, tuple(
            x for g, e in ((i + 1, kk), (i, l), (i + 1, m))
            for x in ((g,) * e if e > 0 else (-g,) * -e)))
        yield word, key_reduce(kk, l, m, i, P, n)
    b = random_word(rng, n, 8)
    yield b, reduce_to_band_form(b, P)


def suite_soundness(rng: random.Random, cases: int) -> SuiteResult:
    """Every rewrite preserves the invariant inside random left/right context."""
    res = SuiteResult("rewrite_soundness")
    for _ in range(cases):
        n = rng.randint(2, 4)
        for spec in ALL_SPECS:
            for word, rewritten in _rule_instances(rng, n, spec):
                g, h = random_word(rng, n, 3), random_word(rng, n, 3)
                lhs = eval_general(concat(concat(g, word), h), spec)
                rhs = eval_element(rewritten.mul_word(g, "left").mul_word(h, "right"), spec)
                res.record(lhs == rhs, lambda: f"{spec.name} [{word}] in context "
                                               f"[{g}]...[{h}] on {n} strands")
    return res


SUITES: dict[str, Callable[[random.Random, int], SuiteResult]] = {
    "isotopy": suite_isotopy,
    "relation_I": suite_relation_I,
    "relations_II_III": suite_quadratic_cubic,
    "stabilization": suite_stabilization,
    "split_alexander": suite_split,
    "specialization": suite_specialization,
    "cross_algorithm": suite_cross_algorithm,
    "homogeneity": suite_homogeneity,
    "rewrite_soundness": suite_soundness,
    "oracles": suite_oracles,
}


def run_suites(seed: int = 0, cases: int = 100, oracles: bool = False,
               names: list[str] | None = None) -> list[SuiteResult]:
    """Run suites in a fixed order, each with its own generator seeded from ``seed``."""
    selected = names or [k for k in SUITES if oracles or k != "oracles"]
    results = []
    for idx, name in enumerate(selected):
        rng = random.Random(f"{seed}:{name}")
        results.append(SUITES[name](rng, cases))
    return results
