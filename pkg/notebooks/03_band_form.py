"""
Rewriting to band form
======================

Modulo the quadratic and cubic relators every braid on n strands is a
combination of words alpha * s_{n-1}^k * gamma where alpha and gamma avoid
the top generator and k is one of 0, -1, 1, 2.  The trace shows which
rewrite rules fired.
"""

from skeinpoly.algebra import (
    homogeneous_components,
    is_band_form,
    key_reduce,
    normalize_exponent,
    reduce_to_band_form,
    relator_I,
    relator_II,
    relator_III,
)
from skeinpoly.braid import parse
from skeinpoly.evaluator import HOMFLY

params = HOMFLY.rewrite

print("s_1^3  ->", normalize_exponent(1, 3, params, 2).to_text())
print("s_1^-2 ->", normalize_exponent(1, -2, params, 2).to_text())
print("s_2 s_1^2 s_2 ->", key_reduce(1, 2, 1, 1, params, 3).to_text())

steps = []
w = parse("2 2 1 -2 1 2 2 -1 2", 3)
x = reduce_to_band_form(w, params, trace=steps)
print(f"\n[{w}] has {len(x)} band words, band form: {is_band_form(x)}")
for step in steps[:8]:
    print("  ", step)

# the quadratic and cubic relators are homogeneous, the crossing change is not
for name, rel in [("I", relator_I(params.u, HOMFLY.z_const)),
                  ("II", relator_II(params)), ("III", relator_III(params))]:
    print(f"relator {name}: {len(homogeneous_components(rel))} homogeneous component(s)")
