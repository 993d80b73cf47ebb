"""
The crossing-change relation falls out
======================================

None of the evaluators ever uses u^-1 P(g s_i h) - u P(g s_i^-1 h) = z P(g h).
It holds anyway, as do the stabilization identity and the vanishing of
Delta on split links.
"""

import random

from skeinpoly.checks import run_suites
from skeinpoly.braid import BraidWord
from skeinpoly.evaluator import HOMFLY, check_skein_relation_I, eval_general
from skeinpoly.rings import LaurentPoly

rng = random.Random(1)
g, h = BraidWord(3, (1, -2, 2, 1)), BraidWord(3, (2, 2, -1))
print("relation holds for g, h, i=2:", check_skein_relation_I(g, h, 2, HOMFLY))

# stabilization: (1 + z^2 - a^2) P(beta) = (a^-2 - 1) P(beta s_n^2)
P = lambda s: LaurentPoly.from_text(s, half=False)
beta = BraidWord(3, (1, 1, 1))
lhs = P("1 + z^2 - a^2") * eval_general(beta, HOMFLY)
rhs = P("a^-2 - 1") * eval_general(BraidWord(3, (1, 1, 1, 2, 2)), HOMFLY)
print("stabilization identity:", lhs == rhs)

for res in run_suites(seed=2024, cases=50):
    print(res.line())
