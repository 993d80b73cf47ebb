"""
Cross-checking against classical computations
=============================================

Jones via the Kauffman bracket state sum and Alexander via the reduced
Burau representation share no code with the rewrite engine.  On random
braids the results should coincide (Alexander up to a unit).
"""

import random
import time

from skeinpoly.braid import random_braid
from skeinpoly.evaluator import ALEXANDER, JONES, eval_general
from skeinpoly.oracles import alexander_via_burau, equal_up_to_unit, jones_via_bracket

rng = random.Random(7)
braids = [random_braid(rng) for _ in range(100)]

t0 = time.perf_counter()
jones = [eval_general(b, JONES) for b in braids]
alex = [eval_general(b, ALEXANDER) for b in braids]
t1 = time.perf_counter()
bracket = [jones_via_bracket(b) for b in braids]
burau = [alexander_via_burau(b) for b in braids]
t2 = time.perf_counter()

print(f"evaluator: {t1 - t0:.2f}s, oracles: {t2 - t1:.2f}s for {len(braids)} braids")
print("Jones agrees with bracket:", sum(j == k for j, k in zip(jones, bracket)), "/", len(braids))
print("Alexander agrees with Burau:",
      sum(equal_up_to_unit(a, c) for a, c in zip(alex, burau)), "/", len(braids))

# one worked comparison
b = braids[3]
print(f"\n[{b}]_{b.n}")
print("  skein  :", jones[3])
print("  bracket:", bracket[3])
