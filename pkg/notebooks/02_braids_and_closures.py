"""
Braids, permutations and Markov moves
=====================================

A braid word is a tuple of signed generator indices on n strands.  Its
closure is a link whose component count is the number of cycles of the
underlying permutation.
"""

from skeinpoly.braid import (
    chain,
    closure_components,
    conjugate,
    cyclic_min,
    markov_stabilize,
    parse,
    underlying_permutation,
)

for text in ["1 1 1", "1 -2 1 -2", "1 1", "", "1 2 1 2 1"]:
    w = parse(text) if text else parse(text, 3)
    perm = underlying_permutation(w)
    print(f"[{w}] on {w.n} strands: permutation {perm.images}, "
          f"cycles {perm.cycles()}, {closure_components(w)} component(s)")

# chains sigma_1^2 sigma_2^2 ... are the normalizing links for Delta
for p in range(1, 5):
    print(f"chain({p}) = [{chain(p)}]")

# conjugation and stabilization change the word but not the closure
w = parse("1 -2 1 -2")
g = parse("2 1 -2", 3)
print("conjugate:", conjugate(w, g), "-> cyclic_min", cyclic_min(conjugate(w, g)))
print("stabilized:", markov_stabilize(w, 1), "on", markov_stabilize(w, 1).n, "strands")
