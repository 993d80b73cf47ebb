"""
skeinpoly
=========

Skein (HOMFLY), Jones and Conway-normalized Alexander polynomials of
oriented links given as closed braids.  The evaluators use only the
quadratic and cubic braid relations, the free-circle/Hopf-band constants
and Markov moves; the classical crossing-change relation falls out as a
checkable consequence.

Subpackages
-----------
rings      exact Laurent polynomials and a one-element localization
braid      braid words, permutations, Markov moves
algebra    group-algebra elements and the band-form rewrite engine
evaluator  the recursive and fixed-component evaluators
oracles    Kauffman bracket and Burau cross-checks
checks     seeded property suites
cli        ``skeinpoly`` command-line front end
"""

from .algebra import (
    AlgebraElement,
    RewriteParams,
    homogeneous_components,
    key_reduce,
    normalize_exponent,
    reduce_to_band_form,
)
from .braid import (
    BraidParseError,
    BraidWord,
    Permutation,
    chain,
    closure_components,
    concat,
    conjugate,
    cyclic_min,
    invert,
    markov_stabilize,
    parse,
    shift,
    underlying_permutation,
)
from .evaluator import (
    ALEXANDER,
    HOMFLY,
    JONES,
    SPECS,
    InvariantSpec,
    check_skein_relation_I,
    eval_fixed_mu_alexander,
    eval_fixed_mu_skein,
    eval_general,
)
from .oracles import alexander_via_burau, equal_up_to_unit, jones_via_bracket
from .rings import (
    LaurentPoly,
    Localized,
    NotDivisible,
    NotInteger,
    loc_add,
    loc_make,
    loc_mul,
    loc_to_poly,
    poly_add,
    poly_div_exact,
    poly_mul,
    poly_subst,
)

__version__ = "0.1.0"
