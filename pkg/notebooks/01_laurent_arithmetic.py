"""
Exact Laurent polynomials
=========================

Every value in skeinpoly is an integer Laurent polynomial.  This script
walks through the arithmetic the evaluators rely on.
"""

from skeinpoly.rings import (
    LaurentPoly,
    NotDivisible,
    loc_make,
    loc_to_poly,
    poly_div_exact,
    poly_subst,
)

# polynomials in a and z parse from the same text they print as
P = lambda s: LaurentPoly.from_text(s, half=False)
T = lambda s: LaurentPoly.from_text(s, half=True)

io = P("z^-1*a^-1 - z^-1*a")
print("free circle constant :", io)
print("its square           :", io * io)

# exact division either succeeds or refuses; nothing is approximated
print("(a^-2 - a^2) / (a^-1 - a) =", poly_div_exact(P("a^-2 - a^2"), P("a^-1 - a")))
try:
    poly_div_exact(P("1 + z^2 - a^2"), P("a^-2 - 1"))
except NotDivisible as exc:
    print("refused:", exc)

# half-exponent mode: variable 1 is t^(1/2)
zt = T("t^(1/2) - t^(-1/2)")
print("(t^(1/2) - t^(-1/2))^2 =", zt * zt)

# substitution a -> t, z -> t^(1/2) - t^(-1/2) turns HOMFLY into Jones
trefoil = P("2*a^2 + a^2*z^2 - a^4")
print("Jones of the trefoil      :", poly_subst(trefoil, T("t"), zt))
print("Alexander of the trefoil  :", poly_subst(trefoil, T("1"), zt))

# a one-element localization: values num / (a^-2 - 1)^k in lowest terms
D = P("a^-2 - 1")
x = loc_make(D * D * P("z"), 3, D)
print("localized:", x)
print("back to a polynomial:", loc_to_poly(loc_make(D * P("z"), 1, D)))
