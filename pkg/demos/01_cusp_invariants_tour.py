"""Tour of the four equivalent descriptions of one cusp.

The degree-12 curve with cusp parameterized by three Newton pairs
(2,3),(2,5),(2,3) is small enough to inspect everything by hand: this
script walks it through Puiseux pairs, the characteristic sequence, the
multiplicity sequence of its resolution, and the scalar invariants, and
confirms the two independent routes to the delta invariant agree.
"""

from fractions import Fraction

from cuspidal import (
    characteristic_seq,
    delta_from_multiplicities,
    delta_from_puiseux,
    format_multiplicity,
    genus_target,
    lct,
    multiplicity_sequence,
    newton_to_puiseux,
    puiseux_to_newton,
    self_intersection,
)

newton = ((2, 3), (2, 5), (2, 3))
degree = 12

print(f"Newton pairs          {newton}")

puiseux = newton_to_puiseux(newton)
print(f"Puiseux pairs         {puiseux}")
assert puiseux_to_newton(puiseux) == newton  # lossless

a, b = characteristic_seq(newton)
print(f"characteristic data   x = t^{a}, y = " + " + ".join(f"t^{e}" for e in b))

mult = multiplicity_sequence(newton)
print(f"multiplicity sequence {format_multiplicity(mult)}")

d1 = delta_from_puiseux(puiseux)
d2 = delta_from_multiplicities(mult)
print(f"delta via exponents   {d1}")
print(f"delta via blow-ups    {d2}")
print(f"genus of a degree-{degree} curve: {genus_target(degree)}")
assert d1 == d2 == genus_target(degree), "the curve is rational and unicuspidal"

threshold = lct(puiseux)
print(f"log canonical threshold  {threshold}  (vs 3/d = {Fraction(3, degree)})")
print(f"self-intersection        {self_intersection(degree, puiseux)}")
