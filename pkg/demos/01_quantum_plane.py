"""Walkthrough: the quantum plane and its classical limit.

The smallest interesting quantized algebra has two generators x, y and a
single relation x y = t y x, with t an invertible parameter.  Setting t = 1
recovers the ordinary polynomial plane; the first-order behaviour near
t = 1 equips that plane with a Poisson bracket.  This script builds the
algebra, checks the relation, and computes the limit bracket exactly.

Run:  python demos/01_quantum_plane.py
"""

from fractions import Fraction

from qweyl import MuPoly, QTScalar
from qweyl.quantum_plane import PlaneElement, semiclassical_bracket_xy

print(__doc__)

x, y = PlaneElement.x(), PlaneElement.y()
t = QTScalar.monomial((1,))  # the parameter eta1, realized by e1 = t

print("x * y            =", x * y)
print("y * x            =", y * x)
print("t * (y * x)      =", (y * x) * t)
print("relation x y = t y x holds:", x * y == (y * x) * t)
print()

# The commutator x y - y x is divisible by (t - 1); its exact quotient at
# t = 1 is the Poisson bracket of the limit.  The derivative symbol mu1
# records e1'(1); with the realization e1 = t it takes the value 1.
comm = x * y - y * x
print("x y - y x        =", comm)

bracket = semiclassical_bracket_xy()
print("{x, y} (formal)  =", " + ".join(f"({d})*y^{m[0]}x^{m[1]}" for m, d in bracket.items()))

numeric = {m: d.subs([Fraction(1)]) for m, d in bracket.items()}
print("{x, y} at mu1=1  =", numeric, " i.e. {x, y} = x y")
assert bracket == {(1, 1): MuPoly.variable(1, 0)}
print()
print("The limit of the noncommutative plane is the polynomial plane with")
print("the multiplicative Poisson structure {x, y} = x y.")
