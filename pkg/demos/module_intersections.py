"""
Intersections M/a & M/b over k[x, y]
====================================

M is generated by (x, 0), (y, x), (0, y) inside R^2. Dividing by x and y and
intersecting gives m + m; with squares or cubes it gives all of R^2.
"""

from arfs2 import FracSubmodule, Poly, frac_intersect
from arfs2.io import format_module, parse_module, parse_poly
from arfs2.polymod import free_module, ab_module_sides

M = parse_module("[x, 0]; [y, x]; [0, y]")
x, y = parse_poly("x"), parse_poly("y")
one = Poly.const(1)

L = frac_intersect(M, x, y)
print("xM & yM =", format_module(L.num), " over", L.denom)
mm = parse_module("[x, 0]; [y, 0]; [0, x]; [0, y]")
print("M/x & M/y == m + m:", L == FracSubmodule(one, mm))

for n in (2, 3):
    L = frac_intersect(M, x ** n, y ** n)
    print(f"M/x^{n} & M/y^{n} == R^2:", L == FracSubmodule(one, free_module(2)))

# equality with the squared version holds exactly when a, b is regular
for a, b in [(x, y), (x ** 2, y ** 2)]:
    equal, regular = ab_module_sides(M, a, b)
    print(f"a={a!r}, b={b!r}: equal={equal}, regular={regular}")
