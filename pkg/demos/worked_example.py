"""
The weakly Arf (S2)-ification of k[X^5, XY^4, Y^5]
==================================================

Walks through every stage on one small ring and prints what each produces.
"""

from arfs2 import (AffineSemigroup, colon_stabilize, is_weakly_arf_bounded, s2ify,
                   saturation, wa_s2ify, weak_arf_closure)

R = AffineSemigroup([(5, 0), (1, 4), (0, 5)])
print("R generators:", R.gens)

# the normalization: all lattice points of the cone
print("normalization:", saturation(R).gens)

# R is not weakly Arf, so close it up
clo = weak_arf_closure(R, bound=60)
print("weak Arf closure adds:", clo.new_generators, "after", clo.iterations, "round(s)")
A = clo.closure

# the colon that computes the height-one part of Y^10 A
U, n = colon_stabilize(A, (0, 10), (5, 0))
print("aA : b =", U.gens, "stable from n =", n)

# (S2)-ification of the closure: A[U/a]
rep = s2ify(A, certify=True)
print("s2ify adds:", rep.added)
for c in rep.certificates:
    print(f"  {c.name:24s} {'ok' if c.passed else 'FAILED'} {c.detail}")
print("normal?", rep.s2_gens.is_normal())

# the whole pipeline in one call
final = wa_s2ify(R, bound=60)
print("result:", final.result.gens)
print("weakly Arf:", is_weakly_arf_bounded(final.result, 60))
print("equal to its own (S2)-ification:", final.s2_fixed)
