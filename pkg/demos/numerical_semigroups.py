"""
One variable: Arf closures of numerical semigroups
==================================================

In dimension one the weakly Arf condition is the classical Arf condition.
The closure is compared with a direct brute-force computation.
"""

from arfs2 import AffineSemigroup, weak_arf_closure
from arfs2.oracles import arf_closure_1d

for gens in ([3, 5], [4, 6, 7], [5, 7, 9], [6, 7, 11]):
    S = AffineSemigroup(gens)
    T = weak_arf_closure(S, bound=2 * gens[0] * gens[-1]).closure
    small = arf_closure_1d(gens)
    print(f"<{', '.join(map(str, gens))}>  closure generators {[g[0] for g in T.gens]}"
          f"  elements up to conductor {small}")
