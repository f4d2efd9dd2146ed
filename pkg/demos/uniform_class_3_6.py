"""
The uniform cohomology class at r=3, n=6
========================================

The (u, t) sum built from pairs (lam, lam~) restricts correctly to every
fixed point of the Grassmannian, but from r=3, n=6 on it contains Schur
terms wider than n-r.  Reducing it modulo the Grassmannian relations gives
the class the Groebner oracle computes, and a smaller degree.
"""

import random
from itertools import combinations

from matorbit.cohomology import (degree_from_class, degree_uniform, localize_expansion,
                                 multidegree, random_point, uniform_class, uniform_class_ut)
from matorbit.linalg import RationalMatrix
from matorbit.oracle import (dimension_of_monomial, initial_ideal, iprime_generators,
                             k_numerator_monomial)
from matorbit.symfunc import schur_expand

shown, C = uniform_class_ut(3, 6), uniform_class(3, 6)
wide = {k: c for k, c in shown.terms.items() if k[0] and k[0][0] > 3}
print("terms with lambda_1 > 3 in the displayed sum:", wide)

pt = random_point(6, random.Random(0))
same = all(localize_expansion(C, B, pt) == localize_expansion(shown, B, pt)
           for B in combinations(range(1, 7), 3))
print("same restrictions to all 20 fixed points:", same)

# 3x6 Vandermonde matrix: uniform matroid; in(I'_v) comes out square-free
v = RationalMatrix([[j ** i for j in range(1, 7)] for i in range(3)])
lms = initial_ideal(iprime_generators(v), cap_steps=10**8)
print("square-free initial ideal:", all(e <= 1 for m in lms for e in m))
codim = 18 - dimension_of_monomial(lms, 18)
oracle = multidegree(schur_expand(k_numerator_monomial(lms, 3, 6), 3, 6), codim)
print("codim", codim, "| oracle == reduced:", oracle == C, "| oracle == displayed:", oracle == shown)
print("degree: displayed sum", degree_uniform(3, 6), "reduced class", degree_from_class(C))
