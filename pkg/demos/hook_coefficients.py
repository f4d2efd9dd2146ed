"""
Hook coefficients and the dependent-set enumerator
==================================================

FakeDep predicts the hook Schur coefficients of a K-class.  The variant
with exponent q^{rk-1}, and the sign rule (-1)^k, are shown next to it;
the Groebner oracle decides.
"""

from matorbit.kclass import (dep_polynomial_as_printed, hook_coefficient, hook_discrepancy_report,
                             hook_enumerator_fakedep, hook_theorem_as_printed, hooks_from_enumerator,
                             k_class)
from matorbit.matroid import Matroid
from matorbit.oracle import k_polynomial_of_quotient, minors_ideal

# two parallel columns; in A^{2x2} the orbit closure is the determinant hypersurface
U12 = Matroid.uniform(1, 2)
fake, dep = hook_enumerator_fakedep(U12), dep_polynomial_as_printed(U12)
print("FakeDep         ", fake)
print("q^{rk-1} variant", dep)
for row in hook_discrepancy_report(U12):
    print("   ", row)

K = k_polynomial_of_quotient(minors_ideal(2, 2, 2))
print("oracle K =", K, "| engine agrees:", K == k_class(U12, 2))
print("hook k=2 at beta=(1,1): oracle", hook_coefficient(K, 2, (1, 1)),
      "FakeDep", hooks_from_enumerator(fake, 2).get(((1, 1), 2)),
      "sign rule", hook_theorem_as_printed(U12, 2, (1, 1)))

# three parallel columns in A^{3x3}: rank <= 1 matrices
U13 = Matroid.uniform(1, 3)
K3 = k_polynomial_of_quotient(minors_ideal(3, 3, 2))
print("hook k=3 at beta=(1,1,1): oracle", hook_coefficient(K3, 3, (1, 1, 1)),
      "FakeDep", hooks_from_enumerator(hook_enumerator_fakedep(U13), 3).get(((1, 1, 1), 3)),
      "sign rule", hook_theorem_as_printed(U13, 3, (1, 1, 1)))
