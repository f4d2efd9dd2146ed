"""
K-classes and tensor characters of U_{2,n}
==========================================

Three independent routes to the same class, then the tensor module.
"""

from matorbit import Rank2Config, k_rank2, k_uniform_rank2
from matorbit.kclass import hilbert_coefficient
from matorbit.linalg import RationalMatrix
from matorbit.oracle import idoubleprime_generators, k_polynomial_of_quotient
from matorbit.tensor import (char_uniform_rank2, character_dimension, gl_dimension,
                             schur_weyl_module, sn_multiplicities)

v = RationalMatrix([[1, 0, 1, 1], [0, 1, 1, 2]])

closed = k_uniform_rank2(4)
engine = k_rank2(Rank2Config.from_mu((1, 1, 1, 1)))
oracle = k_polynomial_of_quotient(idoubleprime_generators(v))
print("K(U_{2,4}) =", closed)
print("engine and oracle agree:", closed == engine == oracle)

# the Hilbert coefficient at beta = (1,1,1,1) is the character of the tensor module
for n in (4, 5, 6):
    H = hilbert_coefficient(k_uniform_rank2(n), (1,) * n)
    print(n, H == char_uniform_rank2(n), character_dimension(H))

# Schur-Weyl side: the S_4-module spanned by permuted tensors
mod = schur_weyl_module(v)
mults = sn_multiplicities(mod)
print("S_4 multiplicities:", mults)
print("S_4 dimension", mod.dim, "/ GL_2 dimension", gl_dimension(mults, 2))
