"""
Bernstein homomorphism of a commutative Hopf algebra
====================================================

beta_H(h) = sum_alpha xi_alpha(h) (x) M_alpha.  For k[x] the coefficient maps
are multinomial coefficients, on QSym beta is the flipped internal
coproduct, and for cocommutative H the QSym legs are symmetric.
"""
from qsymlab import bernstein_map, bernstein_on_qsym, delta_P_prime, M
from qsymlab.bernstein import legs
from qsymlab.compositions import format_composition as fc
from qsymlab.expr import format_element, format_tensor
from qsymlab.instances import get_instance
from qsymlab.qsym import is_symmetric

P = get_instance("poly")
Q = get_instance("qsym")
L = get_instance("lambda")

t = bernstein_map(P, P.elem(3))
print("beta(x^3) =", format_tensor(t, P.format_key, Q.format_key))

# on QSym the construction reproduces Delta'_P
for g in ([2], [1, 1], [1, 2]):
    same = bernstein_on_qsym(g) == delta_P_prime(M(*g))
    print(f"beta(M{fc(g)}) == Delta'_P(M{fc(g)}):", same)

# Lambda is cocommutative, so every right leg is a symmetric function
for lam, leg in legs(bernstein_map(L, L.elem((2, 1)))).items():
    print(f"leg over m{fc(lam)}:", format_element(Q, leg), "symmetric:", is_symmetric(leg))

# QSym is not cocommutative, and a leg of beta(M[1,2]) shows it
for h, leg in legs(bernstein_on_qsym([1, 2])).items():
    if not is_symmetric(leg):
        print(f"non-symmetric leg over M{fc(h)}:", format_element(Q, leg))
