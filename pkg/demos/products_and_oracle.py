"""
Multiplying monomial quasisymmetric functions
=============================================

Products of M_alpha are sums over overlapping shuffles.  Here we compute a
few, then check one against a brute-force expansion in finitely many
variables.
"""
from qsymlab import M, qsym_mul
from qsymlab.expr import format_element
from qsymlab.instances import get_instance
from qsymlab.oracle import expand_M, extract_M_coeffs, poly_mul

Q = get_instance("qsym")

# M[1]^2 picks up M[1,1] twice, once for each way to order the two letters
print("M[1] * M[1] =", format_element(Q, qsym_mul(M(1), M(1))))
print("M[1] * M[2] =", format_element(Q, qsym_mul(M(1), M(2))))
print("M[1,2] * M[1] =", format_element(Q, qsym_mul(M(1, 2), M(1))))

# the same product as honest polynomials in 4 variables
p = poly_mul(expand_M((1, 2), 4), expand_M((1,), 4))
print("monomials in x1..x4:", len(p.terms))
print("read back in the M basis:", format_element(Q, extract_M_coeffs(p)))
