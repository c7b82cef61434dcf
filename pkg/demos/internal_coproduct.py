"""
The internal coproduct
======================

Delta_P replaces the alphabet x by the products x_i y_j, ordered
lexicographically.  On the monomial basis this is a sum over reduced
nonnegative integer matrices.
"""
from qsymlab import M, delta_P, eps_P
from qsymlab.compositions import Composition
from qsymlab.expr import format_element, format_tensor
from qsymlab.instances import get_instance
from qsymlab.lincomb import LinComb
from qsymlab.matrices import enum_reduced_with_read_reduction

Q = get_instance("qsym")
fmt = Q.format_key

# four matrices read to (1,1); two of them give the same term
for a in enum_reduced_with_read_reduction(Composition([1, 1])):
    print(a.entries, "row", tuple(a.row()), "column", tuple(a.column()))
print("Delta_P(M[1,1]) =", format_tensor(delta_P(M(1, 1)), fmt, fmt))

# the number of matrices grows quickly with the length
for n in range(1, 6):
    print(f"length {n}: {len(enum_reduced_with_read_reduction(Composition([1] * n)))} matrices")

# eps_P is a counit: contract the right leg and M[2,1] comes back
t = delta_P(M(2, 1))
back = LinComb(Q.ring, ((a, c * eps_P(M(*b))) for (a, b), c in t.items()))
print("(id x eps_P) Delta_P(M[2,1]) =", format_element(Q, back))
