"""
Characters and their universal morphisms to QSym
================================================

A character zeta on a connected graded Hopf algebra determines a graded
coalgebra map Psi into QSym with eps_P o Psi = zeta.
"""
from qsymlab import ModularRing, abs_morphism
from qsymlab.expr import format_element
from qsymlab.instances import characters_for, get_instance
from qsymlab.suites import run_suite

P = get_instance("poly")
Q = get_instance("qsym")

# zeta1 evaluates at x = 1 and sends x^n to the sum of multinomials times M_alpha
for zeta in characters_for(P):
    print(f"Psi_{zeta.name}(x^3) =", format_element(Q, abs_morphism(P, zeta, P.elem(3))))

# the full suite, over Z/7 for a change
report = run_suite("abs-morphism", ModularRing(7), 4, "poly")
print(report.to_text())
