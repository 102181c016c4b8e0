"""
Fusing two MV cycles for GL_3, one stage at a time
==================================================

The product of the basis elements for the tableaux 22 and 11/33 has three
terms, one of them with coefficient 2.  This script rebuilds that answer from
the slice matrix up.
"""

from mvfusion.fusion import family_ideal, fuse, make_problem, zero_fiber
from mvfusion.idealkit import degree, dimension
from mvfusion.slice import build_U
from mvfusion.tableaux import Tableau, gt_pattern

t1 = Tableau.parse("22", 3)
t2 = Tableau.parse("11/33", 3)
problem = make_problem(t1, t2)
print("weights", problem.mu1, "+", problem.mu2, "=", problem.mu)
print("shapes ", problem.lam1, "+", problem.lam2, "=", problem.lam)

# The family: diagonal blocks are companion matrices of t^a (t - s)^b.
U = build_U(problem.mu1, problem.mu2)
print()
print(U.pretty())

# Jordan types at 0 and at s come from the Gelfand-Tsetlin patterns.
print()
print("GT pattern of", t1, gt_pattern(problem.t1))
print("GT pattern of", t2, gt_pattern(problem.t2))

I0, F = family_ideal(problem)
print()
print("family ideal F (s-saturated):")
for g in F.groebner():
    print("   ", g)

J = zero_fiber(F)
print()
print(f"zero fiber J: dim {dimension(J)}, degree {degree(J)}")

# Components, primary parts and multiplicities.
result = fuse(t1, t2)
for c in result.components:
    print(f"  {str(c.tableau):8} stable {str(c.stable):6} mult {c.multiplicity}  prime {c.prime}")
print()
print("product:", result.summary())
print("degrees:", result.degree_J, "=", " + ".join(f"{c.multiplicity}*{c.degree}" for c in result.components))
