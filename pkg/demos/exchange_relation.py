"""
An exchange relation seen through fusion
========================================

x1 = b(2) and x1* = b(1/3) multiply to b(3) + b(2/3): the zero fiber of the
family splits into two hyperplanes, each with multiplicity one.  Swapping the
factors gives the same answer, and fusing with the empty tableau is the identity.
"""

from mvfusion.fusion import flatness_degrees, fuse
from mvfusion.tableaux import Tableau

a, b = Tableau.parse("2", 4), Tableau.parse("1/3", 4)
r = fuse(a, b)
print("F:", r.F)
print("J:", r.J)
print(r.summary())
print("swapped:", fuse(b, a).summary())
print("unit:", fuse(a, Tableau((), 4)).summary())
generic, special = flatness_degrees(r)
print(f"degree of the fiber over s=1: {generic}, over s=0: {special}")
print()
print(r.to_json(indent=2))
