"""
Cluster variables of C[N] for GL_4 as generalized orbital varieties
===================================================================

Each Lusztig datum picks a tableau with minimal padding and dominant weight;
the rank conditions of that tableau cut out a prime ideal in the nilpotent
slice.  We print the datum, the tableau, its stable form and the ideal.
"""

from mvfusion.fusion import govar
from mvfusion.tableaux import format_datum, sigma, strip_padding

DATA = [
    (1, 0, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 0, 1),
    (1, 0, 0, 1, 0, 0), (0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 1),
    (0, 0, 0, 0, 1, 0), (0, 1, 0, 0, 0, 1), (1, 0, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 0), (0, 1, 0, 0, 1, 0), (1, 0, 0, 1, 0, 1),
]

print(f"{'datum':14} {'tableau':10} {'stable':8} dim  ideal")
for n in DATA:
    tau = sigma(n, 4)
    res = govar(tau)
    gens = "; ".join(str(g) for g in res.ideal.groebner()) or "0"
    print(f"{format_datum(n):14} {str(tau):10} {str(strip_padding(tau)):8} {res.dimension:3}  {gens}")
