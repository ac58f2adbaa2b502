"""Checking a single ordering exactly.

An ordering p is admissible when some (alpha, beta) != 0 makes
x = alpha*v + beta*w nondecreasing along p. That is a 2-D cone test, done here
in exact integer arithmetic on the modified star and at 50 digits on the cycle.
Brute force over all n! orderings then gives an independent count.
"""
from itertools import permutations

from multifiedler import cone_feasible, enumerate_by_oracle
from multifiedler import oracles

v, w = (list(map(int, col)) for col in oracles.modified_star_fiedler_basis(5).T)
print("modified star basis v =", v, " w =", w)
for p in [(5, 2, 1, 3, 4), (1, 2, 3, 4, 5), (2, 1, 5, 4, 3)]:
    print(f"  {p} feasible: {cone_feasible(v, w, p)}")

total = sum(cone_feasible(v, w, p) for p in permutations(range(1, 6)) if p[0] < p[-1])
print("feasible orderings up to reversal:", total)

cv, cw = oracles.cycle_fiedler_basis_mp(6)
print("cycle n=6 by brute force:", len(enumerate_by_oracle(cv, cw)))
