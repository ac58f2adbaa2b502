"""Monte Carlo sampling against the exhaustive sweep on GPG(n, 1).

Random directions in the Fiedler plane almost surely avoid every tie, so the
sampler only sees the generic orderings: 2**n * n of them here. The graphical
method also reaches the orderings that need ties, which is where most of the
count lives.
"""
from multifiedler import fiedler_space, gen_petersen, graphical_method, laplacian, monte_carlo_method, similarity
from multifiedler import oracles

for n in range(5, 8):
    fs = fiedler_space(laplacian(similarity(gen_petersen(n))))
    full = graphical_method(*fs.basis.T)
    mc = monte_carlo_method(fs.basis, 5000, seed=0)
    print(f"GPG({n},1): graphical={len(full):7d}  monte carlo={len(mc):5d}  "
          f"2^n n={oracles.petersen_lower_bound(n):5d}  subset={mc <= full}")
