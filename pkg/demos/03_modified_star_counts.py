"""Counting admissible orderings of the modified star.

A naive argument treats the Fiedler basis as coordinate vectors and predicts
(k+1)!(n-k)! orderings. For the modified star the true count is exactly half,
3(n-2)!, because the two basis vectors share most of their support.
"""
import time

from multifiedler import fiedler_space, gen_modified_star, graphical_method, laplacian, similarity
from multifiedler import oracles

print(f"{'n':>3} {'found':>8} {'3(n-2)!':>8} {'naive':>8} {'secs':>6}")
for n in range(5, 11):
    t0 = time.perf_counter()
    fs = fiedler_space(laplacian(similarity(gen_modified_star(n))))
    found = len(graphical_method(*fs.basis.T))
    dt = time.perf_counter() - t0
    print(f"{n:>3} {found:>8} {oracles.modified_star_count(n):>8} "
          f"{oracles.naive_count(n, 2):>8} {dt:6.2f}")
