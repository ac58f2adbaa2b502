"""The graphical method on the 5-cycle.

With a double Fiedler value every Fiedler vector is v + gamma*w (up to scale and
the two directions gamma = +-inf). Each unit becomes a line in the
(gamma, value) plane; orderings only change where lines cross, so sorting the
lines once per interval and once at each crossing lists every admissible
ordering.
"""
from multifiedler import build_line_arrangement, fiedler_space, gen_cycle, laplacian, similarity, tie_expand
from multifiedler.enumeration import graphical_method, probe_points

fs = fiedler_space(laplacian(similarity(gen_cycle(5))))
v, w = fs.basis.T
arr = build_line_arrangement(v, w)

print("crossing abscissae (gamma, lines meeting):")
for gamma, k in arr.table():
    print(f"  {gamma:+.6f}  x{k}")

print("\norderings met along the sweep:")
seen = set()
for x, tol in probe_points(arr):
    for p in tie_expand(x, tol):
        if p not in seen:
            seen.add(p)
            print("  ", p)

result = graphical_method(v, w)
print(f"\n{len(result)} orderings up to reversal")
assert set(result) == seen

# `multifiedler lines --family cycle --n 5 --svg c5.svg` draws the same picture
