"""PQ-trees and Robinson (R) matrices.

A simple Fiedler value with tied entries gives a set of orderings that a
PQ-tree describes compactly: P-nodes permute freely, Q-nodes can only flip.
An R-matrix has entries that do not increase away from the diagonal; the
cycle's similarity matrix has no such reordering.
"""
import numpy as np

from multifiedler import Leaf, PNode, QNode, gen_cycle, is_pre_r_bruteforce, is_r_matrix, pq_frontier, r_form_witness, similarity

tree = QNode((Leaf(1), PNode((Leaf(2), Leaf(3), Leaf(4))), Leaf(5)))
print("frontier of Q(1, P(2,3,4), 5):")
for p in pq_frontier(tree):
    print("  ", p)

R = np.array([[4, 2, 1, 0, 0], [2, 4, 2, 1, 0], [1, 2, 4, 3, 1], [0, 1, 3, 4, 2], [0, 0, 1, 2, 4]])
perm = np.array([3, 0, 4, 2, 1])
scrambled = R[np.ix_(perm, perm)]
print("\nscrambled R-matrix is R:", is_r_matrix(scrambled))
print("an order restoring R-form:", r_form_witness(scrambled))
print("cycle C5 similarity is pre-R:", is_pre_r_bruteforce(similarity(gen_cycle(5))))
