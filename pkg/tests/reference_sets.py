"""Permutation matrices printed for the case studies, one list entry per column."""


def columns(rows):
    return [tuple(col) for col in zip(*rows)]


CYCLE_4 = columns([
    [2, 2, 3, 3, 3, 3, 4, 4],
    [3, 3, 2, 2, 4, 4, 3, 3],
    [1, 4, 1, 4, 1, 2, 1, 2],
    [4, 1, 4, 1, 2, 1, 2, 1],
])

CYCLE_5 = columns([
    [5, 5, 5, 5, 5, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2],
    [4, 1, 1, 4, 1, 5, 5, 5, 2, 2, 2, 1, 1, 3, 1],
    [1, 4, 4, 1, 2, 2, 4, 2, 5, 5, 3, 5, 3, 1, 3],
    [3, 3, 2, 2, 4, 4, 2, 3, 4, 3, 5, 3, 5, 5, 4],
    [2, 2, 3, 3, 3, 3, 3, 4, 3, 4, 4, 4, 4, 4, 5],
])

# line-sweep trace for the 5-cycle: first ordering, then three new orderings per crossing
CYCLE_5_TRACE = [
    (5, 4, 1, 3, 2),
    (5, 1, 4, 3, 2), (5, 1, 4, 2, 3), (5, 4, 1, 2, 3),
    (5, 1, 2, 4, 3), (1, 5, 2, 4, 3), (1, 5, 4, 2, 3),
    (1, 5, 2, 3, 4), (1, 2, 5, 4, 3), (1, 2, 5, 3, 4),
    (1, 2, 3, 5, 4), (2, 1, 5, 3, 4), (2, 1, 3, 5, 4),
    (2, 3, 1, 5, 4), (2, 1, 3, 4, 5), (2, 3, 1, 4, 5),
]

# modified star, n = 5: alpha, beta > 0
MODSTAR_5_CASE1 = columns([
    [2, 3, 2, 3, 2, 3],
    [3, 2, 3, 2, 3, 2],
    [4, 4, 1, 1, 1, 1],
    [1, 1, 4, 4, 5, 5],
    [5, 5, 5, 5, 4, 4],
])

# modified star, n = 5: alpha > 0 > beta
MODSTAR_5_CASE2 = columns([
    [5, 5, 5, 5, 2, 3],
    [1, 1, 2, 3, 3, 2],
    [2, 3, 3, 2, 5, 5],
    [3, 2, 1, 1, 1, 1],
    [4, 4, 4, 4, 4, 4],
])

# modified star, n = 5: orderings that need an equality between x_2 and another entry
MODSTAR_5_EQUALITIES = columns([
    [5, 5, 5, 5, 2, 3],
    [2, 3, 1, 1, 5, 5],
    [1, 1, 2, 3, 3, 2],
    [3, 2, 4, 4, 1, 1],
    [4, 4, 3, 2, 4, 4],
])
