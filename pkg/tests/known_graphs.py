"""Known small graphs and parameter tables used as test fixtures."""

from dsrg import BinMatrix

# 8-vertex graph with parameters (8, 3, 2, 1, 1)
FIXTURE_8 = BinMatrix.from_rows([
    [0, 1, 0, 0, 1, 0, 0, 1],
    [0, 0, 1, 0, 1, 1, 0, 0],
    [0, 0, 0, 1, 0, 1, 1, 0],
    [1, 0, 0, 0, 0, 0, 1, 1],
    [1, 1, 0, 0, 0, 0, 0, 1],
    [0, 1, 1, 0, 1, 0, 0, 0],
    [0, 0, 1, 1, 0, 1, 0, 0],
    [1, 0, 0, 1, 0, 0, 1, 0],
])

# 10-vertex quadratic-residue block graph with parameters (10, 4, 2, 1, 2)
FIXTURE_10 = BinMatrix.from_rows([
    [0, 1, 0, 0, 1, 0, 1, 0, 0, 1],
    [1, 0, 1, 0, 0, 0, 1, 0, 1, 0],
    [0, 1, 0, 1, 0, 1, 0, 0, 1, 0],
    [0, 0, 1, 0, 1, 1, 0, 1, 0, 0],
    [1, 0, 0, 1, 0, 0, 0, 1, 0, 1],
    [0, 1, 0, 0, 1, 0, 1, 0, 0, 1],
    [0, 0, 1, 0, 1, 1, 0, 1, 0, 0],
    [1, 0, 1, 0, 0, 0, 1, 0, 1, 0],
    [1, 0, 0, 1, 0, 0, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 0, 1, 0],
])

# 14-vertex symmetric-product block graph with parameters (14, 6, 3, 2, 3)
FIXTURE_14 = BinMatrix.from_rows([
    [0, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0],
    [0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1],
    [1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1],
    [1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [0, 1, 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0],
    [1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0],
    [1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1, 1, 1, 0],
    [1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 0, 0, 0, 1],
    [0, 0, 1, 1, 1, 0, 0, 1, 1, 1, 0, 0, 0, 0],
])

# paired-rows family and its complement family, orders 6..34
TABLE_2_LEFT = [
    (6, 2, 1, 0, 1), (10, 4, 2, 1, 2), (14, 6, 3, 2, 3), (18, 8, 4, 3, 4),
    (22, 10, 5, 4, 5), (26, 12, 6, 5, 6), (30, 14, 7, 6, 7), (34, 16, 8, 7, 8),
]
TABLE_2_RIGHT = [
    (6, 3, 2, 1, 2), (10, 5, 3, 2, 3), (14, 7, 4, 3, 4), (18, 9, 5, 4, 5),
    (22, 11, 6, 5, 6), (26, 13, 7, 6, 7), (30, 15, 8, 7, 8), (34, 17, 9, 8, 9),
]

# bordered-team / cycle-sum family, orders 8..32
TABLE_3 = [
    (8, 3, 2, 1, 1), (12, 5, 3, 2, 2), (16, 7, 4, 3, 3), (20, 9, 5, 4, 4),
    (24, 11, 6, 5, 5), (28, 13, 7, 6, 6), (32, 15, 8, 7, 7),
]
