"""Generator sets for the permutation groups used in tests and corpus runs."""
from itertools import combinations

from .domain import PermGroup, Permutation


def symmetric_group(degree):
    if degree == 1:
        return PermGroup(1)
    return PermGroup(degree, [
        Permutation.from_cycles(degree, (0, 1)),
        Permutation.from_cycles(degree, tuple(range(degree))),
    ])


def alternating_group(degree):
    return PermGroup(degree, [Permutation.from_cycles(degree, (0, 1, i)) for i in range(2, degree)])


def cyclic_group(degree):
    return PermGroup(degree, [Permutation.from_cycles(degree, tuple(range(degree)))])


def dihedral_group(degree):
    reflection = Permutation(tuple((-x) % degree for x in range(degree)))
    return PermGroup(degree, [Permutation.from_cycles(degree, tuple(range(degree))), reflection])


def agl_1_5():
    return PermGroup(5, [(1, 2, 3, 4, 0), (0, 2, 4, 1, 3)])


def pgl_2_5():
    # points 0..4 are GF(5), point 5 is infinity
    return PermGroup(6, [(1, 2, 3, 4, 0, 5), (0, 2, 4, 1, 3, 5), (5, 4, 2, 3, 1, 0)])


def psl_2_5():
    return PermGroup(6, [(1, 2, 3, 4, 0, 5), (0, 4, 3, 2, 1, 5), (5, 4, 2, 3, 1, 0)])


def psl_3_2():
    # automorphisms of the Fano plane with lines {x, x+1, x+3} mod 7
    return PermGroup(7, [
        (1, 2, 3, 4, 5, 6, 0),
        (0, 2, 4, 6, 1, 3, 5),
        Permutation.from_cycles(7, (2, 6), (4, 5)),
    ])


def grid_product_group(k):
    """S_k x S_k on a k-by-k grid, point r*k + c for row r and column c."""
    def on_rows(perm):
        return Permutation(tuple(perm(r) * k + c for r in range(k) for c in range(k)))

    def on_columns(perm):
        return Permutation(tuple(r * k + perm(c) for r in range(k) for c in range(k)))

    factor = symmetric_group(k)
    generators = [on_rows(p) for p in factor.generators] + [on_columns(p) for p in factor.generators]
    return PermGroup(k * k, generators)


def row_column_points(n):
    return [(i, pair) for i in range(n) for pair in combinations(range(n), 2)]


def row_column_group(n):
    """S_n acting diagonally on the pairs (i, {j, k}); rows fix i, columns fix {j, k}."""
    points = row_column_points(n)
    index = {point: position for position, point in enumerate(points)}
    generators = []
    for perm in symmetric_group(n).generators:
        image = []
        for i, (j, k) in points:
            pair = tuple(sorted((perm(j), perm(k))))
            image.append(index[(perm(i), pair)])
        generators.append(Permutation(tuple(image)))
    return PermGroup(len(points), generators)


def row_column_rows(n):
    points = row_column_points(n)
    return [tuple(p for p, (i, _) in enumerate(points) if i == row) for row in range(n)]


def transitive_fixtures():
    """Named transitive groups of degree at most 9."""
    return {
        'S3': symmetric_group(3),
        'S4': symmetric_group(4),
        'A4': alternating_group(4),
        'C4': cyclic_group(4),
        'D4': dihedral_group(4),
        'C6': cyclic_group(6),
        'D6': dihedral_group(6),
        'AGL(1,5)': agl_1_5(),
        'PSL(2,5)': psl_2_5(),
        'PGL(2,5)': pgl_2_5(),
        'PSL(3,2)': psl_3_2(),
        'C8': cyclic_group(8),
        'S2xS2': grid_product_group(2),
        'S3xS3': grid_product_group(3),
    }
