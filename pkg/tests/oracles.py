"""Independent brute-force oracles shared by the test modules.

Everything here works on plain lists of lists and avoids the library's
own elimination code paths, so the tests cross two genuinely different
routes to the same values.
"""

import math
from itertools import combinations, permutations


def naive_product(a, b):
    """Triple-loop matrix product on lists of lists."""
    assert len(a[0]) == len(b)
    return [
        [sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def leibniz_det(rows):
    """Determinant as the signed sum over all permutations."""
    n = len(rows)
    assert all(len(r) == n for r in rows)
    total = 0
    for perm in permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term *= rows[i][j]
        total += _parity(perm) * term
    return total


def _parity(perm):
    seen = [False] * len(perm)
    sign = 1
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def minors_gcd(rows, k):
    """Gcd of all k x k minor determinants, 0 if they all vanish."""
    m, n = len(rows), len(rows[0])
    g = 0
    for ri in combinations(range(m), k):
        for ci in combinations(range(n), k):
            g = math.gcd(g, leibniz_det([[rows[i][j] for j in ci] for i in ri]))
    return g


def matrix_from_index(index, shape, lo, hi):
    """The index-th matrix of the given shape with entries in [lo, hi].

    Entries are the base-(hi-lo+1) digits of the index, so iterating the
    index walks the whole exhaustive family deterministically.
    """
    m, n = shape
    base = hi - lo + 1
    entries = []
    for _ in range(m * n):
        index, digit = divmod(index, base)
        entries.append(lo + digit)
    return [entries[i * n : (i + 1) * n] for i in range(m)]
