"""Backtracking search for an explicit isomorphism between two small tables."""
from __future__ import annotations

from .green import principal_ideals
from .properties import element_order
from .semigroup import FiniteSemigroup


def _invariants(S):
    left, right, two = principal_ideals(S)
    return [(S.rows[x][x] == x, element_order(S, x), bin(left[x]).count("1"),
             bin(right[x]).count("1"), bin(two[x]).count("1"))
            for x in range(S.order)]


def is_homomorphism(S: FiniteSemigroup, T: FiniteSemigroup, f) -> bool:
    return all(f[S.rows[x][y]] == T.rows[f[x]][f[y]]
               for x in range(S.order) for y in range(S.order))


def find_isomorphism(S: FiniteSemigroup, T: FiniteSemigroup):
    """A tuple f with f[x] the image of x, or None when S and T are not isomorphic."""
    n = S.order
    if n != T.order:
        return None
    a, b = _invariants(S), _invariants(T)
    if sorted(a) != sorted(b):
        return None
    cand = [[y for y in range(n) if b[y] == a[x]] for x in range(n)]
    order = sorted(range(n), key=lambda x: len(cand[x]))
    f = [-1] * n
    used = [False] * n
    rs, rt = S.rows, T.rows

    def consistent(x):
        y = f[x]
        for x2 in range(n):
            y2 = f[x2]
            if y2 < 0:
                continue
            for p, q in ((rs[x][x2], rt[y][y2]), (rs[x2][x], rt[y2][y])):
                if f[p] >= 0 and f[p] != q:
                    return False
        return True

    def rec(i):
        if i == n:
            return True
        x = order[i]
        for y in cand[x]:
            if used[y]:
                continue
            f[x] = y
            used[y] = True
            if consistent(x) and rec(i + 1):
                return True
            f[x] = -1
            used[y] = False
        return False

    if rec(0):
        return tuple(f)
    return None
