"""Green's relations of a finite semigroup, via principal ideals."""
from __future__ import annotations

from dataclasses import dataclass

from .semigroup import FiniteSemigroup


def _classes_from_keys(keys):
    groups = {}
    for x, k in enumerate(keys):
        groups.setdefault(k, []).append(x)
    return tuple(sorted(tuple(g) for g in groups.values()))


def _labels(classes, n):
    lab = [0] * n
    for i, c in enumerate(classes):
        for x in c:
            lab[x] = i
    return tuple(lab)


@dataclass(frozen=True)
class GreenData:
    """The L, R, H, D, J partitions; each a sorted tuple of sorted classes."""
    L: tuple
    R: tuple
    H: tuple
    D: tuple
    J: tuple

    def labels(self, rel: str) -> tuple:
        n = sum(len(c) for c in self.L)
        return _labels(getattr(self, rel), n)

    def class_of(self, rel: str, x: int) -> tuple:
        for c in getattr(self, rel):
            if x in c:
                return c
        raise KeyError(x)

    def related(self, rel: str, x: int, y: int) -> bool:
        return y in self.class_of(rel, x)


def principal_ideals(S: FiniteSemigroup):
    """Bitmasks of ``S^1 x``, ``x S^1`` and ``S^1 x S^1`` for every x."""
    n, rows = S.order, S.rows
    left, right, two = [], [], []
    for x in range(n):
        r = 1 << x
        l = 1 << x
        for y in range(n):
            r |= 1 << rows[x][y]
            l |= 1 << rows[y][x]
        left.append(l)
        right.append(r)
    for x in range(n):
        j = left[x] | right[x]
        for y in range(n):
            if left[x] >> y & 1:
                j |= right[y]
        two.append(j)
    return left, right, two


def green(S: FiniteSemigroup) -> GreenData:
    cached = S.__dict__.get("_green")
    if cached is None:
        cached = S.__dict__["_green"] = _green(S)
    return cached


def _green(S):
    n = S.order
    left, right, two = principal_ideals(S)
    L = _classes_from_keys(left)
    R = _classes_from_keys(right)
    H = _classes_from_keys(list(zip(left, right)))
    J = _classes_from_keys(two)

    # D = L o R: join of the two equivalences
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (L, R):
        for c in part:
            for y in c[1:]:
                a, b = find(c[0]), find(y)
                if a != b:
                    parent[max(a, b)] = min(a, b)
    D = _classes_from_keys([find(x) for x in range(n)])
    assert D == J, "D != J in a finite semigroup"
    return GreenData(L, R, H, D, J)
