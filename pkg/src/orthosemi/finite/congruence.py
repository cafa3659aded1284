"""Congruences on finite semigroups: checks, generation, exhaustive scan, quotients, gamma."""
from __future__ import annotations

from dataclasses import dataclass

from ..errors import NotACongruence, NotOrthodox, SemigroupError, TooLarge
from .properties import all_inverses, classify
from .semigroup import FiniteSemigroup

CONGRUENCE_BOUND = 8


@dataclass(frozen=True)
class CongruencePartition:
    """An equivalence on ``0..n-1`` stored as sorted classes."""
    classes: tuple

    @classmethod
    def from_labels(cls, labels) -> "CongruencePartition":
        groups = {}
        for x, k in enumerate(labels):
            groups.setdefault(k, []).append(x)
        return cls(tuple(sorted(tuple(g) for g in groups.values())))

    @classmethod
    def from_classes(cls, classes) -> "CongruencePartition":
        return cls(tuple(sorted(tuple(sorted(c)) for c in classes if c)))

    @classmethod
    def identity(cls, n: int) -> "CongruencePartition":
        return cls(tuple((x,) for x in range(n)))

    @classmethod
    def universal(cls, n: int) -> "CongruencePartition":
        return cls((tuple(range(n)),))

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.classes)

    @property
    def labels(self) -> tuple:
        """Class index of each element; this is the natural map onto the quotient."""
        lab = [0] * self.size
        for i, c in enumerate(self.classes):
            for x in c:
                lab[x] = i
        return tuple(lab)

    def related(self, x: int, y: int) -> bool:
        lab = self.labels
        return lab[x] == lab[y]

    def refines(self, other: "CongruencePartition") -> bool:
        """True when every class of self sits inside a class of other."""
        lab = other.labels
        return all(len({lab[x] for x in c}) == 1 for c in self.classes)

    def __len__(self):
        return len(self.classes)


def congruence_witness(S: FiniteSemigroup, rho: CongruencePartition):
    """A quadruple (x, x', y, y') with x rho x', y rho y', xy not rho x'y'; or None."""
    lab = rho.labels
    rows = S.rows
    for c in rho.classes:
        x = c[0]
        for x2 in c[1:]:
            for y in range(S.order):
                if lab[rows[x][y]] != lab[rows[x2][y]]:
                    return (x, x2, y, y)
                if lab[rows[y][x]] != lab[rows[y][x2]]:
                    return (y, y, x, x2)
    return None


def is_congruence(S: FiniteSemigroup, rho: CongruencePartition) -> bool:
    return congruence_witness(S, rho) is None


def quotient(S: FiniteSemigroup, rho: CongruencePartition) -> FiniteSemigroup:
    """S/rho; class ``i`` is ``rho.classes[i]`` and ``rho.labels`` is the natural map."""
    w = congruence_witness(S, rho)
    if w is not None:
        raise NotACongruence(w)
    lab = rho.labels
    rows = S.rows
    table = [[lab[rows[a[0]][b[0]]] for b in rho.classes] for a in rho.classes]
    names = None
    if S.names is not None:
        names = ["{" + ",".join(S.names[x] for x in c) + "}" for c in rho.classes]
    return FiniteSemigroup(table, names, check=False)


class _UnionFind:
    def __init__(self, n, labels=None):
        self.parent = list(range(n))
        if labels is not None:
            first = {}
            for x, k in enumerate(labels):
                self.parent[x] = first.setdefault(k, x)

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        a, b = self.find(a), self.find(b)
        if a == b:
            return False
        self.parent[max(a, b)] = min(a, b)
        return True

    def labels(self):
        return tuple(self.find(x) for x in range(len(self.parent)))


def generated_congruence(S: FiniteSemigroup, pairs, start: CongruencePartition | None = None):
    """Least congruence containing ``pairs`` (and ``start``, which must be a congruence)."""
    n, rows = S.order, S.rows
    uf = _UnionFind(n, start.labels if start is not None else None)
    queue = []
    for a, b in pairs:
        if uf.union(a, b):
            queue.append((a, b))
    while queue:
        a, b = queue.pop()
        ra, rb = rows[a], rows[b]
        for s in range(n):
            for u, v in ((ra[s], rb[s]), (rows[s][a], rows[s][b])):
                if uf.union(u, v):
                    queue.append((u, v))
    return CongruencePartition.from_labels(uf.labels())


def _equivalence_join(p, q, n):
    uf = _UnionFind(n, p.labels)
    for c in q.classes:
        for y in c[1:]:
            uf.union(c[0], y)
    return CongruencePartition.from_labels(uf.labels())


def congruences(S: FiniteSemigroup, bound: int = CONGRUENCE_BOUND) -> list:
    """Every congruence on S, sorted by number of classes (descending) then classes.

    Each congruence is a join of principal ones, and the equivalence join of two
    congruences is again a congruence, so closing the principal congruences
    under joins reaches all of them.
    """
    n = S.order
    if n > bound:
        raise TooLarge(f"congruence scan limited to order {bound}, got {n}")
    principal = {generated_congruence(S, [(a, b)]) for a in range(n) for b in range(a)}
    found = {CongruencePartition.identity(n)}
    frontier = list(found)
    while frontier:
        nxt = []
        for c in frontier:
            for p in principal:
                j = _equivalence_join(c, p, n)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda c: (-len(c), c.classes))


def gamma(S: FiniteSemigroup, verify: bool = True, bound: int = CONGRUENCE_BOUND) -> CongruencePartition:
    """The least inverse-semigroup congruence: x ~ y iff V(x) = V(y).

    With ``verify`` the result is checked to be a congruence with inverse
    quotient, and (for order <= bound) to lie below every congruence whose
    quotient is inverse.
    """
    if not classify(S).is_orthodox:
        raise NotOrthodox("gamma is only defined here for orthodox semigroups")
    V = all_inverses(S)
    rho = CongruencePartition.from_labels(V)
    if verify:
        w = congruence_witness(S, rho)
        if w is not None:
            raise NotACongruence(w)
        if not classify(quotient(S, rho)).is_inverse:
            raise SemigroupError("quotient by gamma is not inverse")
        if S.order <= bound:
            for c in congruences(S, bound):
                if classify(quotient(S, c)).is_inverse and not rho.refines(c):
                    raise SemigroupError(f"gamma is not below inverse congruence {c.classes}")
    return rho
