"""Subsemigroup lattices, lattice isomorphisms and induced element maps.

Subsets are bitmasks over element ids; lattice nodes are indices into
``SubsemigroupLattice.nodes``.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .errors import TooLarge
from .finite import FiniteSemigroup, classify, mask_to_set, set_to_mask

SUBLATTICE_BOUND = 12
ISO_NODE_BOUND = 2 ** 14


def popcount(m: int) -> int:
    return bin(m).count("1")


class SubsemigroupLattice:
    """Sub(S) including the empty subsemigroup, ordered by inclusion.

    Nodes are sorted by (size, mask): node 0 is the empty set and the last
    node is S. ``lower[i]``/``upper[i]`` are cover lists; ``below[i]`` and
    ``above[i]`` are bitmasks over node indices of the principal ideal and
    filter (both including ``i``).
    """

    def __init__(self, S: FiniteSemigroup, nodes, upper_covers):
        self.S = S
        self.nodes = tuple(nodes)
        self.index = {m: i for i, m in enumerate(self.nodes)}
        N = len(self.nodes)
        self.upper = tuple(tuple(sorted(c)) for c in upper_covers)
        lower = [[] for _ in range(N)]
        for i, ups in enumerate(self.upper):
            for j in ups:
                lower[j].append(i)
        self.lower = tuple(tuple(sorted(c)) for c in lower)

        below = [0] * N
        for i in range(N):      # lower covers come earlier in size order
            b = 1 << i
            for j in self.lower[i]:
                b |= below[j]
            below[i] = b
        above = [0] * N
        for i in reversed(range(N)):
            a = 1 << i
            for j in self.upper[i]:
                a |= above[j]
            above[i] = a
        self.below = tuple(below)
        self.above = tuple(above)

        height = [0] * N
        for i in range(N):
            if self.lower[i]:
                height[i] = 1 + max(height[j] for j in self.lower[i])
        depth = [0] * N
        for i in reversed(range(N)):
            if self.upper[i]:
                depth[i] = 1 + max(depth[j] for j in self.upper[i])
        self.height = tuple(height)
        self.depth = tuple(depth)
        self.sizes = tuple(popcount(m) for m in self.nodes)

    def __len__(self):
        return len(self.nodes)

    def __repr__(self):
        return f"SubsemigroupLattice(order={self.S.order}, nodes={len(self.nodes)})"

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.nodes) - 1

    def node_of(self, subset) -> int:
        m = subset if isinstance(subset, int) else set_to_mask(subset)
        return self.index[m]

    def elements(self, i: int) -> tuple:
        return tuple(sorted(mask_to_set(self.nodes[i])))

    def leq(self, i: int, j: int) -> bool:
        return bool(self.below[j] >> i & 1)

    def meet(self, i: int, j: int) -> int:
        return self.index[self.nodes[i] & self.nodes[j]]

    def join(self, i: int, j: int) -> int:
        return self.index[self.S.closure_mask(self.nodes[i] | self.nodes[j])]

    def invariant(self, i: int) -> tuple:
        """Lattice-theoretic data of a node (never the subsemigroup's cardinality)."""
        return (self.height[i], self.depth[i], popcount(self.below[i]), popcount(self.above[i]),
                len(self.lower[i]), len(self.upper[i]))

    @property
    def signature(self) -> tuple:
        return (len(self.nodes), tuple(sorted(self.invariant(i) for i in range(len(self.nodes)))))

    def cover_pairs(self) -> list:
        return [(i, j) for i in range(len(self.nodes)) for j in self.upper[i]]


def sub_lattice(S: FiniteSemigroup, bound: int = SUBLATTICE_BOUND) -> SubsemigroupLattice:
    """Enumerate Sub(S) by closing each known subsemigroup with one more element.

    Every upper cover of U has the form <U, x>, so the minimal members of
    {<U, x> : x not in U} are exactly the covers of U.
    """
    if S.order > bound:
        raise TooLarge(f"subsemigroup lattices limited to order {bound}, got {S.order}")
    cached = S.__dict__.get("_sublattice")
    if cached is not None:
        return cached
    n = S.order
    seen = {0: None}
    queue = [0]
    covers = {}
    while queue:
        U = queue.pop()
        ext = set()
        for x in range(n):
            if not U >> x & 1:
                ext.add(S.closure_mask(U | 1 << x, base=U))
        covers[U] = [V for V in ext if not any(W != V and W & V == W for W in ext)]
        for V in ext:
            if V not in seen:
                seen[V] = None
                queue.append(V)
    nodes = sorted(seen, key=lambda m: (popcount(m), m))
    index = {m: i for i, m in enumerate(nodes)}
    upper = [[index[V] for V in covers[m]] for m in nodes]
    L = SubsemigroupLattice(S, nodes, upper)
    S.__dict__["_sublattice"] = L
    return L


def lattice_ops(L: SubsemigroupLattice, A, B) -> tuple[int, int]:
    """(meet, join) of two nodes; subsets are accepted and looked up."""
    a = A if isinstance(A, int) else L.node_of(A)
    b = B if isinstance(B, int) else L.node_of(B)
    return L.meet(a, b), L.join(a, b)


@dataclass(frozen=True)
class LatticeIso:
    source: SubsemigroupLattice = field(repr=False)
    target: SubsemigroupLattice = field(repr=False)
    mapping: tuple

    def __call__(self, i: int) -> int:
        return self.mapping[i]

    def image(self, subset) -> frozenset:
        i = self.source.node_of(subset)
        return mask_to_set(self.target.nodes[self.mapping[i]])

    def pairs(self) -> list:
        return list(enumerate(self.mapping))

    def is_valid(self) -> bool:
        """Bijective and carries the cover relation onto the cover relation."""
        f = self.mapping
        if sorted(f) != list(range(len(self.target))) or len(f) != len(self.source):
            return False
        mapped = {(f[i], f[j]) for i, j in self.source.cover_pairs()}
        return mapped == set(self.target.cover_pairs())


def _refined_colors(L1, L2):
    """Jointly refined node colors; equal colors are necessary for matching."""
    lats = (L1, L2)
    colors = [[L.invariant(i) for i in range(len(L))] for L in lats]
    n_classes = -1
    while True:
        table = {}
        new = []
        for L, col in zip(lats, colors):
            sig = [(col[i], tuple(sorted(col[j] for j in L.lower[i])),
                    tuple(sorted(col[j] for j in L.upper[i]))) for i in range(len(L))]
            new.append(sig)
            for s in sig:
                table.setdefault(s, None)
        ranks = {s: r for r, s in enumerate(sorted(table))}
        colors = [[ranks[s] for s in sig] for sig in new]
        if len(ranks) == n_classes:
            return colors
        n_classes = len(ranks)


def _iso_search(L1, L2) -> Iterator[tuple]:
    N = len(L1)
    if N != len(L2) or L1.signature != L2.signature:
        return
    c1, c2 = _refined_colors(L1, L2)
    if sorted(c1) != sorted(c2):
        return
    by_color = {}
    for j in range(N):
        by_color.setdefault(c2[j], []).append(j)
    # height order puts every lower cover before its upper covers
    order = sorted(range(N), key=lambda i: (L1.height[i], len(by_color[c1[i]]), i))
    f = [-1] * N
    used = [False] * N
    lower2 = [frozenset(l) for l in L2.lower]

    def rec(pos):
        if pos == N:
            yield tuple(f)
            return
        u = order[pos]
        want = None
        for v in by_color[c1[u]]:
            if used[v]:
                continue
            if want is None:
                want = frozenset(f[w] for w in L1.lower[u])
            if want != lower2[v]:
                continue
            f[u] = v
            used[v] = True
            yield from rec(pos + 1)
            f[u] = -1
            used[v] = False

    yield from rec(0)


def lattice_iso(L1: SubsemigroupLattice, L2: SubsemigroupLattice) -> LatticeIso | None:
    """First isomorphism found (deterministic), or None when there is none."""
    for f in _iso_search(L1, L2):
        return LatticeIso(L1, L2, f)
    return None


def all_lattice_isos(L1: SubsemigroupLattice, L2: SubsemigroupLattice,
                     bound: int = ISO_NODE_BOUND) -> Iterator[LatticeIso]:
    if max(len(L1), len(L2)) > bound:
        raise TooLarge(f"exhaustive isomorphism listing limited to {bound} nodes")
    for f in _iso_search(L1, L2):
        yield LatticeIso(L1, L2, f)


@dataclass(frozen=True)
class InducedBijection:
    phi: dict | None
    induces: bool
    diagnostic: str = ""

    @property
    def present(self) -> bool:
        return self.phi is not None


def induction_witness(iso: LatticeIso, phi) -> int | None:
    """First node U with U Phi != U phi, or None when phi induces the iso."""
    L1, L2 = iso.source, iso.target
    for i, m in enumerate(L1.nodes):
        image = set_to_mask(phi[x] for x in mask_to_set(m))
        if image != L2.nodes[iso.mapping[i]]:
            return i
    return None


def is_induced_by(iso: LatticeIso, phi) -> bool:
    return induction_witness(iso, phi) is None


def induced_bijection(iso: LatticeIso, S: FiniteSemigroup | None = None,
                      T: FiniteSemigroup | None = None) -> InducedBijection:
    """phi(x) := the unique y with <x>Phi = <y>.

    Absent (``phi is None``) when some <x>Phi has no generator or more than one.
    """
    L1, L2 = iso.source, iso.target
    S = S or L1.S
    T = T or L2.S
    generators = {}
    for y in range(T.order):
        generators.setdefault(L2.index[T.closure_mask(1 << y)], []).append(y)
    phi = {}
    for x in range(S.order):
        node = iso.mapping[L1.index[S.closure_mask(1 << x)]]
        gens = generators.get(node, [])
        if len(gens) != 1:
            what = "is not monogenic" if not gens else f"has generators {gens}"
            return InducedBijection(None, False,
                                    f"<{x}>Phi = {list(L2.elements(node))} {what}")
        phi[x] = gens[0]
    if len(set(phi.values())) != S.order or S.order != T.order:
        return InducedBijection(phi, False, "phi is not a bijection")
    w = induction_witness(iso, phi)
    if w is not None:
        return InducedBijection(phi, False, f"U = {list(L1.elements(w))} is not mapped elementwise")
    return InducedBijection(phi, True)


@dataclass(frozen=True)
class BandClosureReport:
    size: int
    pairs: tuple
    violations: tuple
    band_pairs: int

    @property
    def passed(self) -> bool:
        return not self.violations


def band_closure_check(corpus, threads: int = 1) -> BandClosureReport:
    """Find every lattice-isomorphic pair in ``corpus`` and flag any pair where
    one side is a band and the other is not.

    ``pairs`` lists index pairs ``(i, j)``, ``i < j``, in sorted order whatever
    the thread count.
    """
    corpus = list(corpus)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        lattices = list(pool.map(sub_lattice, corpus))
    buckets = {}
    for i, L in enumerate(lattices):
        buckets.setdefault(L.signature, []).append(i)
    candidates = [(i, j) for group in buckets.values()
                  for a, i in enumerate(group) for j in group[a + 1:]]

    def test(pair):
        i, j = pair
        return lattice_iso(lattices[i], lattices[j]) is not None

    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        hits = list(pool.map(test, candidates))
    pairs = sorted(p for p, hit in zip(candidates, hits) if hit)
    band = [classify(S).is_band for S in corpus]
    violations = tuple((i, j) for i, j in pairs if band[i] != band[j])
    band_pairs = sum(1 for i, j in pairs if band[i] and band[j])
    return BandClosureReport(len(corpus), tuple(pairs), violations, band_pairs)
