"""Ideals, kernels, the rectangular-group decomposition, band components and the
nongroup D-class check."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import (KernelNotCompletelySimple, NotABand, NotAnInverse,
                      NotNongroup, NotOrthodox, SemigroupError)
from .congruence import CongruencePartition, gamma, is_congruence, quotient
from .constructions import direct_product
from .green import green
from .iso import find_isomorphism
from .properties import classify, inverses, is_group_element
from .semigroup import FiniteSemigroup, generate


def is_ideal(S: FiniteSemigroup, subset) -> bool:
    """Two-sided ideal test; the empty set counts as an ideal."""
    s = set(subset)
    rows = S.rows
    return all(rows[x][y] in s and rows[y][x] in s for x in s for y in range(S.order))


def kernel(S: FiniteSemigroup) -> frozenset:
    """The minimal two-sided ideal, i.e. the bottom J-class."""
    rows = S.rows
    # the product of all elements lies in the minimal ideal
    p = 0
    for x in range(1, S.order):
        p = rows[p][x]
    return frozenset(green(S).class_of("J", p))


@dataclass(frozen=True)
class KernelDecomposition:
    """K = kernel(S) written as H x E_K.

    ``group`` and ``band`` are relabeled copies of the H-class and of E_K;
    ``group_ids`` and ``band_ids`` give their original ids in S. ``witness``
    maps each k in K to ``(i, j)`` meaning ``group_ids[i]``, ``band_ids[j]``.
    """
    kernel: tuple
    group: FiniteSemigroup
    group_ids: tuple
    band: FiniteSemigroup
    band_ids: tuple
    witness: dict
    quotient_iso: tuple = field(default=())


def kernel_decomposition(S: FiniteSemigroup) -> KernelDecomposition:
    """Split the kernel of an orthodox S as (H-class group) x (rectangular band).

    The witness sends k to (e k e, k^0) where e is a fixed idempotent of K and
    k^0 is the identity of H_k; it is checked to be a bijective homomorphism.
    Also checks that K/gamma_K and the kernel of S/gamma are isomorphic to H.
    """
    if not classify(S).is_orthodox:
        raise NotOrthodox("kernel decomposition needs an orthodox semigroup")
    rows = S.rows
    K = sorted(kernel(S))
    KS, kids = S.restrict(K)
    if not classify(KS).is_completely_simple or not all(is_group_element(S, k) for k in K):
        raise KernelNotCompletelySimple("kernel is not a union of groups")
    E = sorted(e for e in K if rows[e][e] == e)
    e = E[0]
    H = sorted(green(S).class_of("H", e))
    group, gids = S.restrict(H)
    band, bids = S.restrict(E)
    if not classify(band).is_rectangular_band:
        raise SemigroupError("idempotents of the kernel do not form a rectangular band")

    def identity_of_h_class(k):
        for f in green(S).class_of("H", k):
            if rows[f][f] == f:
                return f
        raise KernelNotCompletelySimple(f"H-class of {k} has no idempotent")

    gi = {x: i for i, x in enumerate(gids)}
    bi = {x: i for i, x in enumerate(bids)}
    witness = {k: (gi[rows[rows[e][k]][e]], bi[identity_of_h_class(k)]) for k in K}
    if len(set(witness.values())) != len(K) or len(K) != len(H) * len(E):
        raise SemigroupError("kernel witness is not a bijection onto H x E_K")
    for x in K:
        for y in K:
            (g1, b1), (g2, b2) = witness[x], witness[y]
            g = gi[rows[gids[g1]][gids[g2]]]
            b = bi[rows[bids[b1]][bids[b2]]]
            if witness[rows[x][y]] != (g, b):
                raise SemigroupError(f"kernel witness is not multiplicative at ({x}, {y})")

    gK = gamma(KS, verify=False)
    iso = find_isomorphism(quotient(KS, gK), group)
    if iso is None:
        raise SemigroupError("K/gamma is not isomorphic to H")
    SG = quotient(S, gamma(S, verify=False))
    kq, _ = SG.restrict(kernel(SG))
    if find_isomorphism(kq, group) is None:
        raise SemigroupError("kernel of S/gamma is not isomorphic to H")
    return KernelDecomposition(tuple(K), group, gids, band, bids, witness, iso)


def product_of_decomposition(d: KernelDecomposition) -> FiniteSemigroup:
    """H x E_K as a table; element (i, j) has id ``i*|E_K| + j``."""
    return direct_product(d.group, d.band)


@dataclass(frozen=True)
class BandComponents:
    structure: FiniteSemigroup
    component_of: tuple
    components: tuple
    component_ids: tuple


def band_components(S: FiniteSemigroup) -> BandComponents:
    """Semilattice decomposition of a band into rectangular bands (its D-classes)."""
    if not classify(S).is_band:
        raise NotABand("semilattice decomposition needs a band")
    rows = S.rows
    D = CongruencePartition(green(S).D)
    if not is_congruence(S, D):
        raise SemigroupError("D is not a congruence on this band")
    Y = quotient(S, D)
    if not classify(Y).is_semilattice:
        raise SemigroupError("S/D is not a semilattice")
    lab = D.labels
    comps, ids = [], []
    for c in D.classes:
        B, old = S.restrict(c)
        if not classify(B).is_rectangular_band:
            raise SemigroupError(f"component {c} is not a rectangular band")
        comps.append(B)
        ids.append(old)
    for a, ca in enumerate(D.classes):
        for b, cb in enumerate(D.classes):
            target = Y.rows[a][b]
            if any(lab[rows[x][y]] != target for x in ca for y in cb):
                raise SemigroupError(f"E_{a} E_{b} is not inside E_{target}")
    return BandComponents(Y, lab, tuple(comps), tuple(ids))


@dataclass(frozen=True)
class ShadowReport:
    passed: bool
    generated: frozenset
    quad: frozenset
    dclass: frozenset
    complement_is_ideal: bool
    detail: str = ""


def monogenic_shadow_check(S: FiniteSemigroup, a: int, b: int) -> ShadowReport:
    """For orthodox S, nongroup a and b in V(a): inside T = <a, b>, check that
    {a, b, ab, ba} is a D-class of T and that T minus it is an ideal of T."""
    if not classify(S).is_orthodox:
        raise NotOrthodox("the check applies to orthodox semigroups")
    if is_group_element(S, a):
        raise NotNongroup(f"{a} lies in a subgroup")
    if b not in inverses(S, a):
        raise NotAnInverse(f"{b} is not an inverse of {a}")
    rows = S.rows
    T = generate(S, [a, b])
    TS, old = S.restrict(T)
    new = {x: i for i, x in enumerate(old)}
    quad = frozenset({a, b, rows[a][b], rows[b][a]})
    dclass = frozenset(old[i] for i in green(TS).class_of("D", new[a]))
    rest = T - quad
    ideal = is_ideal(TS, [new[x] for x in rest])
    passed = dclass == quad and ideal
    detail = "" if passed else (
        f"D-class of a in <a,b> is {sorted(dclass)}, quad is {sorted(quad)}, "
        f"complement ideal: {ideal}")
    return ShadowReport(passed, T, quad, dclass, ideal, detail)
