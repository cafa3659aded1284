import itertools

import pytest
from hypothesis import given, settings, strategies as st

from orthosemi import (CongruencePartition, InvalidEntry, KernelNotCompletelySimple, NotABand,
                       NotACongruence, NotAnInverse, NotAssociative, NotNongroup, NotOrthodox,
                       SizeZero, TooLarge, band_components, chain_semilattice, classify,
                       congruence_witness, congruences, construct, cyclic_group, direct_product,
                       element_order, find_isomorphism, from_table, gamma, generate, green,
                       inverses, is_group_element, is_ideal, kernel, kernel_decomposition,
                       left_zero, monogenic_shadow_check, nongroup_elements, null_semigroup,
                       product_of_decomposition, quotient, rectangular_band, rees_quotient_Mk,
                       right_zero, trivial)
from orthosemi.finite.congruence import generated_congruence

from oracles import brute_congruences, green_naive, normalize


# -- tables and constructors ----------------------------------------------------------

def test_from_table_accepts_left_zero_and_trivial():
    assert from_table(2, [[0, 0], [1, 1]]).order == 2
    assert from_table(1, [[0]]).order == 1


def test_from_table_reports_failing_triple():
    t = [[0, 1], [0, 0]]
    with pytest.raises(NotAssociative) as exc:
        from_table(2, t)
    a, b, c = exc.value.triple
    assert t[t[a][b]][c] != t[a][t[b][c]]
    assert exc.value.triple == min(x for x in itertools.product(range(2), repeat=3)
                                   if t[t[x[0]][x[1]]][x[2]] != t[x[0]][t[x[1]][x[2]]])
    assert t[t[1][1]][1] != t[1][t[1][1]]


@pytest.mark.parametrize("order, table", [
    (2, [[0, 2], [1, 1]]),
    (2, [[0, 0]]),
    (2, [[0, 0], [1]]),
    (2, [[0, -1], [1, 1]]),
])
def test_from_table_rejects_bad_entries(order, table):
    with pytest.raises(InvalidEntry):
        from_table(order, table)


def test_from_table_rejects_empty():
    with pytest.raises(SizeZero):
        from_table(0, [])
    with pytest.raises(SizeZero):
        left_zero(0)


def test_table_is_read_only():
    S = left_zero(2)
    with pytest.raises(ValueError):
        S.table[0, 0] = 1


def test_constructors():
    R = rectangular_band(2, 2)
    for x, y in itertools.product(range(4), repeat=2):
        (i, _), (_, mu) = divmod(x, 2), divmod(y, 2)
        assert R.mul(x, y) == i * 2 + mu
    P = direct_product(cyclic_group(2), rectangular_band(2, 2))
    assert P.order == 8
    assert P.mul(1 * 4 + 1, 1 * 4 + 2) == 0 * 4 + 0
    C = chain_semilattice(3)
    assert C.rows == tuple(tuple(min(a, b) for b in range(3)) for a in range(3))
    assert construct("cyclic_group:2*rectangular_band:2,2") == P
    assert construct(("direct_product", "cyclic:2", ("rect", 2, 2))) == P
    assert construct("chain:3") == C
    assert null_semigroup(3).rows[2] == (0, 0, 0)


@pytest.mark.parametrize("spec", ["nope:2", "left_zero", "left_zero:1,2", "left zero:2!"])
def test_construct_rejects_bad_specs(spec):
    with pytest.raises(InvalidEntry):
        construct(spec)


def test_generate():
    assert generate(left_zero(3), {0}) == {0}
    assert generate(cyclic_group(4), {1}) == {0, 1, 2, 3}
    assert generate(chain_semilattice(3), {0, 2}) == {0, 2}


# -- classify, inverses, Green --------------------------------------------------------

def test_classify_examples():
    r = classify(rectangular_band(2, 2))
    assert r.is_band and r.is_orthodox and r.is_completely_simple and not r.is_inverse
    g = classify(cyclic_group(3))
    assert g.is_group and g.is_inverse and not g.is_combinatorial
    m = classify(rees_quotient_Mk(2))
    assert m.is_inverse and not m.is_band and m.is_combinatorial


def test_inverses_examples():
    assert inverses(rectangular_band(2, 2), 1) == {0, 1, 2, 3}
    assert inverses(cyclic_group(4), 1) == {3}
    assert inverses(null_semigroup(2), 1) == frozenset()


def test_element_order():
    assert element_order(cyclic_group(4), 1) == 4
    assert element_order(null_semigroup(3), 2) == 2
    assert element_order(left_zero(2), 1) == 1


def test_green_examples():
    g = green(left_zero(3))
    assert g.L == ((0, 1, 2),) and g.D == ((0, 1, 2),)
    assert g.R == g.H == ((0,), (1,), (2,))
    gm = green(rees_quotient_Mk(2))
    assert gm.D == ((0,), (1, 2, 3, 4))
    gz = green(cyclic_group(5))
    assert all(getattr(gz, rel) == ((0, 1, 2, 3, 4),) for rel in "LRHDJ")


def test_green_matches_naive_definitions(small_corpus):
    for S in small_corpus:
        g = green(S)
        L, R, J = green_naive(S.rows)
        assert normalize(g.labels("L")) == L
        assert normalize(g.labels("R")) == R
        assert normalize(g.labels("J")) == J
        assert g.D == g.J


def test_green_containments(small_corpus):
    for S in small_corpus:
        g = green(S)
        for rel in "LR":
            assert CongruencePartition(g.H).refines(CongruencePartition(getattr(g, rel)))
            assert CongruencePartition(getattr(g, rel)).refines(CongruencePartition(g.D))
        hl = g.labels("H")
        for x in range(S.order):
            for y in range(S.order):
                both = g.related("L", x, y) and g.related("R", x, y)
                assert both == (hl[x] == hl[y])


def test_inverses_match_definition(small_corpus):
    for S in small_corpus:
        r = S.rows
        for x in range(S.order):
            want = {y for y in range(S.order) if r[r[x][y]][x] == x and r[r[y][x]][y] == y}
            assert inverses(S, x) == want


def test_property_implications(small_corpus):
    for S in small_corpus:
        r = classify(S)
        assert not r.is_inverse or r.is_orthodox
        assert not r.is_orthodox or r.is_regular
        assert not r.is_band or r.is_torsion_free
        assert r.is_torsion_free == r.is_band
        assert r.is_combinatorial == all(len(h) == 1 for h in green(S).H)
        assert not r.is_group or r.is_inverse


def test_orthodoxy_equivalences(cache_dir):
    """For regular S: E closed <=> V(e) inside E for idempotents <=> V(b)V(a) inside V(ab)."""
    from orthosemi import corpus_up_to
    for S in corpus_up_to(5, "iso", cache_dir):
        if not classify(S).is_regular:
            continue
        rows, E = S.rows, S.idempotents
        closed = all(rows[e][f] in E for e in E for f in E)
        v_of_e = all(inverses(S, e) <= E for e in E)
        V = [inverses(S, x) for x in range(S.order)]
        product_rule = all(rows[y][x] in V[rows[a][b]]
                           for a in range(S.order) for b in range(S.order)
                           for y in V[b] for x in V[a])
        assert closed == v_of_e == product_rule == classify(S).is_orthodox


def test_group_elements():
    M = rees_quotient_Mk(2)
    assert nongroup_elements(M) == {2, 3}
    assert is_group_element(M, 0) and is_group_element(M, 1)
    assert nongroup_elements(cyclic_group(3)) == frozenset()
    assert nongroup_elements(null_semigroup(2)) == {1}


# -- kernel and ideals ----------------------------------------------------------------

def test_kernel_examples():
    assert kernel(chain_semilattice(3)) == {0}
    assert kernel(left_zero(3)) == {0, 1, 2}
    assert kernel(rees_quotient_Mk(2)) == {0}


def test_kernel_is_least_ideal(small_corpus):
    for S in small_corpus:
        K = kernel(S)
        assert is_ideal(S, K)
        for mask in range(1, 1 << S.order):
            I = {x for x in range(S.order) if mask >> x & 1}
            if is_ideal(S, I):
                assert K <= I


# -- congruences, quotients, gamma ----------------------------------------------------

def test_congruence_examples():
    assert len(congruences(chain_semilattice(2))) == 2
    assert len(congruences(cyclic_group(4))) == 3
    assert len(congruences(trivial())) == 1


def test_congruences_match_partition_scan(small_corpus):
    for S in small_corpus:
        got = {normalize(c.labels) for c in congruences(S)}
        assert got == brute_congruences(S.rows)


def test_congruence_bound():
    with pytest.raises(TooLarge):
        congruences(left_zero(9))


def test_quotient_examples():
    R = rectangular_band(2, 2)
    assert quotient(R, gamma(R)).order == 1
    M = rees_quotient_Mk(2)
    assert quotient(M, CongruencePartition.universal(5)).order == 1
    S = construct("cyclic:2*rect:2,2")
    assert find_isomorphism(quotient(S, CongruencePartition.identity(8)), S) is not None


def test_quotient_rejects_non_congruence():
    S = chain_semilattice(3)
    bad = CongruencePartition.from_classes([(0, 2), (1,)])
    assert congruence_witness(S, bad) is not None
    with pytest.raises(NotACongruence):
        quotient(S, bad)


def test_generated_congruence_is_least():
    S = chain_semilattice(3)
    rho = generated_congruence(S, [(1, 2)])
    assert rho.classes == ((0,), (1, 2))
    for c in congruences(S):
        if c.related(1, 2):
            assert rho.refines(c)


def test_gamma_examples():
    assert gamma(rectangular_band(2, 2)).classes == ((0, 1, 2, 3),)
    M = rees_quotient_Mk(3)
    assert gamma(M, verify=False) == CongruencePartition.identity(M.order)
    S = direct_product(cyclic_group(2), rectangular_band(2, 2))
    g = gamma(S)
    assert g.classes == ((0, 1, 2, 3), (4, 5, 6, 7))
    assert find_isomorphism(quotient(S, g), cyclic_group(2)) is not None


def test_gamma_identity_on_inverse(small_corpus):
    for S in small_corpus:
        if classify(S).is_inverse:
            assert gamma(S) == CongruencePartition.identity(S.order)


def test_gamma_needs_orthodox():
    with pytest.raises(NotOrthodox):
        gamma(null_semigroup(2))


# -- structure -------------------------------------------------------------------------

def test_kernel_decomposition_examples():
    S = direct_product(cyclic_group(2), rectangular_band(2, 2))
    d = kernel_decomposition(S)
    assert find_isomorphism(d.group, cyclic_group(2)) is not None
    assert classify(d.band).is_rectangular_band and d.band.order == 4
    assert find_isomorphism(product_of_decomposition(d), S) is not None
    d = kernel_decomposition(cyclic_group(3))
    assert d.group.order == 3 and d.band.order == 1
    d = kernel_decomposition(rees_quotient_Mk(2))
    assert d.kernel == (0,) and d.group.order == 1 and d.band.order == 1


def test_kernel_decomposition_errors():
    with pytest.raises(NotOrthodox):
        kernel_decomposition(null_semigroup(2))


def test_band_components_examples():
    b = band_components(chain_semilattice(3))
    assert b.structure.order == 3 and all(c.order == 1 for c in b.components)
    b = band_components(rectangular_band(2, 3))
    assert b.structure.order == 1 and b.components[0].order == 6
    b = band_components(direct_product(left_zero(2), chain_semilattice(2)))
    assert classify(b.structure).is_semilattice and b.structure.order == 2
    assert all(find_isomorphism(c, left_zero(2)) is not None for c in b.components)
    with pytest.raises(NotABand):
        band_components(cyclic_group(2))


def test_shadow_check_on_m2():
    M = rees_quotient_Mk(2)
    r = monogenic_shadow_check(M, 3, 2)
    assert r.passed and r.dclass == {1, 2, 3, 4} and r.generated - r.quad == {0}


def test_shadow_check_errors():
    with pytest.raises(NotNongroup):
        monogenic_shadow_check(left_zero(2), 0, 0)
    with pytest.raises(NotAnInverse):
        monogenic_shadow_check(rees_quotient_Mk(2), 3, 3)
    with pytest.raises(NotOrthodox):
        monogenic_shadow_check(null_semigroup(2), 1, 1)


# -- properties over random relabelings ------------------------------------------------

SMALL = [left_zero(3), right_zero(2), chain_semilattice(4), null_semigroup(3), cyclic_group(4),
         rectangular_band(2, 2), rees_quotient_Mk(2), construct("cyclic:2*left_zero:2")]


@st.composite
def relabeled(draw):
    S = draw(st.sampled_from(SMALL))
    perm = draw(st.permutations(range(S.order)))
    return S, list(perm)


@settings(max_examples=60, deadline=None)
@given(relabeled())
def test_relabeling_preserves_structure(pair):
    S, perm = pair
    T = S.relabel(perm)
    assert all(T.mul(perm[x], perm[y]) == perm[S.mul(x, y)]
               for x in range(S.order) for y in range(S.order))
    assert classify(S).flags() == classify(T).flags()
    assert sorted(map(len, green(S).D)) == sorted(map(len, green(T).D))
    assert kernel(T) == {perm[x] for x in kernel(S)}
    assert find_isomorphism(S, T) is not None
    assert len(congruences(S)) == len(congruences(T))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.sets(st.integers(0, 7), min_size=1, max_size=3))
def test_generate_is_least_closed_superset(S, X):
    X = {x % S.order for x in X}
    G = generate(S, X)
    assert X <= G and S.is_closed(G)
    for mask in range(1 << S.order):
        U = {x for x in range(S.order) if mask >> x & 1}
        if X <= U and S.is_closed(U):
            assert G <= U
