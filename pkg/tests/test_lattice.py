import itertools

import pytest
from hypothesis import given, settings, strategies as st

from orthosemi import (LatticeIso, TooLarge, all_lattice_isos, band_closure_check,
                       chain_semilattice, classify, construct, cyclic_group, generate,
                       induced_bijection, is_induced_by, lattice_iso, lattice_ops, left_zero,
                       rees_quotient_Mk, right_zero, sub_lattice, trivial)
from orthosemi.lattice import induction_witness

from oracles import all_subsemigroups, order_isomorphisms


def test_sub_lattice_examples():
    assert len(sub_lattice(left_zero(3))) == 8
    L = sub_lattice(cyclic_group(4))
    assert len(L) == 4
    assert [L.elements(i) for i in range(4)] == [(), (0,), (0, 2), (0, 1, 2, 3)]
    assert len(sub_lattice(chain_semilattice(3))) == 8
    assert len(sub_lattice(trivial())) == 2


def test_sub_lattice_bound():
    with pytest.raises(TooLarge):
        sub_lattice(rees_quotient_Mk(3))


def test_sub_lattice_matches_subset_scan(small_corpus):
    for S in small_corpus:
        L = sub_lattice(S)
        assert sorted(L.nodes) == all_subsemigroups(S.rows)


def test_covers_are_the_transitive_reduction(small_corpus):
    for S in small_corpus[:60]:
        L = sub_lattice(S)
        N = len(L)
        for i, j in itertools.product(range(N), repeat=2):
            strictly = i != j and L.nodes[i] & L.nodes[j] == L.nodes[i]
            assert L.leq(i, j) == (i == j or strictly)
            covers = strictly and not any(
                k not in (i, j) and L.nodes[i] & L.nodes[k] == L.nodes[i]
                and L.nodes[k] & L.nodes[j] == L.nodes[k] for k in range(N))
            assert (j in L.upper[i]) == covers


def test_lattice_ops_examples():
    M = rees_quotient_Mk(2)
    L = sub_lattice(M)
    for i in range(len(L)):
        assert L.meet(i, L.bottom) == L.bottom
        assert L.join(i, L.top) == L.top
    for a, b in itertools.product(range(M.order), repeat=2):
        _, j = lattice_ops(L, generate(M, {a}), generate(M, {b}))
        assert L.elements(j) == tuple(sorted(generate(M, {a, b})))


@settings(max_examples=50, deadline=None)
@given(st.sampled_from([left_zero(3), cyclic_group(6), rees_quotient_Mk(2),
                        construct("cyclic:2*rect:2,2"), construct("chain:2*left_zero:2")]),
       st.data())
def test_lattice_laws(S, data):
    L = sub_lattice(S)
    idx = st.integers(0, len(L) - 1)
    a, b, c = data.draw(idx), data.draw(idx), data.draw(idx)
    m, j = L.meet(a, b), L.join(a, b)
    assert L.leq(m, a) and L.leq(m, b) and L.leq(a, j) and L.leq(b, j)
    assert L.meet(a, L.join(a, b)) == a and L.join(a, L.meet(a, b)) == a
    assert L.meet(a, L.meet(b, c)) == L.meet(L.meet(a, b), c)
    assert L.join(a, L.join(b, c)) == L.join(L.join(a, b), c)
    assert m == L.meet(b, a) and j == L.join(b, a)


def test_boolean_lattices():
    for n in range(1, 5):
        Ls = [sub_lattice(f(n)) for f in (left_zero, right_zero, chain_semilattice)]
        assert all(len(L) == 2 ** n for L in Ls)
        for A, B in itertools.combinations(Ls, 2):
            assert lattice_iso(A, B) is not None


def test_lattice_iso_examples():
    iso = lattice_iso(sub_lattice(left_zero(3)), sub_lattice(chain_semilattice(3)))
    assert iso is not None and iso.is_valid()
    assert lattice_iso(sub_lattice(cyclic_group(2)), sub_lattice(chain_semilattice(2))) is None
    L = sub_lattice(rees_quotient_Mk(2))
    assert lattice_iso(L, L).mapping == tuple(range(len(L)))


def test_all_lattice_isos_examples():
    def count(S):
        L = sub_lattice(S)
        return len(list(all_lattice_isos(L, L)))
    assert count(trivial()) == 1
    assert count(left_zero(2)) == 2
    assert count(left_zero(3)) == 6


def test_lattice_iso_agrees_with_order_scan(small_corpus):
    """Exhaustive cross-check against a plain order-preserving bijection scan."""
    lats = [sub_lattice(S) for S in small_corpus]
    lats = [L for L in lats if len(L) <= 10]
    for L1, L2 in itertools.product(lats, repeat=2):
        if len(L1) != len(L2):
            continue
        want = set(order_isomorphisms(L1, L2))
        got = {f.mapping for f in all_lattice_isos(L1, L2)}
        assert got == want
        assert (lattice_iso(L1, L2) is not None) == bool(want)


def test_lattice_iso_ignores_subsemigroup_sizes():
    # both lattices are 3-chains, but the tops have 3 and 2 elements
    iso = lattice_iso(sub_lattice(cyclic_group(3)), sub_lattice(cyclic_group(2)))
    assert iso is not None and iso.is_valid()
    assert len(iso.source.elements(2)) == 3 and len(iso.target.elements(iso(2))) == 2


def test_invalid_iso_detected():
    L = sub_lattice(left_zero(2))
    bad = LatticeIso(L, L, (0, 3, 2, 1))
    assert not bad.is_valid()


def test_induced_bijection_examples():
    iso = lattice_iso(sub_lattice(left_zero(2)), sub_lattice(chain_semilattice(2)))
    ind = induced_bijection(iso)
    assert ind.present and ind.induces and is_induced_by(iso, ind.phi)
    L = sub_lattice(rees_quotient_Mk(2))
    ind = induced_bijection(lattice_iso(L, L))
    assert ind.phi == {x: x for x in range(5)}
    L4 = sub_lattice(cyclic_group(4))
    ind = induced_bijection(lattice_iso(L4, L4))
    assert not ind.present and "generators" in ind.diagnostic


def test_is_induced_by_rejects_perturbed_map():
    iso = lattice_iso(sub_lattice(left_zero(3)), sub_lattice(chain_semilattice(3)))
    phi = {0: 0, 1: 1, 2: 2}
    assert is_induced_by(iso, phi)
    swapped = {0: 1, 1: 0, 2: 2}
    assert not is_induced_by(iso, swapped)
    w = induction_witness(iso, swapped)
    assert w is not None and iso.source.elements(w)


def test_induced_bijections_on_bands(small_corpus):
    bands = [S for S in small_corpus if classify(S).is_band and S.order <= 3]
    for S, T in itertools.product(bands, repeat=2):
        for iso in all_lattice_isos(sub_lattice(S), sub_lattice(T)):
            ind = induced_bijection(iso)
            if ind.induces:
                assert sorted(ind.phi.values()) == list(range(T.order))
                assert all(T.mul(y, y) == y for y in ind.phi.values())


def test_band_closure_small(cache_dir):
    from orthosemi import corpus_up_to
    r = band_closure_check(corpus_up_to(3, "iso_or_anti", cache_dir))
    assert r.passed and r.size == 1 + 4 + 18
    r = band_closure_check([left_zero(2), chain_semilattice(2)])
    assert r.pairs == ((0, 1),) and r.band_pairs == 1


def test_band_closure_thread_independent(cache_dir):
    from orthosemi import corpus_up_to
    sgs = corpus_up_to(3, "iso_or_anti", cache_dir)
    assert band_closure_check(sgs, threads=1) == band_closure_check(sgs, threads=4)
