"""Subsemigroup lattices, lattice isomorphisms and when they come from element maps."""
# %%
from orthosemi import (band_closure_check, chain_semilattice, classify, corpus_up_to,
                       cyclic_group, induced_bijection, lattice_iso, left_zero, sub_lattice)
from orthosemi.io import lattice_to_dot

# %% every subset of a left zero semigroup is closed, so Sub is Boolean
L = sub_lattice(left_zero(3))
print(L, L.signature[0])
print(lattice_to_dot(L))

# %% a left zero semigroup and a chain have isomorphic lattices
iso = lattice_iso(L, sub_lattice(chain_semilattice(3)))
print(iso.mapping, iso.is_valid())
print(induced_bijection(iso))

# %% groups rarely give element maps: <1> in Z4 has two generators
L4 = sub_lattice(cyclic_group(4))
print(induced_bijection(lattice_iso(L4, L4)).diagnostic)

# %% sweep: anything lattice isomorphic to a band is a band
sgs = corpus_up_to(4, "iso_or_anti")
r = band_closure_check(sgs, threads=4)
print(f"{r.size} semigroups, {len(r.pairs)} isomorphic pairs, violations {r.violations}")
band = [classify(S).is_band for S in sgs]
i, j = next((i, j) for i, j in r.pairs if band[i])
print(sgs[i].rows, "~", sgs[j].rows, "both bands:", band[i] and band[j])
