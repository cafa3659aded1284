"""Finite semigroups as multiplication tables: Green's relations, orthodoxy,
the least inverse congruence and the kernel split."""
# %%
from orthosemi import (classify, construct, find_isomorphism, gamma, green, inverses,
                       kernel_decomposition, quotient, rees_quotient_Mk)

# %% a group times a rectangular band: orthodox, not inverse
S = construct("cyclic_group:2*rectangular_band:2,2")
print(S, S.names)
r = classify(S)
print("orthodox", r.is_orthodox, "inverse", r.is_inverse, "band", r.is_band)

# the inverses of (g, e) are all (g^-1, f) with f in the band
print("V(0) =", sorted(inverses(S, 0)))

# %% Green's relations
g = green(S)
print("H-classes", g.H)
print("D-classes", g.D)

# %% gamma glues elements with the same inverse set; the quotient is the group
rho = gamma(S)
Q = quotient(S, rho)
print("gamma classes", rho.classes)
print("S/gamma is Z2:", find_isomorphism(Q, construct("cyclic:2")) is not None)

# %% the kernel is a group times a rectangular band
d = kernel_decomposition(S)
print("H order", d.group.order, "E_K order", d.band.order)
for k in d.kernel[:3]:
    print(k, "->", d.witness[k])

# %% an inverse example: M_2 is the five-element Brandt semigroup
M = rees_quotient_Mk(2)
print(classify(M).flags())
print("gamma on an inverse semigroup is the identity:", gamma(M).classes)
