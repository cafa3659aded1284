"""Quotients of C2 by the three congruence families, rebuilt as ideal extensions."""
# %%
from orthosemi import (X, RhoType, all_rho_types, c2_up_to_weight, classify_monogenic,
                       compare_with_quotient, lr_values, order_evidence, power, rho_quotient)

# %% each type (k, flavor) identifies heavy elements by a key
t = RhoType(2, "inf+")
Q = rho_quotient(t)
for u in c2_up_to_weight(2)[:6]:
    print(u, "->", Q.class_of(u))

# %% the (l, r) invariants, found by bounded search
for t in all_rho_types(2):
    print(t, lr_values(t))

# %% what sits at the bottom of each quotient
for t in (RhoType(2, "omega"), RhoType(2, "inf-")):
    rep = classify_monogenic(t)
    print(t, rep.kernel, rep.dclass_sizes, rep.passed)

# %% x has infinite order in every quotient: the first powers never repeat
Q = rho_quotient(RhoType(1, "omega"))
x = Q.class_of(X)
print([power(x, k, Q.mul) for k in range(1, 6)])
print(order_evidence(x, 12, Q.mul, Q.is_idempotent).passed)

# %% the same quotients, built as ideal extensions of Z or the bicyclic semigroup by M_k
for t in all_rho_types(2):
    print(t, "mismatches:", len(compare_with_quotient(t, 6)))
