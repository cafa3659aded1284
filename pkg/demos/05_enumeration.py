"""Small semigroups up to isomorphism, canonical forms, and sweeps over the corpus."""
# %%
import time

from orthosemi import (canonical_form, classify, corpus, enumerate_semigroups, inverses,
                       iso_test, left_zero, monogenic_shadow_check, nongroup_elements,
                       orthodox_corpus, right_zero)

# %% the search is exhaustive; order 5 takes seconds once compiled
for n in range(1, 5):
    t0 = time.perf_counter()
    a = len(enumerate_semigroups(n, "iso"))
    b = len(enumerate_semigroups(n, "iso_or_anti"))
    print(n, a, b, f"{time.perf_counter() - t0:.2f} s")

# %% canonical forms decide isomorphism; duals catch anti-isomorphism
print(canonical_form(left_zero(2)))
print(iso_test(left_zero(2), right_zero(2)))

# %% the corpus cache keeps one file per (order, mode)
print(len(corpus(5, "iso")), "semigroups of order 5")

# %% orthodox semigroups of order <= 5 and their nongroup elements
orth = orthodox_corpus(5)
print(len(orth), "orthodox")
for S in orth:
    for a in sorted(nongroup_elements(S)):
        for b in sorted(inverses(S, a)):
            rep = monogenic_shadow_check(S, a, b)
            print(S.rows, a, b, sorted(rep.quad), rep.passed)
print(sum(classify(S).is_inverse for S in orth), "of them inverse")
