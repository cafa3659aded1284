"""The bicyclic semigroup and the free monogenic inverse semigroup in exact arithmetic."""
# %%
from orthosemi import (X, X_INV, C3Word, bicyclic_mul, c2_inv, c2_mul, c2_of_weight,
                       c2_to_c3, c3_to_c2, eval_word, green, is_c2_idempotent,
                       presentation_mismatches, rees_quotient_Mk, rewrite, word_eval)

# %% pairs (m, n) stand for b^m a^n
print(bicyclic_mul((2, 3), (1, 4)))
print(rewrite("abbaab"), eval_word("abbaab"))
count, bad = presentation_mismatches(8)
print(f"{count} words checked, {len(bad)} disagree with the pair model")

# %% C2: pairs of bicyclic pairs, multiplied componentwise
print("x x^-1 =", c2_mul(X, X_INV))
u = word_eval("x x x⁻¹ x⁻¹ x⁻¹ x")
print(u, "weight", u.weight, "inverse", c2_inv(u))

# %% weight layers have (m+1)^2 elements, m+1 of them idempotent
for m in range(1, 5):
    layer = list(c2_of_weight(m))
    print(m, len(layer), sum(map(is_c2_idempotent, layer)))

# %% words x^-p x^q x^-r with p, r <= q are a second normal form
w = C3Word(1, 3, 2)
print(w.tokens(), "->", c3_to_c2(w), "== word value:", c3_to_c2(w) == word_eval(w.tokens()))
print(c2_to_c3(u))

# %% cutting off weight >= k gives the finite Rees quotients M_k
for k in range(1, 6):
    M = rees_quotient_Mk(k)
    print(k, M.order, sorted(len(c) for c in green(M).D))
