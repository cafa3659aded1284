"""The bicyclic semigroup: pair arithmetic and the four-relation presentation."""
from __future__ import annotations

from itertools import product
from typing import NamedTuple


class BicyclicElt(NamedTuple):
    m: int
    n: int

    def __repr__(self):
        return f"({self.m},{self.n})"


def bicyclic_mul(u, v) -> BicyclicElt:
    """(m,n)(p,q) = (m+p-r, n+q-r) with r = min(n, p)."""
    m, n = u
    p, q = v
    r = n if n < p else p
    return BicyclicElt(m + p - r, n + q - r)


def is_bicyclic_idempotent(u) -> bool:
    return u[0] == u[1]


# b^m a^n  <->  (m, n)
GEN_A = BicyclicElt(0, 1)
GEN_B = BicyclicElt(1, 0)

RELATIONS = (("aba", "a"), ("bab", "b"), ("aab", "a"), ("abb", "b"))


def rewrite(word: str) -> str:
    """Apply the length-reducing relations until none matches.

    Irreducible words are ``"ab"`` (the identity) and ``b^m a^n``.
    """
    changed = True
    while changed:
        changed = False
        for lhs, rhs in RELATIONS:
            i = word.find(lhs)
            if i >= 0:
                word = word[:i] + rhs + word[i + len(lhs):]
                changed = True
                break
    return word


def normal_form_pair(nf: str) -> BicyclicElt:
    """Read ``b^m a^n`` (or ``ab``, standing for ``a^0 = b^0``) as a pair."""
    if nf == "ab":
        return BicyclicElt(0, 0)
    m = len(nf) - len(nf.lstrip("b"))
    rest = nf[m:]
    if rest != "a" * len(rest):
        raise ValueError(f"{nf!r} is not a normal form")
    return BicyclicElt(m, len(rest))


def eval_word(word: str) -> BicyclicElt:
    """Product of the generator pairs a = (0,1), b = (1,0), left to right."""
    gens = {"a": GEN_A, "b": GEN_B}
    acc = gens[word[0]]
    for c in word[1:]:
        acc = bicyclic_mul(acc, gens[c])
    return acc


def presentation_mismatches(max_len: int = 8) -> tuple[int, list]:
    """Compare rewriting against pair arithmetic on every word of length <= max_len.

    Returns the number of words checked and the list of disagreeing words.
    """
    checked, bad = 0, []
    for length in range(1, max_len + 1):
        for letters in product("ab", repeat=length):
            w = "".join(letters)
            checked += 1
            if normal_form_pair(rewrite(w)) != eval_word(w):
                bad.append(w)
    return checked, bad
