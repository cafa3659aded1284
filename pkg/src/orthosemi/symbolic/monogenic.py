"""The free monogenic inverse semigroup in two models.

C2: pairs ``((m,n),(p,q))`` of bicyclic elements with ``m+p = n+q > 0`` under the
componentwise product. C3: words ``x^-p x^q x^-r`` with ``q > 0`` and
``0 <= p, r <= q``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple

from ..errors import EmptyWord, InvalidEntry, NotCanonical
from ..finite import FiniteSemigroup
from .bicyclic import bicyclic_mul


class _C2(NamedTuple):
    m: int
    n: int
    p: int
    q: int


class C2Elt(_C2):
    """``((m,n),(p,q))``; construction enforces ``m+p == n+q > 0``."""
    __slots__ = ()

    def __new__(cls, m, n, p, q):
        if min(m, n, p, q) < 0 or m + p != n + q or m + p == 0:
            raise InvalidEntry(f"(({m},{n}),({p},{q})) is not an element of C2")
        return super().__new__(cls, m, n, p, q)

    @classmethod
    def from_pairs(cls, left, right) -> "C2Elt":
        return cls(left[0], left[1], right[0], right[1])

    @property
    def left(self):
        return (self.m, self.n)

    @property
    def right(self):
        return (self.p, self.q)

    @property
    def weight(self) -> int:
        return self.m + self.p

    def __repr__(self):
        return f"(({self.m},{self.n}),({self.p},{self.q}))"


X = C2Elt(1, 0, 0, 1)
X_INV = C2Elt(0, 1, 1, 0)


def c2_mul(u: C2Elt, v: C2Elt) -> C2Elt:
    a = bicyclic_mul((u.m, u.n), (v.m, v.n))
    b = bicyclic_mul((u.p, u.q), (v.p, v.q))
    # the constructor re-checks m+p = n+q > 0
    return C2Elt(a[0], a[1], b[0], b[1])


def c2_inv(u: C2Elt) -> C2Elt:
    v = C2Elt(u.n, u.m, u.q, u.p)
    assert c2_mul(c2_mul(u, v), u) == u and c2_mul(c2_mul(v, u), v) == v
    return v


def is_c2_idempotent(u: C2Elt) -> bool:
    return u.m == u.n and u.p == u.q


def c2_attrs(u: C2Elt) -> tuple[int, bool, int]:
    """(weight, is_idempotent, size of the D-class of u)."""
    w = u.weight
    return w, is_c2_idempotent(u), (w + 1) ** 2


def c2_of_weight(w: int):
    """All elements of weight w (there are (w+1)^2), lexicographic in (m, n)."""
    for m in range(w + 1):
        for n in range(w + 1):
            yield C2Elt(m, n, w - m, w - n)


def c2_up_to_weight(W: int) -> list:
    return [u for w in range(1, W + 1) for u in c2_of_weight(w)]


_TOKEN = re.compile(r"\s*(x(?:⁻¹|\^-1|\^\{-1\}|-1)?|X)")


def parse_word(word) -> list[int]:
    """Tokens of a word as +1 (x) / -1 (x inverse).

    Accepts strings such as ``"x x⁻¹ x"``, ``"x^-1 x"`` or ``"xXx"`` (``X`` is
    the inverse), or any iterable of +1/-1.
    """
    if not isinstance(word, str):
        return [1 if t in (1, "x") else -1 for t in word]
    out = []
    pos = 0
    word = word.strip()
    while pos < len(word):
        m = _TOKEN.match(word, pos)
        if not m:
            raise InvalidEntry(f"cannot parse {word[pos:]!r}")
        out.append(1 if m.group(1) == "x" else -1)
        pos = m.end()
    return out


def word_eval(word) -> C2Elt:
    """Left-to-right product of generator values x and x^-1 in C2."""
    tokens = parse_word(word)
    if not tokens:
        raise EmptyWord("the empty word has no value in a semigroup")
    acc = X if tokens[0] == 1 else X_INV
    for t in tokens[1:]:
        acc = c2_mul(acc, X if t == 1 else X_INV)
    return acc


class C3Word(NamedTuple):
    p: int
    q: int
    r: int

    def check(self) -> "C3Word":
        p, q, r = self
        if q <= 0 or not (0 <= p <= q) or not (0 <= r <= q):
            raise NotCanonical(f"x^-{p} x^{q} x^-{r} violates q > 0, 0 <= p, r <= q")
        return self

    @property
    def is_idempotent(self) -> bool:
        return self.p + self.r == self.q

    def tokens(self) -> list[int]:
        return [-1] * self.p + [1] * self.q + [-1] * self.r


def c3_to_c2(w: C3Word) -> C2Elt:
    p, q, r = C3Word(*w).check()
    return C2Elt(q - p, r, p, q - r)


def c2_to_c3(u: C2Elt) -> C3Word:
    return C3Word(u.p, u.m + u.p, u.n).check()


def c3_words(max_q: int):
    for q in range(1, max_q + 1):
        for p in range(q + 1):
            for r in range(q + 1):
                yield C3Word(p, q, r)


def power(elt, k: int, mul):
    """elt^k by repeated squaring under ``mul``."""
    if k < 1:
        raise ValueError("powers start at 1")
    result = None
    base = elt
    while k:
        if k & 1:
            result = base if result is None else mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result


@dataclass(frozen=True)
class OrderEvidence:
    element: object
    horizon: int
    distinct: bool
    idempotent_power: int | None

    @property
    def passed(self) -> bool:
        return self.distinct and self.idempotent_power is None


def order_evidence(elt, K: int, mul, is_idempotent) -> OrderEvidence:
    """Check that s, s^2, ..., s^K are pairwise distinct and none is idempotent.

    Bounded evidence of infinite order, not a proof.
    """
    powers = [elt]
    for _ in range(K - 1):
        powers.append(mul(powers[-1], elt))
    idem = next((i + 1 for i, s in enumerate(powers) if is_idempotent(s)), None)
    return OrderEvidence(elt, K, len(set(powers)) == K, idem)


def mk_elements(k: int) -> list:
    """Elements of M_k in id order: ``None`` (the zero) then C2 elements of
    weight 1..k-1 as listed by ``c2_of_weight``."""
    if k < 1:
        raise InvalidEntry("k must be positive")
    return [None] + c2_up_to_weight(k - 1)


def rees_quotient_Mk(k: int) -> FiniteSemigroup:
    """M_k = C2 / I_k with I_k the elements of weight >= k collapsed to 0 (id 0)."""
    elts = mk_elements(k)
    index = {u: i for i, u in enumerate(elts)}
    table = []
    for u in elts:
        row = []
        for v in elts:
            if u is None or v is None:
                row.append(0)
                continue
            uv = c2_mul(u, v)
            row.append(index.get(uv, 0))
        table.append(row)
    names = ["0"] + [repr(u) for u in elts[1:]]
    return FiniteSemigroup(table, names)
