"""The three congruence families on C2 and their quotients.

For ``t = (k, flavor)`` two elements are related when they are equal, or both
have weight >= k and agree on ``m-n`` (omega), on ``(m,n)`` (inf+) or on
``(p,q)`` (inf-).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from ..errors import InvalidEntry
from ..finite import green
from .bicyclic import BicyclicElt
from .monogenic import (C2Elt, X, c2_mul, c2_of_weight, c2_up_to_weight,
                        is_c2_idempotent, rees_quotient_Mk)

FLAVORS = ("omega", "inf+", "inf-")
_FLAVOR_ALIASES = {"ω": "omega", "w": "omega", "∞+": "inf+", "∞−": "inf-", "∞-": "inf-",
                   "+": "inf+", "-": "inf-"}


@dataclass(frozen=True)
class RhoType:
    k: int
    flavor: str

    def __post_init__(self):
        flavor = _FLAVOR_ALIASES.get(self.flavor, self.flavor)
        if flavor not in FLAVORS:
            raise InvalidEntry(f"unknown flavor {self.flavor!r}; expected one of {FLAVORS}")
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidEntry(f"k must be a positive integer, got {self.k!r}")
        object.__setattr__(self, "flavor", flavor)

    def __str__(self):
        return f"({self.k},{self.flavor})"


def all_rho_types(max_k: int) -> list:
    return [RhoType(k, f) for f in FLAVORS for k in range(1, max_k + 1)]


def class_key(flavor: str, u: C2Elt):
    if flavor == "omega":
        return u.m - u.n
    if flavor == "inf+":
        return BicyclicElt(u.m, u.n)
    return BicyclicElt(u.p, u.q)


def rho_related(t: RhoType, u: C2Elt, v: C2Elt) -> bool:
    if u == v:
        return True
    if u.weight < t.k or v.weight < t.k:
        return False
    if t.flavor == "omega":
        return u.m - u.n == v.m - v.n
    if t.flavor == "inf+":
        return (u.m, u.n) == (v.m, v.n)
    return (u.p, u.q) == (v.p, v.q)


class Fin(NamedTuple):
    """Class of an element of weight < k (a singleton class)."""
    u: C2Elt

    def __repr__(self):
        return f"Fin{self.u!r}"


class Inf(NamedTuple):
    """Class of the elements of weight >= k with the given key."""
    key: object

    def __repr__(self):
        return f"Inf({self.key!r})"


class RhoQuotient:
    """C2 / rho_t with classes named by canonical keys.

    Products are taken on C2 representatives and mapped back to keys, so
    this route shares nothing with the ideal-extension description.
    """

    def __init__(self, t: RhoType):
        self.t = t

    def __repr__(self):
        return f"RhoQuotient{self.t}"

    def class_of(self, u: C2Elt):
        if u.weight < self.t.k:
            return Fin(u)
        return Inf(class_key(self.t.flavor, u))

    def representative(self, c) -> C2Elt:
        if isinstance(c, Fin):
            return c.u
        k = self.t.k
        if self.t.flavor == "omega":
            d = c.key
            m, n = max(d, 0), max(-d, 0)
            return C2Elt(m, n, k + n, k + m)
        a, b = c.key
        # pad the free pair so the weight reaches k
        s = max(k, a + b)
        if self.t.flavor == "inf+":
            return C2Elt(a, b, s, a + s - b)
        return C2Elt(s, a + s - b, a, b)

    def mul(self, c1, c2):
        return self.class_of(c2_mul(self.representative(c1), self.representative(c2)))

    def is_idempotent(self, c) -> bool:
        return self.mul(c, c) == c

    def elements(self, W: int) -> list:
        """Images of all C2 elements of weight <= W, deduplicated, in first-seen order."""
        seen = {}
        for u in c2_up_to_weight(W):
            seen.setdefault(self.class_of(u), None)
        return list(seen)

    def fin_elements(self) -> list:
        return [Fin(u) for u in c2_up_to_weight(self.t.k - 1)]


def rho_quotient(t: RhoType) -> RhoQuotient:
    return RhoQuotient(t)


LR_BOUND_FACTOR = 3


def lr_values(t: RhoType, bound: int | None = None) -> tuple:
    """(l, r) searched up to ``bound`` (default 3k); ``math.inf`` means no
    witness below the bound, which is evidence, not proof."""
    B = LR_BOUND_FACTOR * t.k if bound is None else bound
    l = r = math.inf
    for n in range(1, B + 1):
        if rho_related(t, C2Elt(n, n, 0, 0), C2Elt(n + 1, n + 1, 0, 0)):
            l = n
            break
    for n in range(1, B + 1):
        if rho_related(t, C2Elt(0, 0, n, n), C2Elt(0, 0, n + 1, n + 1)):
            r = n
            break
    return l, r


def expected_lr(t: RhoType) -> tuple:
    if t.flavor == "omega":
        return t.k, t.k
    if t.flavor == "inf+":
        return math.inf, t.k
    return t.k, math.inf


@dataclass(frozen=True)
class MonogenicReport:
    label: str
    k: int | None
    kernel: str
    dclass_sizes: tuple
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)


def classify_monogenic(t: RhoType | str = "free", horizon: int = 4) -> MonogenicReport:
    """Structure of C2 (``"free"``) or of C2/rho_t.

    The D-chain sizes are read off C2 by weight census and cross-checked
    against Green's D-classes of the finite Rees quotient; for quotients the
    kernel kind is cross-checked against the idempotents and the action of
    the generator on the quotient.
    """
    checks = []
    if t == "free":
        sizes = tuple(sum(1 for _ in c2_of_weight(m)) for m in range(1, horizon + 1))
        M = rees_quotient_Mk(horizon + 1)
        dsizes = sorted(len(c) for c in green(M).D if 0 not in c)
        checks.append(("census matches D-classes of M_k", sorted(sizes) == dsizes))
        checks.append(("sizes are (m+1)^2", sizes == tuple((m + 1) ** 2 for m in range(1, horizon + 1))))
        return MonogenicReport("free", None, "none (infinite chain)", sizes, tuple(checks))

    if isinstance(t, (tuple, list)):
        t = RhoType(*t)
    k = t.k
    Q = RhoQuotient(t)
    sizes = tuple(sum(1 for _ in c2_of_weight(m)) for m in range(1, k))
    M = rees_quotient_Mk(k)
    dsizes = sorted(len(c) for c in green(M).D if 0 not in c)
    checks.append(("census matches D-classes of M_k", sorted(sizes) == dsizes))
    xk = Q.class_of(X)
    for _ in range(k - 1):
        xk = Q.mul(xk, Q.class_of(X))
    checks.append(("x^k lies in the kernel", isinstance(xk, Inf)))
    inf_idem = [c for c in Q.elements(3 * k + 3) if isinstance(c, Inf) and Q.is_idempotent(c)]
    if t.flavor == "omega":
        kernel = "infinite cyclic group"
        checks.append(("exactly one idempotent in the kernel", len(inf_idem) == 1))
        checks.append(("kernel keys add", Q.mul(Inf(2), Inf(-5)) == Inf(-3)))
    else:
        kernel = "bicyclic"
        chain = sorted(c.key for c in inf_idem)
        checks.append(("kernel idempotents form a chain of length > 1", len(chain) > 1
                       and all(a[0] == a[1] for a in chain)))
        checks.append(("kernel keys multiply bicyclically",
                       Q.mul(Inf(BicyclicElt(2, 3)), Inf(BicyclicElt(1, 4))) == Inf(BicyclicElt(2, 6))))
    return MonogenicReport(str(t), k, kernel, sizes, tuple(checks))
