"""Retract ideal extensions T u Q* determined by a partial homomorphism Q* -> T."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, NamedTuple

from ..errors import NotAssociative, NotPartialHom
from ..finite import FiniteSemigroup
from .bicyclic import BicyclicElt, bicyclic_mul
from .monogenic import C2Elt, c2_mul, c2_up_to_weight, mk_elements, rees_quotient_Mk
from .rho import RhoQuotient, RhoType, Fin, Inf, class_key

SYMBOLIC_BOUND = 3


class FiniteHandle:
    """A FiniteSemigroup seen as an extension base."""
    finite = True

    def __init__(self, S: FiniteSemigroup):
        self.S = S

    def mul(self, a, b):
        return self.S.rows[a][b]

    def sample(self, bound=None):
        return list(range(self.S.order))


class BicyclicSemigroup:
    finite = False

    def mul(self, a, b):
        return bicyclic_mul(a, b)

    def sample(self, bound=SYMBOLIC_BOUND):
        return [BicyclicElt(m, n) for m in range(bound + 1) for n in range(bound + 1)]

    def __repr__(self):
        return "BicyclicSemigroup()"


class IntegerGroup:
    """(Z, +)."""
    finite = False

    def mul(self, a, b):
        return a + b

    def sample(self, bound=SYMBOLIC_BOUND):
        return list(range(-bound, bound + 1))

    def __repr__(self):
        return "IntegerGroup()"


def as_handle(T):
    return FiniteHandle(T) if isinstance(T, FiniteSemigroup) else T


class ExtElt(NamedTuple):
    """``side`` is ``"T"`` or ``"Q"``; ``value`` an element of that side."""
    side: str
    value: object

    def __repr__(self):
        return f"{self.side}:{self.value!r}"


@dataclass(frozen=True)
class IdealExtensionSpec:
    T: object
    Q: FiniteSemigroup
    phi: dict
    zero: int = 0


class IdealExtension:
    def __init__(self, spec: IdealExtensionSpec):
        self.spec = spec
        self.T = as_handle(spec.T)
        self.Q = spec.Q
        self.zero = spec.zero
        self.phi = spec.phi

    @property
    def qstar(self):
        return [q for q in range(self.Q.order) if q != self.zero]

    def mul(self, a: ExtElt, b: ExtElt) -> ExtElt:
        T, phi = self.T, self.phi
        if a.side == "T" and b.side == "T":
            return ExtElt("T", T.mul(a.value, b.value))
        if a.side == "T":
            return ExtElt("T", T.mul(a.value, phi[b.value]))
        if b.side == "T":
            return ExtElt("T", T.mul(phi[a.value], b.value))
        ab = self.Q.rows[a.value][b.value]
        if ab == self.zero:
            return ExtElt("T", T.mul(phi[a.value], phi[b.value]))
        return ExtElt("Q", ab)

    def sample(self, bound=SYMBOLIC_BOUND) -> list:
        return [ExtElt("T", t) for t in self.T.sample(bound)] + [ExtElt("Q", q) for q in self.qstar]

    def associativity_failure(self, bound=SYMBOLIC_BOUND):
        elts = self.sample(bound)
        mul = self.mul
        for a, b, c in product(elts, repeat=3):
            left, right = mul(mul(a, b), c), mul(a, mul(b, c))
            if left != right:
                return (a, b, c), left, right
        return None

    def to_finite(self) -> tuple[FiniteSemigroup, list]:
        """Table on T (ids first, in T's order) followed by Q*; needs finite T."""
        if not self.T.finite:
            raise TypeError("extension of an infinite semigroup has no table")
        elts = self.sample()
        index = {e: i for i, e in enumerate(elts)}
        table = [[index[self.mul(a, b)] for b in elts] for a in elts]
        return FiniteSemigroup(table, [repr(e) for e in elts]), elts


def partial_hom_failure(T, Q: FiniteSemigroup, phi: dict, zero: int = 0):
    T = as_handle(T)
    for a in range(Q.order):
        for b in range(Q.order):
            if a == zero or b == zero:
                continue
            ab = Q.rows[a][b]
            if ab != zero and T.mul(phi[a], phi[b]) != phi[ab]:
                return (a, b)
    return None


def ideal_extension(spec: IdealExtensionSpec, bound: int = SYMBOLIC_BOUND) -> IdealExtension:
    """Build and verify the extension.

    Associativity is checked on every triple when T is finite and on every
    triple drawn from ``T.sample(bound)`` together with Q* otherwise.
    """
    missing = [q for q in range(spec.Q.order) if q != spec.zero and q not in spec.phi]
    if missing:
        raise KeyError(f"phi undefined on {missing}")
    bad = partial_hom_failure(spec.T, spec.Q, spec.phi, spec.zero)
    if bad is not None:
        raise NotPartialHom(bad)
    ext = IdealExtension(spec)
    fail = ext.associativity_failure(bound)
    if fail is not None:
        triple, left, right = fail
        raise NotAssociative(triple, left, right)
    return ext


def monogenic_extension(t: RhoType, bound: int = SYMBOLIC_BOUND) -> tuple[IdealExtension, list]:
    """The extension of the bicyclic semigroup (inf+/inf-) or of Z (omega) by
    M_k along theta/eta. Returns it with the id -> C2 element list of M_k."""
    t = t if isinstance(t, RhoType) else RhoType(*t)
    Q = rees_quotient_Mk(t.k)
    elts = mk_elements(t.k)
    T = IntegerGroup() if t.flavor == "omega" else BicyclicSemigroup()
    phi = {i: class_key(t.flavor, u) for i, u in enumerate(elts) if u is not None}
    return ideal_extension(IdealExtensionSpec(T, Q, phi), bound), elts


def extension_image(t: RhoType, index: dict, u: C2Elt) -> ExtElt:
    """Where u lands in the extension: Q* below weight k, else its key in T."""
    if u.weight < t.k:
        return ExtElt("Q", index[u])
    return ExtElt("T", class_key(t.flavor, u))


def compare_with_quotient(t: RhoType, W: int = 8, bound: int = SYMBOLIC_BOUND) -> list:
    """Check the extension against RhoQuotient on all pairs of weight <= W.

    For each pair (u, v): the class correspondence Fin(u) <-> Q:u and
    Inf(key) <-> T:key must carry the quotient product to the extension
    product, and the extension must be a homomorphic image of C2.
    Returns a list of mismatching pairs (empty on success).
    """
    ext, elts = monogenic_extension(t, bound)
    index = {u: i for i, u in enumerate(elts) if u is not None}
    R = RhoQuotient(t)

    def corresponding(c):
        if isinstance(c, Fin):
            return ExtElt("Q", index[c.u])
        return ExtElt("T", c.key)

    pool = c2_up_to_weight(W)
    img = {u: extension_image(t, index, u) for u in pool}
    cls = {u: R.class_of(u) for u in pool}
    bad = []
    for u in pool:
        for v in pool:
            e = ext.mul(img[u], img[v])
            uv = c2_mul(u, v)
            if e != extension_image(t, index, uv) or corresponding(R.mul(cls[u], cls[v])) != e:
                bad.append((u, v))
    return bad
