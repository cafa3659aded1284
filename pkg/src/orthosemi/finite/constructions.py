"""Named small semigroups.

Element orderings (all reproducible):

* ``left_zero(n)``, ``right_zero(n)``, ``null_semigroup(n)``: ids ``0..n-1``;
  in the null semigroup ``0`` is the zero.
* ``chain_semilattice(n)``: ``0`` is the bottom, product is ``min``.
* ``cyclic_group(n)``: ``x`` is the residue ``x mod n`` under addition.
* ``rectangular_band(p, q)``: ``(i, l)`` has id ``i*q + l``.
* ``direct_product(A, B)``: ``(a, b)`` has id ``a*|B| + b``.
"""
from __future__ import annotations

import re

from ..errors import InvalidEntry, SizeZero
from .semigroup import FiniteSemigroup


def _positive(*ns):
    for n in ns:
        if n < 1:
            raise SizeZero(f"size must be positive, got {n}")


def trivial() -> FiniteSemigroup:
    return FiniteSemigroup([[0]], check=False)


def left_zero(n: int) -> FiniteSemigroup:
    _positive(n)
    return FiniteSemigroup([[x] * n for x in range(n)], check=False)


def right_zero(n: int) -> FiniteSemigroup:
    _positive(n)
    return FiniteSemigroup([list(range(n)) for _ in range(n)], check=False)


def chain_semilattice(n: int) -> FiniteSemigroup:
    _positive(n)
    return FiniteSemigroup([[min(x, y) for y in range(n)] for x in range(n)], check=False)


def null_semigroup(n: int) -> FiniteSemigroup:
    _positive(n)
    return FiniteSemigroup([[0] * n for _ in range(n)], check=False)


def cyclic_group(n: int) -> FiniteSemigroup:
    _positive(n)
    return FiniteSemigroup([[(x + y) % n for y in range(n)] for x in range(n)],
                           names=[f"g{x}" for x in range(n)], check=False)


def rectangular_band(p: int, q: int) -> FiniteSemigroup:
    _positive(p, q)
    n = p * q
    table = [[(x // q) * q + y % q for y in range(n)] for x in range(n)]
    names = [f"({i},{l})" for i in range(p) for l in range(q)]
    return FiniteSemigroup(table, names, check=False)


def direct_product(A: FiniteSemigroup, B: FiniteSemigroup) -> FiniteSemigroup:
    nb = B.order
    n = A.order * nb
    ra, rb = A.rows, B.rows
    table = [[ra[x // nb][y // nb] * nb + rb[x % nb][y % nb] for y in range(n)]
             for x in range(n)]
    names = [f"({A.name(a)},{B.name(b)})" for a in range(A.order) for b in range(nb)]
    return FiniteSemigroup(table, names, check=False)


CONSTRUCTORS = {
    "trivial": (trivial, 0),
    "left_zero": (left_zero, 1),
    "right_zero": (right_zero, 1),
    "chain_semilattice": (chain_semilattice, 1),
    "null_semigroup": (null_semigroup, 1),
    "cyclic_group": (cyclic_group, 1),
    "rectangular_band": (rectangular_band, 2),
}
ALIASES = {"chain": "chain_semilattice", "null": "null_semigroup",
           "cyclic": "cyclic_group", "rect": "rectangular_band"}

_ATOM = re.compile(r"^\s*([a-z_]+)\s*(?::\s*([0-9,\s]*))?\s*$")


def construct(spec) -> FiniteSemigroup:
    """Build a named semigroup.

    ``spec`` is either a string such as ``"rectangular_band:2,3"`` (factors of
    a direct product are joined with ``*``, e.g.
    ``"cyclic_group:2*rectangular_band:2,2"``), or a tuple
    ``("direct_product", specA, specB)`` / ``(name, *args)``.
    """
    if isinstance(spec, FiniteSemigroup):
        return spec
    if isinstance(spec, tuple):
        name, *args = spec
        if name == "direct_product":
            a, b = args
            return direct_product(construct(a), construct(b))
        return _atom(name, [int(a) for a in args])
    parts = str(spec).split("*")
    result = None
    for part in parts:
        m = _ATOM.match(part)
        if not m:
            raise InvalidEntry(f"cannot parse semigroup spec {part!r}")
        args = [int(a) for a in (m.group(2) or "").replace(" ", "").split(",") if a]
        s = _atom(m.group(1), args)
        result = s if result is None else direct_product(result, s)
    return result


def _atom(name, args):
    name = ALIASES.get(name, name)
    if name not in CONSTRUCTORS:
        raise InvalidEntry(f"unknown constructor {name!r}")
    fn, arity = CONSTRUCTORS[name]
    if len(args) != arity:
        raise InvalidEntry(f"{name} takes {arity} integer argument(s), got {len(args)}")
    return fn(*args)
