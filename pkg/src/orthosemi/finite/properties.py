"""Element-level and global predicates: inverses, orders, regularity, orthodoxy."""
from __future__ import annotations

from dataclasses import dataclass

from .green import green
from .semigroup import FiniteSemigroup, generate


def inverses(S: FiniteSemigroup, x: int) -> frozenset:
    """V_S(x): all y with xyx = x and yxy = y."""
    rows = S.rows
    rx = rows[x]
    return frozenset(y for y in range(S.order)
                     if rows[rx[y]][x] == x and rows[rows[y][x]][y] == y)


def all_inverses(S: FiniteSemigroup) -> tuple:
    cached = S.__dict__.get("_inverses")
    if cached is None:
        cached = S.__dict__["_inverses"] = tuple(inverses(S, x) for x in range(S.order))
    return cached


def element_order(S: FiniteSemigroup, x: int) -> int:
    """o(x) = |<x>|; always finite here."""
    return len(generate(S, [x]))


def is_group_element(S: FiniteSemigroup, x: int) -> bool:
    """x lies in a subgroup iff its H-class contains an idempotent."""
    return any(S.rows[h][h] == h for h in green(S).class_of("H", x))


def nongroup_elements(S: FiniteSemigroup) -> frozenset:
    E = S.idempotents
    out = set()
    for h in green(S).H:
        if not any(e in E for e in h):
            out.update(h)
    return frozenset(out)


def idempotents_closed(S: FiniteSemigroup) -> bool:
    E = S.idempotents
    return all(S.rows[e][f] in E for e in E for f in E)


@dataclass(frozen=True)
class PropertyReport:
    is_band: bool
    is_semilattice: bool
    is_rectangular_band: bool
    is_regular: bool
    is_inverse: bool
    is_orthodox: bool
    is_group: bool
    is_completely_simple: bool
    is_combinatorial: bool
    is_torsion_free: bool
    orders: tuple

    def flags(self) -> dict:
        return {k: v for k, v in self.__dict__.items() if k.startswith("is_")}


def classify(S: FiniteSemigroup) -> PropertyReport:
    cached = S.__dict__.get("_report")
    if cached is not None:
        return cached
    n, rows = S.order, S.rows
    E = S.idempotents
    V = all_inverses(S)
    g = green(S)
    band = len(E) == n
    commutative = all(rows[x][y] == rows[y][x] for x in range(n) for y in range(x))
    rect = band and all(rows[rows[x][y]][x] == x for x in range(n) for y in range(n))
    regular = all(V[x] for x in range(n))
    inverse = regular and all(len(V[x]) == 1 for x in range(n))
    orthodox = regular and idempotents_closed(S)
    orders = tuple(element_order(S, x) for x in range(n))
    # finite: every order is finite, so torsion-free means no nonidempotents
    torsion_free = all(x in E for x in range(n) if orders[x] < float("inf"))
    report = PropertyReport(
        is_band=band,
        is_semilattice=band and commutative,
        is_rectangular_band=rect,
        is_regular=regular,
        is_inverse=inverse,
        is_orthodox=orthodox,
        is_group=regular and len(E) == 1,
        is_completely_simple=len(g.J) == 1,
        is_combinatorial=all(len(h) == 1 for h in g.H),
        is_torsion_free=torsion_free,
        orders=orders,
    )
    S.__dict__["_report"] = report
    return report
