"""Finite semigroups given by multiplication tables.

Elements are the dense ids ``0..order-1``; ``table[x][y]`` is the product
``xy`` (row = left factor).
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from ..errors import InvalidEntry, NotAssociative, SizeZero


def first_associativity_failure(arr: np.ndarray):
    """Return ``(a, b, c)`` with ``(ab)c != a(bc)``, or None."""
    left = arr[arr]              # [a, b, c] -> (ab)c
    right = arr[:, arr]          # [a, b, c] -> a(bc)
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


class FiniteSemigroup:
    """An immutable, validated multiplication table.

    ``rows`` is a tuple of tuples and is the fast path for Python loops;
    ``table`` is a read-only numpy view of the same data.
    """

    def __init__(self, table, names: Sequence[str] | None = None, check: bool = True):
        arr = np.array(table, dtype=np.int64)
        if arr.size == 0:
            raise SizeZero("a semigroup needs at least one element")
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InvalidEntry(f"table must be square, got shape {arr.shape}")
        n = arr.shape[0]
        if n == 0:
            raise SizeZero("a semigroup needs at least one element")
        if check:
            if arr.min() < 0 or arr.max() >= n:
                i, j = np.argwhere((arr < 0) | (arr >= n))[0]
                raise InvalidEntry(f"entry ({i},{j}) = {arr[i, j]} is not an element id in 0..{n - 1}")
            triple = first_associativity_failure(arr)
            if triple is not None:
                a, b, c = triple
                raise NotAssociative(triple, int(arr[arr[a, b], c]), int(arr[a, arr[b, c]]))
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != n:
                raise InvalidEntry(f"{len(names)} names for {n} elements")
        arr.setflags(write=False)
        self._arr = arr
        self.order = n
        self.rows = tuple(tuple(int(v) for v in row) for row in arr)
        self.names = names

    @property
    def table(self) -> np.ndarray:
        return self._arr

    def __len__(self):
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __eq__(self, other):
        return isinstance(other, FiniteSemigroup) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"FiniteSemigroup(order={self.order})"

    def mul(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def product(self, *xs: int) -> int:
        p = xs[0]
        for x in xs[1:]:
            p = self.rows[p][x]
        return p

    def name(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    @cached_property
    def idempotents(self) -> frozenset:
        return frozenset(x for x in range(self.order) if self.rows[x][x] == x)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def dual(self) -> "FiniteSemigroup":
        """The antiisomorphic copy: ``x * y`` becomes ``y * x``."""
        return FiniteSemigroup(self._arr.T, self.names, check=False)

    def relabel(self, perm: Sequence[int]) -> "FiniteSemigroup":
        """Copy with element ``x`` renamed ``perm[x]``."""
        p = np.asarray(perm, dtype=np.int64)
        q = np.argsort(p)
        new = p[self._arr[np.ix_(q, q)]]
        names = None if self.names is None else [self.names[i] for i in q]
        return FiniteSemigroup(new, names, check=False)

    def closure_mask(self, mask: int, base: int = 0) -> int:
        """Bitmask of the subsemigroup generated by ``mask``.

        ``base`` may name a subset of ``mask`` already known to be closed;
        products inside it are then skipped.
        """
        rows = self.rows
        members = [x for x in range(self.order) if base >> x & 1]
        start = len(members)
        members += [x for x in range(self.order) if (mask & ~base) >> x & 1]
        mask |= base
        i = start
        while i < len(members):
            x = members[i]
            rx = rows[x]
            for j in range(i + 1):
                y = members[j]
                z = rx[y]
                if not mask >> z & 1:
                    mask |= 1 << z
                    members.append(z)
                z = rows[y][x]
                if not mask >> z & 1:
                    mask |= 1 << z
                    members.append(z)
            i += 1
        return mask

    def is_closed(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(self.rows[x][y] in s for x in s for y in s)

    def restrict(self, subset: Iterable[int]) -> tuple["FiniteSemigroup", tuple]:
        """The subsemigroup on ``subset`` relabeled ``0..k-1`` in increasing order.

        Returns the new semigroup and the tuple of original ids.
        """
        old = tuple(sorted(set(subset)))
        index = {x: i for i, x in enumerate(old)}
        try:
            table = [[index[self.rows[x][y]] for y in old] for x in old]
        except KeyError:
            raise InvalidEntry("subset is not closed under the product") from None
        names = None if self.names is None else [self.names[x] for x in old]
        return FiniteSemigroup(table, names, check=False), old


def mask_to_set(mask: int) -> frozenset:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return frozenset(out)


def set_to_mask(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def from_table(order: int, table, names=None) -> FiniteSemigroup:
    """Validate ``table`` as an ``order x order`` associative table."""
    if not isinstance(order, (int, np.integer)) or isinstance(order, bool):
        raise InvalidEntry(f"order must be an integer, got {order!r}")
    if order < 1:
        raise SizeZero("a semigroup needs at least one element")
    rows = [list(r) for r in table]
    if len(rows) != order or any(len(r) != order for r in rows):
        raise InvalidEntry(f"table is not {order}x{order}")
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            if isinstance(v, bool) or not isinstance(v, (int, np.integer)):
                raise InvalidEntry(f"entry ({i},{j}) = {v!r} is not an integer")
    return FiniteSemigroup(rows, names)


def generate(S: FiniteSemigroup, X: Iterable[int]) -> frozenset:
    """The subsemigroup of S generated by X (empty for empty X)."""
    return mask_to_set(S.closure_mask(set_to_mask(X)))
