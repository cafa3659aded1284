"""Small semigroups up to isomorphism (or isomorphism-or-antiisomorphism).

A table's canonical form is its lexicographically least row-major relabeling
``T'[p(x)][p(y)] = p(T[x][y])``. For order <= ``FULL_CANON_MAX`` the minimum is
taken over all n! relabelings; above that, over the relabelings that sort
elements by an isomorphism-invariant coloring (still a canonical form, just a
different one). Enumeration runs a backtracking search over tables with
incremental associativity pruning and keeps only tables that are their own
canonical form, so each class is emitted exactly once.
"""
from __future__ import annotations

import hashlib
import itertools
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from numba import njit

from .errors import TooLarge
from .finite import FiniteSemigroup, classify
from .finite.green import principal_ideals

ENUM_BOUND = 5
ENUM_HARD_LIMIT = 6
FULL_CANON_MAX = 10
COLORED_CANON_CAP = 10 ** 6
MODES = ("iso", "iso_or_anti")


@njit(cache=True, nogil=True)
def _consistent(T, n, a, b):
    """Associativity on every fully defined triple that reads cell (a, b)."""
    v = T[a * n + b]
    for c in range(n):
        bc = T[b * n + c]
        vc = T[v * n + c]
        if bc >= 0 and vc >= 0:
            abc = T[a * n + bc]
            if abc >= 0 and abc != vc:
                return False
        ca = T[c * n + a]
        cv = T[c * n + v]
        if ca >= 0 and cv >= 0:
            cab = T[ca * n + b]
            if cab >= 0 and cab != cv:
                return False
    for x in range(n):
        for y in range(n):
            xy = T[x * n + y]
            if xy == a:
                yb = T[y * n + b]
                if yb >= 0:
                    r = T[x * n + yb]
                    if r >= 0 and r != v:
                        return False
            if xy == b:
                ax = T[a * n + x]
                if ax >= 0:
                    r = T[ax * n + y]
                    if r >= 0 and r != v:
                        return False
    return True


@njit(cache=True, nogil=True)
def _is_lex_leader(T, n, perms, inv):
    N = n * n
    for k in range(perms.shape[0]):
        p = perms[k]
        q = inv[k]
        for idx in range(N):
            i = idx // n
            j = idx - i * n
            w = p[T[q[i] * n + q[j]]]
            if w < T[idx]:
                return False
            if w > T[idx]:
                break
    return True


@njit(cache=True, nogil=True)
def _search(n, first, perms, inv, out):
    """Fill ``out`` with lex-leader associative tables whose cell (0,0) is ``first``.

    Returns the total count (which may exceed ``out`` capacity)."""
    N = n * n
    T = -np.ones(N, np.int64)
    T[0] = first
    count = 0
    if not _consistent(T, n, 0, 0):
        return 0
    if N == 1:
        out[0, 0] = first
        return 1
    i = 1
    while i >= 1:
        if i == N:
            if _is_lex_leader(T, n, perms, inv):
                if count < out.shape[0]:
                    out[count, :] = T
                count += 1
            i -= 1
            continue
        a = i // n
        b = i - a * n
        v = T[i] + 1
        advanced = False
        while v < n:
            T[i] = v
            if _consistent(T, n, a, b):
                advanced = True
                break
            v += 1
        if advanced:
            i += 1
            if i < N:
                T[i] = -1
        else:
            T[i] = -1
            i -= 1
    return count


@njit(cache=True)
def _min_relabel(T, n):
    """Least relabeled table over all permutations (Heap's algorithm)."""
    N = n * n
    q = np.arange(n)          # new label -> old element
    p = np.arange(n)          # old element -> new label
    best = T.copy()
    c = np.zeros(n, np.int64)
    i = 0
    while i < n:
        if c[i] < i:
            if i % 2 == 0:
                s = 0
            else:
                s = c[i]
            a = q[s]
            q[s] = q[i]
            q[i] = a
            p[q[s]] = s
            p[q[i]] = i
            for idx in range(N):
                r = idx // n
                col = idx - r * n
                w = p[T[q[r] * n + q[col]]]
                if w < best[idx]:
                    for idx2 in range(idx, N):
                        r2 = idx2 // n
                        c2 = idx2 - r2 * n
                        best[idx2] = p[T[q[r2] * n + q[c2]]]
                    break
                if w > best[idx]:
                    break
            c[i] += 1
            i = 0
        else:
            c[i] = 0
            i += 1
    return best


@dataclass(frozen=True)
class CanonicalTable:
    order: int
    table: tuple
    self_dual: bool

    def semigroup(self) -> FiniteSemigroup:
        return FiniteSemigroup(self.table, check=False)


def _colors(S: FiniteSemigroup):
    """Isomorphism-invariant element colors by iterated refinement."""
    n, rows = S.order, S.rows
    left, right, two = principal_ideals(S)
    col = [(rows[x][x] == x, bin(left[x]).count("1"), bin(right[x]).count("1"),
            bin(two[x]).count("1")) for x in range(n)]
    while True:
        sig = [(col[x], tuple(sorted((col[y], col[rows[x][y]], col[rows[y][x]]) for y in range(n))))
               for x in range(n)]
        ranks = {s: r for r, s in enumerate(sorted(set(sig)))}
        new = [ranks[s] for s in sig]
        if len(set(new)) == len(set(col)):
            return new
        col = new


def _colored_min(S: FiniteSemigroup):
    n = S.order
    col = _colors(S)
    blocks = [[x for x in range(n) if col[x] == c] for c in sorted(set(col))]
    total = math.prod(math.factorial(len(b)) for b in blocks)
    if total > COLORED_CANON_CAP:
        raise TooLarge(f"canonical labeling would scan {total} relabelings")
    T = S.table
    best = None
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        q = np.array([x for blk in choice for x in blk])
        p = np.argsort(q)
        cand = tuple(p[T[np.ix_(q, q)]].ravel().tolist())
        if best is None or cand < best:
            best = cand
    return best


def _canonical_flat(S: FiniteSemigroup) -> tuple:
    n = S.order
    if n <= FULL_CANON_MAX:
        return tuple(_min_relabel(S.table.ravel().copy(), n).tolist())
    return _colored_min(S)


def _unflatten(flat, n):
    return tuple(tuple(flat[i * n:(i + 1) * n]) for i in range(n))


def canonical_form(S) -> CanonicalTable:
    """Canonical table of S; isomorphic inputs give identical results."""
    if not isinstance(S, FiniteSemigroup):
        S = FiniteSemigroup(S)
    cached = S.__dict__.get("_canonical")
    if cached is not None:
        return cached
    n = S.order
    a = _canonical_flat(S)
    b = _canonical_flat(S.dual())
    out = CanonicalTable(n, _unflatten(a, n), a == b)
    S.__dict__["_canonical"] = out
    return out


def anti_key(S: FiniteSemigroup) -> tuple:
    """Shared key of S and its dual: the smaller of the two canonical tables."""
    c = canonical_form(S)
    d = canonical_form(S.dual())
    return min(c.table, d.table)


def iso_test(S: FiniteSemigroup, T: FiniteSemigroup) -> str:
    """``"isomorphic"``, ``"antiisomorphic-only"`` or ``"neither"``."""
    if S.order != T.order:
        return "neither"
    cs = canonical_form(S).table
    if cs == canonical_form(T).table:
        return "isomorphic"
    if cs == canonical_form(T.dual()).table:
        return "antiisomorphic-only"
    return "neither"


def _run_search(n, threads):
    perms = np.array(list(itertools.permutations(range(n))), np.int64)
    inv = np.argsort(perms, axis=1).astype(np.int64)
    capacity = 64

    def branch(first):
        nonlocal capacity
        cap = capacity
        while True:
            out = np.zeros((cap, n * n), np.int64)
            count = _search(n, first, perms, inv, out)
            if count <= cap:
                return out[:count]
            cap = count

    capacity = {1: 4, 2: 8, 3: 32, 4: 256, 5: 4096}.get(n, 65536)
    with ThreadPoolExecutor(max_workers=max(1, threads)) as pool:
        parts = list(pool.map(branch, range(n)))
    flats = [tuple(row.tolist()) for part in parts for row in part]
    return sorted(flats)


def enumerate_semigroups(n: int, mode: str = "iso", allow_six: bool = False,
                         threads: int = 1) -> list:
    """One representative per class of semigroups of order n, sorted by canonical table.

    In ``iso`` mode every representative is its own canonical form. In
    ``iso_or_anti`` mode a semigroup and its dual share a class and the
    representative is the smaller of their two canonical tables. Order 6 is
    refused unless ``allow_six`` (hours of compute).
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if n < 1:
        raise ValueError("order must be positive")
    if n > ENUM_HARD_LIMIT or (n > ENUM_BOUND and not allow_six):
        raise TooLarge(f"enumeration limited to order {ENUM_BOUND} (6 with allow_six)")
    flats = _run_search(n, threads)
    reps = [FiniteSemigroup(_unflatten(f, n)) for f in flats]
    if mode == "iso":
        return reps
    keys = {}
    for S in reps:
        keys.setdefault(anti_key(S), None)
    return [FiniteSemigroup(k) for k in sorted(keys)]


def brute_force_class_count(n: int, mode: str = "iso") -> int:
    """Independent count for tiny n: scan all n^(n*n) tables, keep associative
    ones, and group them by the least relabeling over all permutations."""
    if n > 3:
        raise TooLarge("the all-tables scan is only practical for n <= 3")
    perms = list(itertools.permutations(range(n)))
    elems = range(n)

    def assoc(t):
        return all(t[t[a][b]][c] == t[a][t[b][c]] for a in elems for b in elems for c in elems)

    def least(t):
        out = None
        for p in perms:
            q = [0] * n
            for x, px in enumerate(p):
                q[px] = x
            cand = tuple(p[t[q[i]][q[j]]] for i in elems for j in elems)
            if out is None or cand < out:
                out = cand
        return out

    classes = set()
    for flat in itertools.product(elems, repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in elems]
        if not assoc(t):
            continue
        key = least(t)
        if mode == "iso_or_anti":
            dual = [[t[j][i] for j in elems] for i in elems]
            key = min(key, least(dual))
        classes.add(key)
    return len(classes)


# -- corpus cache ---------------------------------------------------------------

def default_cache_dir() -> Path:
    env = os.environ.get("ORTHOSEMI_CACHE")
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "orthosemi"


def _corpus_filename(n, mode):
    return f"semigroups-n{n}-{mode}.json"


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def corpus(n: int, mode: str = "iso", cache_dir=None, threads: int = 1) -> list:
    """Cached ``enumerate_semigroups(n, mode)``; regenerated only when the file
    is absent or its digest disagrees with the manifest."""
    from .io import corpus_document, semigroups_from_corpus_document

    cache = Path(cache_dir) if cache_dir is not None else default_cache_dir()
    path = cache / _corpus_filename(n, mode)
    manifest_path = cache / "manifest.json"
    manifest = {}
    if manifest_path.exists():
        manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    entry = manifest.get("files", {}).get(path.name)
    if path.exists() and entry is not None:
        text = path.read_text(encoding="utf-8")
        if _digest(text) == entry["sha256"]:
            return semigroups_from_corpus_document(json.loads(text))
    sgs = enumerate_semigroups(n, mode, allow_six=(n == 6), threads=threads)
    text = json.dumps(corpus_document(sgs, n, mode), separators=(",", ":"))
    cache.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(text, encoding="utf-8")
    tmp.replace(path)
    manifest.setdefault("files", {})[path.name] = {
        "order": n, "mode": mode, "count": len(sgs), "sha256": _digest(text)}
    manifest_path.write_text(json.dumps(manifest, indent=2, sort_keys=True), encoding="utf-8")
    return sgs


def corpus_up_to(n: int, mode: str = "iso", cache_dir=None, threads: int = 1) -> list:
    return [S for k in range(1, n + 1) for S in corpus(k, mode, cache_dir, threads)]


def orthodox_corpus(n: int, cache_dir=None) -> list:
    return [S for S in corpus_up_to(n, "iso", cache_dir) if classify(S).is_orthodox]
