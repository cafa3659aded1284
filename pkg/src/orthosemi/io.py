"""Text formats: semigroup tables, corpus files, lattice exports, symbolic values.

Table files are UTF-8 JSON objects::

    {"order": 2, "table": [[0, 0], [1, 1]], "names": ["a", "b"]}

``names`` is optional. Rows are left factors. Corpus files wrap a list of
such objects::

    {"format": "orthosemi-corpus/1", "order": 3, "mode": "iso", "count": 24,
     "semigroups": [{"order": 3, "table": [...]}, ...]}
"""
from __future__ import annotations

import json
import math

from .errors import InvalidEntry
from .finite import FiniteSemigroup, from_table

CORPUS_FORMAT = "orthosemi-corpus/1"


def table_document(S: FiniteSemigroup) -> dict:
    doc = {"order": S.order, "table": [list(r) for r in S.rows]}
    if S.names is not None:
        doc["names"] = list(S.names)
    return doc


def dumps_table(S: FiniteSemigroup) -> str:
    return json.dumps(table_document(S))


def semigroup_from_document(doc) -> FiniteSemigroup:
    if not isinstance(doc, dict) or "order" not in doc or "table" not in doc:
        raise InvalidEntry("a table document needs 'order' and 'table'")
    return from_table(doc["order"], doc["table"], doc.get("names"))


def loads_table(text: str) -> FiniteSemigroup:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise InvalidEntry(f"not valid JSON: {e}") from None
    return semigroup_from_document(doc)


def read_table(path) -> FiniteSemigroup:
    with open(path, encoding="utf-8") as fh:
        return loads_table(fh.read())


def write_table(S: FiniteSemigroup, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps_table(S) + "\n")


def corpus_document(sgs, n, mode) -> dict:
    return {"format": CORPUS_FORMAT, "order": n, "mode": mode, "count": len(sgs),
            "semigroups": [{"order": S.order, "table": [list(r) for r in S.rows]} for S in sgs]}


def semigroups_from_corpus_document(doc) -> list:
    if doc.get("format") != CORPUS_FORMAT:
        raise InvalidEntry(f"unknown corpus format {doc.get('format')!r}")
    return [FiniteSemigroup(d["table"], check=False) for d in doc["semigroups"]]


# -- lattices ---------------------------------------------------------------------

def _label(L, i, names):
    elts = L.elements(i)
    if not elts:
        return "∅"
    return "{" + ",".join(names[x] if names else str(x) for x in elts) + "}"


def lattice_to_dot(L, names=None) -> str:
    names = names or L.S.names
    lines = ["digraph Sub {", "  rankdir=BT;"]
    for i in range(len(L)):
        lines.append(f'  n{i} [label="{_label(L, i, names)}"];')
    for i, j in L.cover_pairs():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines)


def lattice_document(L) -> dict:
    return {"order": L.S.order, "nodes": list(L.nodes),
            "elements": [list(L.elements(i)) for i in range(len(L))],
            "covers": [list(p) for p in L.cover_pairs()]}


def iso_document(iso) -> list:
    return [list(p) for p in iso.pairs()]


# -- symbolic values ----------------------------------------------------------------

def c2_to_text(u) -> str:
    return f"(({u.m},{u.n}),({u.p},{u.q}))"


def c2_document(u) -> list:
    return [[u.m, u.n], [u.p, u.q]]


def c2_from_document(doc):
    from .symbolic import C2Elt
    (m, n), (p, q) = doc
    return C2Elt(m, n, p, q)


def rho_document(t) -> dict:
    return {"k": t.k, "flavor": t.flavor}


def rho_from_document(doc):
    from .symbolic import RhoType
    return RhoType(int(doc["k"]), doc["flavor"])


def jsonable(value):
    """Replace infinities and tuples so ``json.dumps`` output is stable."""
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [jsonable(v) for v in items]
    return value
