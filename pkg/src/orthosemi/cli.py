"""Command-line front end: ``orthosemi <command> [options]``.

Inputs are inline specs (``--spec rectangular_band:2,2``, ``--spec mk:3``) or
table files (``--file table.json``, ``-`` for standard input). Output is
plain text by default, JSON with ``--format structured`` and Graphviz with
``--format dot`` where a graph makes sense. Exit status: 0 success,
1 computation error (or a failing suite), 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import io
from .enumeration import MODES, _corpus_filename, corpus, default_cache_dir, enumerate_semigroups
from .errors import SemigroupError
from .finite import (FiniteSemigroup, classify, construct, gamma, green, kernel,
                     kernel_decomposition, quotient)
from .lattice import induced_bijection, lattice_iso, sub_lattice
from .suites import SUITES, run_suite
from .symbolic import (RhoType, c2_up_to_weight, classify_monogenic, compare_with_quotient,
                       expected_lr, lr_values, mk_elements, rees_quotient_Mk, rho_quotient)


class UsageError(Exception):
    pass


def load_semigroup(spec=None, path=None):
    if (spec is None) == (path is None):
        raise UsageError("give exactly one of --spec or --file")
    if path is not None:
        text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
        return io.loads_table(text)
    if spec.startswith("mk:"):
        return rees_quotient_Mk(int(spec[3:]))
    return construct(spec)


def parse_rho(text):
    """``"2,omega"`` / ``"3,inf+"`` -> RhoType."""
    try:
        k, flavor = text.split(",", 1)
        return RhoType(int(k), flavor.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected K,FLAVOR (e.g. 2,inf+), got {text!r}")


def _name(S, x):
    return S.names[x] if S.names else str(x)


def _set(S, xs):
    return "{" + ", ".join(_name(S, x) for x in sorted(xs)) + "}"


def format_table(S) -> str:
    labels = [_name(S, x) for x in range(S.order)]
    w = max(len(s) for s in labels)
    head = " " * w + " | " + " ".join(s.rjust(w) for s in labels)
    lines = [head, "-" * len(head)]
    for x, row in enumerate(S.rows):
        lines.append(labels[x].rjust(w) + " | " + " ".join(labels[y].rjust(w) for y in row))
    return "\n".join(lines)


def _inf(v):
    return "inf" if v == math.inf else v


# -- commands ---------------------------------------------------------------------

def cmd_construct(args, S):
    if args.format == "structured":
        return io.table_document(S)
    return f"order {S.order}\n" + format_table(S)


def cmd_classify(args, S):
    r = classify(S)
    if args.format == "structured":
        return {"order": S.order, **r.flags(), "orders": list(r.orders)}
    lines = [f"order {S.order}"]
    lines += [f"{k[3:]:<20} {'yes' if v else 'no'}" for k, v in r.flags().items()]
    lines.append("element orders       " + " ".join(str(o) for o in r.orders))
    return "\n".join(lines)


def cmd_green(args, S):
    g = green(S)
    rels = ("L", "R", "H", "D", "J")
    if args.format == "structured":
        return {rel: [list(c) for c in getattr(g, rel)] for rel in rels}
    return "\n".join(f"{rel}: " + " ".join(_set(S, c) for c in getattr(g, rel)) for rel in rels)


def cmd_gamma(args, S):
    rho = gamma(S, bound=args.bound or 8)
    Q = quotient(S, rho)
    if args.format == "structured":
        return {"classes": [list(c) for c in rho.classes], "quotient": io.table_document(Q)}
    lines = ["classes: " + " ".join(_set(S, c) for c in rho.classes),
             f"S/gamma has order {Q.order} (class i is element i), inverse: {classify(Q).is_inverse}",
             format_table(FiniteSemigroup(Q.rows, check=False))]
    return "\n".join(lines)


def cmd_kernel(args, S):
    K = sorted(kernel(S))
    doc = {"kernel": K}
    if classify(S).is_orthodox:
        d = kernel_decomposition(S)
        doc["group"] = list(d.group_ids)
        doc["band"] = list(d.band_ids)
        doc["witness"] = [[k, list(d.witness[k])] for k in K]
    if args.format == "structured":
        return doc
    lines = ["kernel: " + _set(S, K)]
    if "group" in doc:
        lines.append(f"group H: {_set(S, doc['group'])} (order {len(doc['group'])})")
        lines.append(f"rectangular band E_K: {_set(S, doc['band'])} (order {len(doc['band'])})")
        for k, (i, j) in doc["witness"]:
            lines.append(f"  {_name(S, k)} -> ({_name(S, d.group_ids[i])}, {_name(S, d.band_ids[j])})")
    else:
        lines.append("not orthodox: no decomposition")
    return "\n".join(lines)


def cmd_sublattice(args, S):
    L = sub_lattice(S, bound=args.bound or 12)
    if args.format == "dot":
        return io.lattice_to_dot(L)
    if args.format == "structured":
        return io.lattice_document(L)
    lines = [f"{len(L)} subsemigroups"]
    for i in range(len(L)):
        ups = " ".join(f"n{j}" for j in L.upper[i])
        lines.append(f"n{i} {_set(S, L.elements(i))}" + (f" < {ups}" if ups else ""))
    return "\n".join(lines)


def cmd_latiso(args, _):
    A = load_semigroup(args.left, args.left_file)
    B = load_semigroup(args.right, args.right_file)
    bound = args.bound or 12
    L1, L2 = sub_lattice(A, bound), sub_lattice(B, bound)
    iso = lattice_iso(L1, L2)
    if iso is None:
        if args.format == "structured":
            return {"isomorphic": False}
        return f"no lattice isomorphism ({len(L1)} vs {len(L2)} nodes)"
    ind = induced_bijection(iso)
    if args.format == "structured":
        return {"isomorphic": True,
                "mapping": [[list(L1.elements(i)), list(L2.elements(j))] for i, j in iso.pairs()],
                "induced": ind.induces,
                "phi": sorted(ind.phi.items()) if ind.phi is not None else None,
                "diagnostic": ind.diagnostic}
    if args.format == "dot":
        lines = ["digraph LatIso {", "  rankdir=BT;"]
        for i, j in iso.pairs():
            lines.append(f'  n{i} [label="{_set(A, L1.elements(i))} -> {_set(B, L2.elements(j))}"];')
        lines += [f"  n{i} -> n{j};" for i, j in L1.cover_pairs()]
        lines.append("}")
        return "\n".join(lines)
    lines = [f"lattice isomorphism ({len(L1)} nodes)"]
    lines += [f"{_set(A, L1.elements(i))} -> {_set(B, L2.elements(j))}" for i, j in iso.pairs()]
    if ind.induces:
        lines.append("induced by phi: " + ", ".join(
            f"{_name(A, x)}->{_name(B, y)}" for x, y in sorted(ind.phi.items())))
    else:
        lines.append(f"not induced by an element map: {ind.diagnostic}")
    return "\n".join(lines)


def cmd_enumerate(args, _):
    sgs = enumerate_semigroups(args.n, args.mode, allow_six=args.allow_six, threads=args.threads)
    if args.format == "structured":
        return io.corpus_document(sgs, args.n, args.mode)
    lines = [f"{len(sgs)} semigroups of order {args.n} up to {args.mode.replace('_', ' ')}"]
    lines += [json.dumps([list(r) for r in S.rows], separators=(",", ":")) for S in sgs]
    return "\n".join(lines)


def cmd_mk(args, _):
    M = rees_quotient_Mk(args.k)
    if args.format == "structured":
        elts = mk_elements(args.k)
        return {**io.table_document(M),
                "elements": [None if u is None else io.c2_document(u) for u in elts]}
    return f"M_{args.k}: order {M.order}, 0 is the zero\n" + format_table(M)


def cmd_rho(args, _):
    t = args.type
    Q = rho_quotient(t)
    W = args.bound or 2 * t.k
    lr = lr_values(t)
    rep = classify_monogenic(t)
    classes = {}
    for u in c2_up_to_weight(W):
        classes.setdefault(repr(Q.class_of(u)), []).append(io.c2_to_text(u))
    if args.format == "structured":
        return {"type": io.rho_document(t), "l": _inf(lr[0]), "r": _inf(lr[1]),
                "kernel": rep.kernel, "dclass_sizes": list(rep.dclass_sizes),
                "checks": [[name, ok] for name, ok in rep.checks],
                "weight_bound": W, "classes": classes}
    lines = [f"type {t}: l = {_inf(lr[0])}, r = {_inf(lr[1])} (expected {tuple(map(_inf, expected_lr(t)))})",
             f"kernel: {rep.kernel}",
             f"D-classes above the kernel: sizes {list(rep.dclass_sizes)}"]
    lines += [f"  [{'ok' if ok else 'FAIL'}] {name}" for name, ok in rep.checks]
    lines.append(f"classes meeting weight <= {W}: {len(classes)}")
    lines += [f"  {key}: {len(v)} element(s), e.g. {v[0]}" for key, v in classes.items()]
    return "\n".join(lines)


def cmd_extension(args, _):
    t = args.type
    W = args.bound or 8
    mism = compare_with_quotient(t, W)
    if args.format == "structured":
        return {"type": io.rho_document(t), "weight_bound": W, "agrees": not mism,
                "mismatches": [repr(m) for m in mism[:20]]}
    kind = "Z" if t.flavor == "omega" else "the bicyclic semigroup"
    lines = [f"extension of {kind} by M_{t.k} vs C2/rho{t} at weight <= {W}: "
             + ("agree" if not mism else f"{len(mism)} mismatches")]
    lines += [f"  {m!r}" for m in mism[:20]]
    return "\n".join(lines)


def cmd_suite(args, _):
    if args.list:
        return "\n".join(SUITES)
    if not args.name:
        raise UsageError("suite needs a NAME (or 'all', or --list)")
    names = list(SUITES) if args.name == "all" else [args.name]
    reports = [run_suite(n, cache_dir=args.cache_dir, threads=args.threads) for n in names]
    args.exit_status = 0 if all(r.passed for r in reports) else 1
    if args.format == "structured":
        docs = [r.document() for r in reports]
        return docs[0] if len(docs) == 1 else docs
    lines = []
    for r in reports:
        lines += r.lines()
        lines.append(f"{r.name}: {'PASS' if r.passed else 'FAIL'}")
    return "\n".join(lines)


def cmd_corpus(args, _):
    cache = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
    sgs = corpus(args.n, args.mode, cache, threads=args.threads)
    manifest = json.loads((cache / "manifest.json").read_text(encoding="utf-8"))
    entry = manifest["files"][_corpus_filename(args.n, args.mode)]
    doc = {"file": _corpus_filename(args.n, args.mode), "count": len(sgs),
           "sha256": entry["sha256"]}
    if args.format == "structured":
        return doc
    return f"{doc['file']}: {doc['count']} semigroups, sha256 {doc['sha256']}"


# -- parser -----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="orthosemi", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, table=True, formats=("text", "structured")):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=fn, needs_table=table)
        p.add_argument("--format", choices=formats, default="text")
        if table:
            p.add_argument("--spec", help="inline spec, e.g. rectangular_band:2,2 or mk:3")
            p.add_argument("--file", help="table file in JSON form, '-' for stdin")
        return p

    add("construct", cmd_construct, "print the table of a semigroup")
    add("classify", cmd_classify, "property report")
    add("green", cmd_green, "Green's relations")
    add("gamma", cmd_gamma, "least inverse congruence of an orthodox semigroup").add_argument(
        "--bound", type=int, help="largest order for the congruence scan (default 8)")
    add("kernel", cmd_kernel, "kernel and its group x band decomposition")
    add("sublattice", cmd_sublattice, "lattice of subsemigroups",
        formats=("text", "dot", "structured")).add_argument(
        "--bound", type=int, help="largest order accepted (default 12)")

    p = add("latiso", cmd_latiso, "lattice isomorphism between two semigroups", table=False,
            formats=("text", "dot", "structured"))
    p.add_argument("--left")
    p.add_argument("--left-file")
    p.add_argument("--right")
    p.add_argument("--right-file")
    p.add_argument("--bound", type=int, help="largest order accepted (default 12)")

    p = add("enumerate", cmd_enumerate, "all semigroups of order N", table=False)
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=MODES, default="iso")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--allow-six", action="store_true", help="permit order 6 (hours)")

    p = add("mk", cmd_mk, "Rees quotient M_k of the free monogenic inverse semigroup", table=False)
    p.add_argument("k", type=int)

    for name, fn, help in (("rho", cmd_rho, "inspect C2/rho for a congruence type"),
                           ("extension", cmd_extension,
                            "compare the ideal extension with C2/rho")):
        p = add(name, fn, help, table=False)
        p.add_argument("type", type=parse_rho, metavar="K,FLAVOR",
                       help="flavor is omega, inf+ or inf-")
        p.add_argument("--bound", type=int, help="weight bound")

    p = add("suite", cmd_suite, "run a verification suite", table=False)
    p.add_argument("name", nargs="?", help="suite name or 'all'")
    p.add_argument("--list", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache-dir")

    p = add("corpus", cmd_corpus, "build or verify the cached corpus for order N", table=False)
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=MODES, default="iso")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cache-dir")
    return parser


def dispatch(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)   # exits 2 on bad usage
    args.exit_status = 0
    try:
        S = load_semigroup(args.spec, args.file) if args.needs_table else None
        out = args.func(args, S)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"orthosemi: error: {e}", file=sys.stderr)
        return 2
    except (SemigroupError, ValueError, KeyError, OSError) as e:
        print(f"orthosemi: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    if isinstance(out, (dict, list)):
        out = json.dumps(io.jsonable(out), indent=2, sort_keys=True)
    print(out)
    return args.exit_status


def main():
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
