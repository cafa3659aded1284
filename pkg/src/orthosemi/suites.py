"""Verification suites, one per exit criterion of the project.

Each suite returns a SuiteReport whose checks carry a witness on failure.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from itertools import product

from .enumeration import brute_force_class_count, corpus, corpus_up_to, enumerate_semigroups
from .errors import UnknownSuite
from .finite import (CongruencePartition, classify, congruence_witness, congruences,
                     construct, cyclic_group, direct_product, from_table, gamma, green,
                     inverses, kernel_decomposition, monogenic_shadow_check,
                     nongroup_elements, quotient, rectangular_band)
from .finite.properties import all_inverses
from .lattice import band_closure_check
from .symbolic import (C2Elt, RhoQuotient, all_rho_types, c2_mul, c2_of_weight,
                       c2_to_c3, c2_up_to_weight, c3_to_c2, c3_words, compare_with_quotient,
                       expected_lr, is_c2_idempotent, lr_values, order_evidence,
                       presentation_mismatches, rees_quotient_Mk, rho_related, word_eval)

PUBLISHED_COUNTS = {"iso": {1: 1, 2: 5, 3: 24, 4: 188, 5: 1915},
                    "iso_or_anti": {1: 1, 2: 4, 3: 18, 4: 126, 5: 1160}}


@dataclass
class Check:
    id: str
    status: str
    detail: str = ""


@dataclass
class SuiteReport:
    name: str
    checks: list = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def add(self, cid, ok, detail="", witness=None):
        if ok:
            self.checks.append(Check(cid, "pass", detail))
        else:
            self.checks.append(Check(cid, "fail", f"{detail} witness: {witness!r}".strip()))

    def skip(self, cid, reason):
        self.checks.append(Check(cid, "skipped", reason))

    def lines(self) -> list:
        return [f"[{c.status.upper():4}] {self.name}/{c.id}" + (f"  {c.detail}" if c.detail else "")
                for c in self.checks]

    def document(self) -> dict:
        return {"suite": self.name, "passed": self.passed,
                "checks": [{"id": c.id, "status": c.status, "detail": c.detail} for c in self.checks]}


def suite_bicyclic_presentation(report, **_):
    t0 = time.perf_counter()
    checked, bad = presentation_mismatches(8)
    elapsed = time.perf_counter() - t0
    report.add("rewriting-equals-pairs", not bad, f"{checked} words of length <= 8", bad[:5])
    report.add("runtime-under-1s", elapsed < 1.0, f"{elapsed:.3f} s", elapsed)
    checked, bad = presentation_mismatches(12)
    report.add("words-to-length-12", not bad, f"{checked} words", bad[:5])


def suite_weight_census(report, **_):
    for m in range(1, 7):
        elts = list(c2_of_weight(m))
        idem = sum(1 for u in elts if is_c2_idempotent(u))
        report.add(f"weight-{m}", len(elts) == (m + 1) ** 2 and idem == m + 1,
                   f"{len(elts)} elements, {idem} idempotent", (len(elts), idem))
    for k in range(1, 7):
        want = 1 + sum((m + 1) ** 2 for m in range(1, k))
        got = rees_quotient_Mk(k).order
        report.add(f"M_{k}-order", got == want, f"|M_{k}| = {got}", (got, want))


def suite_c2_c3(report, **_):
    bad_eval, bad_round = [], []
    count = 0
    for w in c3_words(8):
        count += 1
        u = c3_to_c2(w)
        if u != word_eval(w.tokens()):
            bad_eval.append(w)
        if c2_to_c3(u) != w:
            bad_round.append(w)
    report.add("formula-matches-word-oracle", not bad_eval, f"{count} words with q <= 8", bad_eval[:5])
    report.add("c3-roundtrip", not bad_round, "", bad_round[:5])
    back = [u for u in c2_up_to_weight(8) if c3_to_c2(c2_to_c3(u)) != u]
    report.add("c2-roundtrip", not back, "all C2 elements of weight <= 8", back[:5])


def rho_compatibility_failure(t, W=6):
    pool = c2_up_to_weight(W)
    prod = {(u, v): c2_mul(u, v) for u in pool for v in pool}
    for u in pool:
        for u2 in pool:
            if u == u2 or not rho_related(t, u, u2):
                continue
            for v in pool:
                if not rho_related(t, prod[u, v], prod[u2, v]):
                    return (u, u2, v, "right")
                if not rho_related(t, prod[v, u], prod[v, u2]):
                    return (u, u2, v, "left")
    return None


def suite_rho_families(report, **_):
    for t in all_rho_types(3):
        bad = rho_compatibility_failure(t, 6)
        report.add(f"{t}-compatible", bad is None, "weight <= 6", bad)
        lr = lr_values(t)
        report.add(f"{t}-lr", lr == expected_lr(t), f"(l, r) = {lr}", lr)
        mism = compare_with_quotient(t, 8)
        report.add(f"{t}-extension-agrees", not mism, "weight <= 8", mism[:3])


def _gamma_failures(S):
    fails = []
    rho = CongruencePartition.from_labels(all_inverses(S))
    w = congruence_witness(S, rho)
    if w is not None:
        return [("congruence", w)]
    if not classify(quotient(S, rho)).is_inverse:
        fails.append(("inverse-quotient", rho.classes))
    for c in congruences(S):
        if classify(quotient(S, c)).is_inverse and not rho.refines(c):
            fails.append(("least", c.classes))
    lab = rho.labels
    for h in green(S).H:
        if len({lab[x] for x in h}) != len(h):
            fails.append(("gamma-meet-H", h))
    E = S.idempotents
    EB, eids = S.restrict(E)
    comp = {}
    for c in green(EB).D:
        for i in c:
            comp[eids[i]] = frozenset(eids[j] for j in c)
    for e in E:
        cls = frozenset(x for x in range(S.order) if lab[x] == lab[e])
        if cls != inverses(S, e):
            fails.append(("class-equals-V(e)", e))
        if cls != comp[e]:
            fails.append(("class-equals-E(e)", e))
    return fails


def suite_gamma(report, cache_dir=None, **_):
    orth = [S for S in corpus_up_to(5, "iso", cache_dir) if classify(S).is_orthodox]
    tags = ("congruence", "inverse-quotient", "least", "gamma-meet-H",
            "class-equals-V(e)", "class-equals-E(e)")
    failures = {t: [] for t in tags}
    for S in orth:
        for tag, w in _gamma_failures(S):
            failures[tag].append((S.rows, w))
    for tag in tags:
        report.add(tag, not failures[tag], f"{len(orth)} orthodox semigroups of order <= 5",
                   failures[tag][:3])


def suite_band_lattice_closed(report, cache_dir=None, threads=1, **_):
    sgs = corpus_up_to(4, "iso_or_anti", cache_dir)
    t0 = time.perf_counter()
    r = band_closure_check(sgs, threads=threads)
    elapsed = time.perf_counter() - t0
    report.add("no-violations", r.passed,
               f"{r.size} semigroups, {len(r.pairs)} lattice-isomorphic pairs, "
               f"{r.band_pairs} band pairs, {elapsed:.1f} s",
               [(sgs[i].rows, sgs[j].rows) for i, j in r.violations[:3]])


def suite_nongroup_dclass(report, cache_dir=None, **_):
    orth = [S for S in corpus_up_to(5, "iso", cache_dir) if classify(S).is_orthodox]
    cases, failures = 0, []
    for S in orth:
        for a in sorted(nongroup_elements(S)):
            for b in sorted(inverses(S, a)):
                cases += 1
                r = monogenic_shadow_check(S, a, b)
                if not r.passed:
                    failures.append((S.rows, a, b, r.detail))
    report.add("dclass-and-ideal", not failures,
               f"{len(orth)} orthodox semigroups, {cases} (a, b) cases", failures[:3])
    # order <= 5 has few nongroup elements; add larger orthodox constructions
    extra = {f"M_{k}": rees_quotient_Mk(k) for k in (3, 4)}
    extra["M_2 x rect(2,2)"] = direct_product(rees_quotient_Mk(2), rectangular_band(2, 2))
    extra["M_2 x Z2"] = direct_product(rees_quotient_Mk(2), cyclic_group(2))
    extra["M_3 x left_zero(2)"] = direct_product(rees_quotient_Mk(3), construct("left_zero:2"))
    cases, failures = 0, []
    for label, S in extra.items():
        for a in sorted(nongroup_elements(S)):
            for b in sorted(inverses(S, a)):
                cases += 1
                r = monogenic_shadow_check(S, a, b)
                if not r.passed:
                    failures.append((label, a, b, r.detail))
    report.add("constructed-orthodox", not failures,
               f"{len(extra)} constructions, {cases} (a, b) cases", failures[:3])


def small_groups():
    """All groups of order <= 4 up to isomorphism."""
    return {"Z1": cyclic_group(1), "Z2": cyclic_group(2), "Z3": cyclic_group(3),
            "Z4": cyclic_group(4), "Z2xZ2": direct_product(cyclic_group(2), cyclic_group(2))}


def suite_kernel_decomposition(report, cache_dir=None, **_):
    bad = []
    count = 0
    for gname, G in small_groups().items():
        for p, q in product(range(1, 4), repeat=2):
            S = direct_product(G, rectangular_band(p, q))
            count += 1
            try:
                d = kernel_decomposition(S)
                if d.group.order != G.order or d.band.order != p * q:
                    bad.append((gname, p, q, "sizes"))
            except Exception as e:
                bad.append((gname, p, q, repr(e)))
    report.add("group-times-band", not bad, f"{count} instances", bad[:3])
    orth = [S for S in corpus_up_to(5, "iso", cache_dir) if classify(S).is_orthodox]
    bad = []
    for S in orth:
        try:
            kernel_decomposition(S)
        except Exception as e:
            bad.append((S.rows, repr(e)))
    report.add("corpus-orthodox", not bad, f"{len(orth)} orthodox semigroups", bad[:3])


def suite_torsion_evidence(report, **_):
    K = 12
    pool = c2_up_to_weight(4)
    bad = [u for u in pool if not is_c2_idempotent(u)
           and not order_evidence(u, K, c2_mul, is_c2_idempotent).passed]
    n = sum(1 for u in pool if not is_c2_idempotent(u))
    report.add("free", not bad, f"{n} nonidempotents", bad[:3])
    for t in all_rho_types(3):
        Q = RhoQuotient(t)
        elts = {Q.class_of(u): None for u in pool}
        nonidem = [c for c in elts if not Q.is_idempotent(c)]
        bad = [c for c in nonidem if not order_evidence(c, K, Q.mul, Q.is_idempotent).passed]
        report.add(f"{t}", not bad, f"{len(nonidem)} nonidempotents", bad[:3])


def suite_enumeration_sanity(report, cache_dir=None, **_):
    for n in (2, 3):
        for mode in ("iso", "iso_or_anti"):
            got = len(enumerate_semigroups(n, mode))
            want = brute_force_class_count(n, mode)
            report.add(f"n{n}-{mode}-oracle", got == want, f"{got} classes", (got, want))
    for mode, counts in PUBLISHED_COUNTS.items():
        for n, want in counts.items():
            got = len(corpus(n, mode, cache_dir))
            report.add(f"n{n}-{mode}-published", got == want, f"{got} classes", (got, want))
    bad = []
    for n in range(1, 6):
        for S in corpus(n, "iso", cache_dir):
            try:
                from_table(S.order, S.rows)
            except Exception as e:
                bad.append((S.rows, repr(e)))
    report.add("representatives-validate", not bad, "orders 1..5", bad[:3])


SUITES = {
    "bicyclic-presentation": suite_bicyclic_presentation,
    "weight-census": suite_weight_census,
    "c2-c3-bijection": suite_c2_c3,
    "rho-families": suite_rho_families,
    "gamma": suite_gamma,
    "band-lattice-closed-4": suite_band_lattice_closed,
    "nongroup-dclass": suite_nongroup_dclass,
    "kernel-decomposition": suite_kernel_decomposition,
    "torsion-evidence": suite_torsion_evidence,
    "enumeration-sanity": suite_enumeration_sanity,
}


def run_suite(name: str, cache_dir=None, threads: int = 1) -> SuiteReport:
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    report = SuiteReport(name)
    t0 = time.perf_counter()
    SUITES[name](report, cache_dir=cache_dir, threads=threads)
    report.duration = time.perf_counter() - t0
    return report
