"""Acceptance criteria, one printed PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.

Pinned tolerances: every comparison is exact rational equality or inequality
(tolerance 0).  Runtime budgets: quick suite 300 s, full suite 3600 s.
"""

from __future__ import annotations

import json
import sys
import time
from fractions import Fraction
from math import comb

import pytest

from hookimm import characters as ch
from hookimm import harness
from hookimm.chromatic import trace_of_graph
from hookimm.immanants import (
    determinant,
    immanant,
    lmw_sign,
    lmw_trivial,
    normalized_immanant,
    permanent,
    to_exact,
)
from hookimm.networks import (
    PathFamily,
    example_network_3,
    families_by_skeleton,
    family_poset,
    immanant_via_network,
    lindstrom_det,
    make_rng,
    path_by_vertices,
    path_matrix,
    random_tnn_network,
)
from hookimm.partitions import hook, kostka, partitions_of, ssyt
from hookimm.posets import (
    Poset,
    algorithm_P_to_C,
    antiadjacency,
    cycle_type,
    enumerate_uios,
    incomparability_graph,
)

TOLERANCE = 0
QUICK_BUDGET_S = 300
FULL_BUDGET_S = 3600
SEED = 0

RESULTS: dict[int, tuple[bool, str]] = {}


def record(num: int, title: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {num} [{'PASS' if ok else 'FAIL'}] {title}" + (f" :: {detail}" if detail else "")
    RESULTS[num] = (ok, line)
    print(line)
    assert ok, line


def test_criterion_1_hook_chain():
    failures, counts, accounted = [], {}, 0
    for n in (3, 4, 5, 6):
        r = harness.verify_hook_chain(n, trials=500, seed=SEED)
        counts[n] = r["summary"]["passed"]
        accounted += sum("marked_tableau_accounting" in t["checks"] for t in r["trials"])
        failures += [t for t in r["trials"] if not t["ok"]]
    uio_total = 0
    for n in range(1, 7):
        r = harness.verify_hook_chain(n, source="poset")
        uio_total += r["summary"]["total"]
        failures += [t for t in r["trials"] if not t["ok"]]
    record(1, "hook chain weakly decreasing from per to det", not failures,
           f"networks passed {counts} (accounting on {accounted}), UIO antiadjacency matrices {uio_total}, "
           f"failures {len(failures)}")


def test_criterion_2_lemma():
    r = harness.verify_lemma(7, random_count=200, seed=SEED)
    exhaustive = sum(1 for i in r["items"] if i["label"].startswith("exhaustive"))
    record(2, "marked-difference counts, injection f_k, image in R_k", r["ok"],
           f"{exhaustive} exhaustive poset classes (n<=5) + {r['random_count']} random (n=6,7); "
           f"failures {r['summary']['failed']}")


def test_criterion_3_lmw():
    rng = make_rng(SEED, 3)
    bad = 0
    for n in range(1, 6):
        for _ in range(50):
            A = to_exact([[Fraction(int(rng.integers(-9, 10)), int(rng.integers(1, 5))) for _ in range(n)]
                          for _ in range(n)])
            for lam in partitions_of(n):
                bad += immanant(ch.named_trace("epsilon", lam), A) != lmw_sign(lam, A)
                bad += immanant(ch.named_trace("eta", lam), A) != lmw_trivial(lam, A)
    record(3, "LMW sign/trivial identities", bad == 0, f"50 random rational matrices per n<=5, mismatches {bad}")


def test_criterion_4_hook_kostka():
    bad = 0
    for n in range(1, 9):
        for k in range(1, n + 1):
            for mu in partitions_of(n):
                by_search = sum(1 for _ in ssyt(hook(n, k), mu))
                bad += not (by_search == kostka(hook(n, k), mu) == comb(len(mu) - 1, n - k))
    named_values = kostka((4, 1, 1), (2, 2, 1, 1)) == kostka((4, 1, 1), (3, 1, 1, 1)) == 3
    record(4, "hook Kostka numbers are binomials", bad == 0 and named_values,
           f"n<=8 against SSYT backtracking, mismatches {bad}; K_411,2211 = K_411,3111 = 3: {named_values}")


def test_criterion_5_algorithm():
    bad = 0
    for n in range(1, 7):
        for P in enumerate_uios(n):
            res = algorithm_P_to_C(P)
            G = incomparability_graph(res.poset)
            types = [cycle_type(v) for v in res.ideal]
            for lam in partitions_of(n):
                eps = ch.named_trace("epsilon", lam)
                bad += sum(eps[t] for t in types) != trace_of_graph(eps, G)
    ex = algorithm_P_to_C(Poset(5, [(1, 4), (1, 5), (2, 5)]))
    example = ex.betas == (-2, -1, 0, 1, 2) and ex.w == (3, 4, 5, 2, 1)
    cat = harness.verify_bijection(7, ideal_check_max=0)
    catalan = all(i["uio_count"] == i["catalan"] for i in cat["items"]) and cat["ok"]
    record(5, "Bruhat-ideal sums equal coloring counts; example; Catalan", bad == 0 and example and catalan,
           f"UIOs n<=6 mismatches {bad}; beta/w example {example}; Catalan n<=7 {catalan}")


def _printed_matrix(a, b, c, d, e, f, g, h):
    return [
        [1, b + c, b * h],
        [a, a * b + a * c + e + f, a * b * h + f * h + e * h + e * g],
        [0, e + f, d * h + e * h + f * h + e * g + d * g],
    ]


def test_criterion_6_networks():
    assignments = [
        dict(a=1, b=1, c=1, d=1, e=1, f=1, g=1, h=1),
        dict(a=2, b=3, c=5, d=7, e=11, f=13, g=17, h=19),
        dict(a=Fraction(1, 2), b=Fraction(2, 3), c=3, d=Fraction(5, 4), e=Fraction(1, 5), f=Fraction(7, 2), g=1,
             h=Fraction(1, 3)),
    ]
    entry_mismatch, det_ok = set(), True
    for w in assignments:
        w = {k: Fraction(v) for k, v in w.items()}
        F = example_network_3(**w)
        A = path_matrix(F)
        shown = _printed_matrix(**w)
        entry_mismatch |= {(i + 1, j + 1) for i in range(3) for j in range(3) if A[i][j] != shown[i][j]}
        det_ok &= determinant(A) == w["f"] * w["d"] * w["g"] == lindstrom_det(F)
    F = example_network_3()
    pv = lambda *v: path_by_vertices(F, v)  # noqa: E731
    first = pv("s1", "u1", "t1")
    fams = [
        PathFamily((first, pv("s2", "u2", "v", "t2"), pv("s3", "u2", "u3", "v", "t3"))),
        PathFamily((first, pv("s2", "u2", "u3", "v", "t2"), pv("s3", "u2", "v", "t3"))),
        PathFamily((first, pv("s2", "u1", "v", "t2"), pv("s3", "u2", "v", "t3"))),
        PathFamily((first, pv("s2", "u2", "v", "t2"), pv("s3", "u2", "v", "t3"))),
    ]
    skel_ok = set(families_by_skeleton(F)[fams[0].skeleton()]) == {fams[0], fams[1]}
    theta_count = sum(trace_of_graph(ch.theta_level(3, 2), incomparability_graph(family_poset(p))) for p in fams)
    network_ok = True
    for n in range(1, 5):
        for t in range(3):
            N = random_tnn_network(n, min(6, 2 * n), SEED, t)
            A = path_matrix(N)
            for fam in ("chi", "epsilon", "eta", "phi", "gamma", "psi"):
                for lam in partitions_of(n):
                    theta = ch.named_trace(fam, lam)
                    network_ok &= immanant_via_network(theta, N) == immanant(theta, A)
    ok = not entry_mismatch and det_ok and skel_ok and theta_count == 7 and network_ok
    record(6, "example network, skeletons, theta^2 count, network immanants", ok,
           f"entries differing from the printed matrix {sorted(entry_mismatch)} (network gives d+e+f at (3,2)); "
           f"det = fdg {det_ok}; Pi_e(K_1) = {{pi, rho}} {skel_ok}; theta^2 count {theta_count}; "
           f"six families n<=4 {network_ok}")


def test_criterion_7_nonnegativity():
    bad = {"chi": 0, "theta": 0, "hikita": 0, "bounds": 0}
    for n in range(1, 7):
        for A in harness.tnn_samples(n, 60, SEED):
            det, per = determinant(A), permanent(A)
            for lam in partitions_of(n):
                chi = ch.irreducible_character(lam)
                v = immanant(chi, A)
                bad["chi"] += v < 0
                bad["bounds"] += not det <= normalized_immanant(chi, A) <= per
            for ell in range(1, n + 1):
                bad["theta"] += immanant(ch.theta_level(n, ell), A) < 0
        for P in enumerate_uios(n):
            A = antiadjacency(algorithm_P_to_C(P, with_ideal=False).poset)
            bad["hikita"] += sum(immanant(ch.named_trace("phi", lam), A) < 0 for lam in partitions_of(n))
    record(7, "character, theta-level and monomial-antiadjacency immanants nonnegative; det/per bounds",
           not any(bad.values()), f"60 TNN samples per n<=6 + all UIOs n<=6; violations {bad}")


def test_criterion_8_characters():
    orth = all(harness.check_orthogonality(n) for n in range(1, 8))
    dims = all(ch.irreducible_character(l).at_identity() == len([1 for _ in ssyt(l, (1,) * n)])
               for n in range(1, 8) for l in partitions_of(n))
    roundtrip = all(ch.inverse_frobenius(ch.frobenius(ch.named_trace(f, l))) == ch.named_trace(f, l)
                    for n in range(1, 8) for l in partitions_of(n)
                    for f in ("chi", "epsilon", "eta", "phi", "gamma", "psi"))
    # the identity as stated: binomial difference == printed piecewise form
    printed_bad = [(n, k, l + 1) for n in range(2, 11) for k in range(2, n + 1)
                   for l, (x, y) in enumerate(zip(ch.hook_difference_direct(n, k), ch.hook_difference_printed(n, k)))
                   if x != y]
    closed_ok = all(ch.hook_difference_direct(n, k) == ch.hook_difference_coefficients(n, k)
                    and min(ch.hook_difference_coefficients(n, k)) >= 0
                    for n in range(2, 11) for k in range(2, n + 1))
    record(8, "character table, Frobenius roundtrip, difference-coefficient identity",
           orth and dims and roundtrip and not printed_bad,
           f"orthogonality {orth}; degrees {dims}; roundtrip {roundtrip}; printed piecewise form differs from the "
           f"binomial difference at {len(printed_bad)} (n,k,l) triples, first {printed_bad[:3]}; "
           f"closed form binom(l-1,n-k)(n-l)/((k-1)binom(n-1,k-1)) agrees and is nonnegative: {closed_ok}")


@pytest.mark.slow
def test_criterion_9_suite_runtime():
    t = time.perf_counter()
    quick = harness.run_suite("quick", SEED)
    t_quick = time.perf_counter() - t
    quick_again = harness.run_suite("quick", SEED)
    t = time.perf_counter()
    full = harness.run_suite("full", SEED)
    t_full = time.perf_counter() - t
    full_again = harness.run_suite("full", SEED)
    det = json.dumps(quick) == json.dumps(quick_again) and json.dumps(full) == json.dumps(full_again)
    ok = quick["ok"] and full["ok"] and det and t_quick < QUICK_BUDGET_S and t_full < FULL_BUDGET_S
    record(9, "suite quick/full pass within budget and are deterministic", ok,
           f"quick {t_quick:.1f}s ({quick['summary']['passed']}/{quick['summary']['total']}), "
           f"full {t_full:.1f}s ({full['summary']['passed']}/{full['summary']['total']}), identical reruns {det}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
