"""Reproducible verification runs and the property suite.

Every entry point returns a JSON-ready dict with an ``ok`` flag.  Reports hold
exact values as rational strings and never include timings, so the same seed
and flags give byte-identical output.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Callable
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import comb, factorial

from . import characters as ch
from .chromatic import (
    acyclic_orientations_with_sources,
    chromatic_symmetric_function,
    colorings_of_type,
    eta_by_orientations,
    trace_of_graph,
)
from .immanants import (
    determinant,
    hook_chain,
    immanant,
    is_totally_nonnegative,
    lmw_sign,
    lmw_trivial,
    normalized_immanant,
    permanent,
    to_exact,
)
from .networks import (
    family_count,
    factor_to_network,
    immanant_via_network,
    lindstrom_det,
    make_rng,
    path_matrix,
    random_tnn_network,
    totally_positive_network,
    weighted_posets,
    weighted_tableau_count,
)
from .partitions import (
    Partition,
    class_size,
    hook,
    hook_kostka,
    kostka,
    majorizes,
    partitions_of,
    pate_successor,
    syt_count,
    transpose,
    z_value,
)
from .posets import (
    Poset,
    algorithm_P_to_C,
    antiadjacency,
    avoids_312,
    check_lemma,
    chi_hook_eval,
    cycle_type,
    enumerate_posets,
    enumerate_ptableaux,
    enumerate_uios,
    incomparability_graph,
    is_31_free,
    is_unit_interval_order,
    random_poset,
)

log = logging.getLogger(__name__)

ACCOUNTING_FAMILY_CAP = 5000


def fstr(x) -> str:
    return str(Fraction(x))


def matrix_json(A) -> list[list[str]]:
    return [[fstr(v) for v in row] for row in A]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "ok": self.ok, **self.detail}


def _summary(report: dict, items: list[dict]) -> dict:
    failed = sum(1 for t in items if not t["ok"])
    report["summary"] = {"total": len(items), "passed": len(items) - failed, "failed": failed}
    report["ok"] = failed == 0
    return report


# -- hook chain ---------------------------------------------------------------


@lru_cache(maxsize=4096)
def _marked_counts(P: Poset) -> tuple[int, ...]:
    from .posets import marked_difference_count

    return tuple(marked_difference_count(P, k) for k in range(2, P.n + 1))


def hook_chain_trial(A, network=None, accounting: bool = True) -> dict:
    """Check the hook chain of one matrix; optionally the marked-tableau accounting."""
    A = to_exact(A)
    n = len(A)
    chain = hook_chain(A)
    per, det = permanent(A), determinant(A)
    checks = {
        "weakly_decreasing": all(chain[i] >= chain[i + 1] for i in range(n - 1)),
        "top_is_permanent": chain[0] == per,
        "bottom_is_determinant": chain[-1] == det,
    }
    witness: dict = {"matrix": matrix_json(A), "chain": [fstr(v) for v in chain]}
    if network is not None and accounting and n >= 2:
        fc = family_count(network)
        if fc <= ACCOUNTING_FAMILY_CAP:
            wp = weighted_posets(network)
            ok = True
            for k in range(2, n + 1):
                lhs = (k - 1) * immanant(ch.hook_character(n, k), A) - (n - k + 1) * immanant(
                    ch.hook_character(n, k - 1), A
                )
                rhs = sum((w * _marked_counts(P)[k - 2] for P, w in wp.items()), Fraction(0))
                ok &= lhs == rhs and lhs >= 0
            checks["marked_tableau_accounting"] = ok
        else:
            witness["accounting_skipped"] = f"{fc} families > {ACCOUNTING_FAMILY_CAP}"
    return {"checks": checks, "ok": all(checks.values()), "witness": witness}


def _network_trial(args) -> dict:
    n, depth, seed, t, accounting = args
    F = random_tnn_network(n, depth, seed, t)
    out = hook_chain_trial(path_matrix(F), F, accounting)
    out["trial"] = t
    out["source"] = {"kind": "network", "n": n, "depth": depth, "seed": seed, "trial": t, "network": F.to_json()}
    return out


def _map(fn, items, jobs: int):
    if jobs <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=8))


def verify_hook_chain(
    n: int = 4,
    depth: int | None = None,
    trials: int = 100,
    seed: int = 0,
    source: str = "network",
    path: str | None = None,
    accounting: bool = True,
    jobs: int = 1,
) -> dict:
    depth = 2 * n if depth is None else depth
    report: dict = {"command": "verify-hook-chain", "n": n, "source": source, "seed": seed}
    if source == "network":
        report.update(depth=depth, trials=trials)
        items = _map(_network_trial, [(n, depth, seed, t, accounting) for t in range(trials)], jobs)
    elif source == "poset":
        items = []
        for t, P in enumerate(enumerate_uios(n)):
            res = algorithm_P_to_C(P, with_ideal=False)
            out = hook_chain_trial(antiadjacency(res.poset))
            out["trial"] = t
            out["source"] = {"kind": "poset", "poset": res.poset.to_json(), "w": list(res.w)}
            items.append(out)
    elif source == "file":
        if path is None:
            raise ValueError("source=file needs a path")
        with open(path) as fh:
            data = json.load(fh)
        mats = data if data and isinstance(data[0][0], list) else [data]
        items = []
        for t, M in enumerate(mats):
            A = to_exact(M)
            out = hook_chain_trial(A)
            out["checks"]["input_is_tnn"] = is_totally_nonnegative(A)
            out["trial"] = t
            out["source"] = {"kind": "file", "path": path}
            items.append(out)
    else:
        raise ValueError(f"unknown source {source!r}")
    report["trials"] = items
    return _summary(report, items)


# -- marked hook tableaux ------------------------------------------------------


def _lemma_item(P: Poset, label: str) -> dict:
    results = [check_lemma(P, k) for k in range(2, P.n + 1)]
    return {
        "poset": P.to_json(),
        "label": label,
        "ok": all(r.ok for r in results),
        "checks": [
            {"k": r.k, "difference": r.difference, "marked": r.marked_count, "injective": r.injective,
             "image_in_R": r.image_in_R, "complement_matches": r.complement_matches}
            for r in results
        ],
    }


def verify_lemma(max_n: int = 7, random_count: int = 200, seed: int = 0, exhaustive_max: int = 5) -> dict:
    items = []
    for n in range(1, min(max_n, exhaustive_max) + 1):
        for P in enumerate_posets(n):
            items.append(_lemma_item(P, f"exhaustive n={n}"))
    random_ns = [n for n in range(exhaustive_max + 1, max_n + 1)]
    if random_ns:
        rng = make_rng(seed, 10_000)
        for t in range(random_count):
            n = random_ns[t % len(random_ns)]
            items.append(_lemma_item(random_poset(n, rng), f"random n={n} #{t}"))
    report = {"command": "verify-lemma", "max_n": max_n, "seed": seed, "random_count": random_count if random_ns else 0}
    report["items"] = items
    return _summary(report, items)


# -- poset -> permutation bijection ---------------------------------------------


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def verify_bijection(max_n: int = 7, ideal_check_max: int = 6) -> dict:
    items = []
    for n in range(1, max_n + 1):
        uios = enumerate_uios(n)
        ws = []
        all_uio = all(is_unit_interval_order(P) for P in uios)
        for P in uios:
            ws.append(algorithm_P_to_C(P, with_ideal=False).w)
        targets = {w for w in permutations(range(1, n + 1)) if avoids_312(w)}
        item = {
            "n": n,
            "uio_count": len(uios),
            "catalan": catalan(n),
            "all_are_uio": all_uio,
            "all_312_avoiding": all(avoids_312(w) for w in ws),
            "injective": len(set(ws)) == len(ws),
            "image_is_all_312_avoiding": set(ws) == targets,
        }
        if n <= 5:
            canon = {P.canonical_form() for P in uios}
            brute = {P.canonical_form() for P in enumerate_posets(n) if is_unit_interval_order(P)}
            item["matches_brute_force_classes"] = canon == brute and len(canon) == len(uios)
        if n <= ideal_check_max:
            item["ideal_sums_match_colorings"] = all(_ideal_sums_match(P) for P in uios)
        item["ok"] = all(v for k, v in item.items() if isinstance(v, bool)) and item["uio_count"] == item["catalan"]
        items.append(item)
    return _summary({"command": "verify-bijection", "max_n": max_n, "items": items}, items)


def _ideal_sums_match(P: Poset) -> bool:
    res = algorithm_P_to_C(P)
    G = incomparability_graph(res.poset)
    types = [cycle_type(v) for v in res.ideal]
    for lam in partitions_of(P.n):
        eps = ch.named_trace("induced_sign", lam)
        if sum((eps[t] for t in types), Fraction(0)) != colorings_of_type(G, lam):
            return False
    return True


# -- Hikita via antiadjacency matrices ----------------------------------------------


def verify_hikita(max_n: int = 6) -> dict:
    items = []
    for n in range(1, max_n + 1):
        for P in enumerate_uios(n):
            res = algorithm_P_to_C(P, with_ideal=n <= 8)
            A = antiadjacency(res.poset)
            G = incomparability_graph(res.poset)
            types = [cycle_type(v) for v in res.ideal] if res.ideal is not None else None
            values, ok = {}, True
            for lam in partitions_of(n):
                phi = ch.named_trace("monomial", lam)
                v = immanant(phi, A)
                ok &= v >= 0
                ok &= v == trace_of_graph(phi, G)
                if types is not None:
                    ok &= v == sum((phi[t] for t in types), Fraction(0))
                values[str(lam)] = fstr(v)
            items.append({"n": n, "w": list(res.w), "ok": bool(ok), "values": values})
    return _summary({"command": "verify-hikita", "max_n": max_n, "items": items}, items)


# -- Pate exploration -----------------------------------------------------------


def _pate_trial(args) -> dict:
    n, depth, seed, t = args
    A = path_matrix(random_tnn_network(n, depth, seed, t))
    violations = []
    comparisons = 0
    for lam in partitions_of(n):
        if lam[0] == 1:
            continue
        mu = pate_successor(lam)
        lhs = normalized_immanant(ch.irreducible_character(lam), A)
        rhs = normalized_immanant(ch.irreducible_character(mu), A)
        comparisons += 1
        if lhs < rhs:
            violations.append({"lambda": list(lam), "mu": list(mu), "lhs": fstr(lhs), "rhs": fstr(rhs),
                               "matrix": matrix_json(A)})
    return {"trial": t, "comparisons": comparisons, "violations": violations}


def explore_pate(n: int = 5, trials: int = 200, seed: int = 0, depth: int | None = None, jobs: int = 1) -> dict:
    """Compare normalized chi^lam and chi^mu immanants for mu the Pate successor of lam.

    Findings are data: the report is ``ok`` unless a hook pair (a proven case)
    is violated.
    """
    depth = 2 * n if depth is None else depth
    rows = _map(_pate_trial, [(n, depth, seed, t) for t in range(trials)], jobs)
    violations = [v for r in rows for v in r["violations"]]
    hook_violations = [v for v in violations if Partition(v["lambda"]).is_hook()]
    return {
        "command": "explore-pate",
        "n": n,
        "trials": trials,
        "seed": seed,
        "depth": depth,
        "comparisons": sum(r["comparisons"] for r in rows),
        "violations": violations,
        "hook_violations": len(hook_violations),
        "ok": not hook_violations,
    }


# -- property suite -------------------------------------------------------------------


def _random_rational_matrix(n: int, rng, signed: bool = True):
    lo = -9 if signed else 0
    return to_exact([[Fraction(int(rng.integers(lo, 10)), int(rng.integers(1, 5))) for _ in range(n)] for _ in range(n)])


def tnn_samples(n: int, count: int, seed: int):
    out = []
    for t in range(count):
        out.append(path_matrix(random_tnn_network(n, 2 * n, seed, t)))
    return out


def check_orthogonality(n: int, table=None) -> bool:
    parts = partitions_of(n)
    table = ch.character_table(n) if table is None else table
    for a in range(len(parts)):
        for b in range(len(parts)):
            s = sum((Fraction(table[a][c] * table[b][c], z_value(parts[c])) for c in range(len(parts))), Fraction(0))
            if s != (a == b):
                return False
    return True


def _families_of_traces(n: int):
    for fam in ("irreducible", "induced_sign", "induced_trivial", "power_sum", "monomial", "forgotten"):
        for lam in partitions_of(n):
            yield fam, lam, ch.named_trace(fam, lam)


SUITE_SIZES = {"quick": 5, "full": 7}


def run_suite(level: str = "quick", seed: int = 0, fault: str | None = None) -> dict:
    cap = SUITE_SIZES[level]
    checks: list[CheckResult] = []

    def add(module: str, name: str, fn: Callable[[], bool], **detail):
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash is a failed check with its message
            log.exception("check %s.%s raised", module, name)
            ok, detail = False, {**detail, "error": repr(exc)}
        checks.append(CheckResult(f"{module}.{name}", ok, detail))
        log.info("%s.%s: %s", module, name, "pass" if ok else "FAIL")

    N = lambda m: min(cap, m)  # noqa: E731

    # partitions
    add("partitions", "transpose_involution",
        lambda: all(transpose(transpose(l)) == l for n in range(1, N(9) + 1) for l in partitions_of(n)))
    add("partitions", "hook_kostka",
        lambda: all(kostka(hook(n, k), mu) == hook_kostka(k, mu)
                    for n in range(1, N(8) + 1) for k in range(1, n + 1) for mu in partitions_of(n)))
    add("partitions", "syt_equals_kostka",
        lambda: all(syt_count(l) == kostka(l, (1,) * n) for n in range(1, N(8) + 1) for l in partitions_of(n)))
    add("partitions", "class_sizes",
        lambda: all(sum(class_size(l) for l in partitions_of(n)) == factorial(n) for n in range(1, 11)))
    add("partitions", "majorization_partial_order", lambda: _majorization_order(N(8)))

    # characters
    if fault == "character-table":
        def orth():
            t = [list(r) for r in ch.character_table(4)]
            t[1][0] += 1
            return check_orthogonality(4, t) and all(check_orthogonality(n) for n in range(1, N(7) + 1))
        add("characters", "orthogonality", orth, fault_injected=True)
    else:
        add("characters", "orthogonality", lambda: all(check_orthogonality(n) for n in range(1, N(7) + 1)))
    add("characters", "dimension_is_syt",
        lambda: all(ch.irreducible_character(l).at_identity() == syt_count(l)
                    for n in range(1, N(7) + 1) for l in partitions_of(n)))
    add("characters", "frobenius_roundtrip",
        lambda: all(ch.inverse_frobenius(ch.frobenius(t)) == t for n in range(1, N(7) + 1) for *_, t in _families_of_traces(n)))
    add("characters", "kostka_relations", lambda: all(_kostka_relations(n) for n in range(1, N(7) + 1)))
    add("characters", "hook_theta_expansion", lambda: all(_hook_theta(n) for n in range(1, N(7) + 1)))
    add("characters", "difference_coefficients", lambda: _difference_coefficients(10, N(7)))

    # immanants
    rng = make_rng(seed, 1)
    add("immanants", "lmw_identities", lambda: _lmw_check(min(cap, 5), 50 if level == "full" else 10, rng))
    add("immanants", "det_per_agree", lambda: _det_per_check(N(6), rng))
    add("immanants", "tnn_inequalities", lambda: _tnn_inequalities(N(6), 40 if level == "full" else 10, seed))

    # posets
    add("posets", "algorithm_312_catalan", lambda: verify_bijection(N(7), ideal_check_max=N(6))["ok"])
    add("posets", "hook_lemma", lambda: verify_lemma(N(7), 200 if level == "full" else 20, seed)["ok"])
    add("posets", "antiadjacency_tnn", lambda: all(
        is_totally_nonnegative(antiadjacency(algorithm_P_to_C(P, with_ideal=False).poset))
        for n in range(1, N(6) + 1) for P in enumerate_uios(n)))
    add("posets", "hikita_antiadjacency", lambda: verify_hikita(N(6))["ok"])

    # chromatic
    add("chromatic", "basis_readings", lambda: _basis_readings(N(6)))
    add("chromatic", "eta_orientations", lambda: _eta_orientations(N(5)))
    add("chromatic", "theta_sources", lambda: _theta_sources(N(6)))
    add("chromatic", "hikita_31_free", lambda: _hikita_31_free(N(6)))
    add("chromatic", "hook_chi_nonnegative", lambda: all(
        chi_hook_eval(P, k) == trace_of_graph(ch.hook_character(n, k), incomparability_graph(P)) >= 0
        for n in range(1, N(5) + 1) for P in enumerate_posets(n) for k in range(1, n + 1)))

    # networks
    add("networks", "network_immanants", lambda: _network_immanants(N(4), seed))
    add("networks", "lindstrom", lambda: _lindstrom(N(5), seed))
    add("networks", "theta_records", lambda: _theta_records(N(4), seed))
    add("networks", "factorization_roundtrip", lambda: _factor_roundtrip(N(5), seed))

    # main theorem
    add("main", "hook_chain_networks", lambda: all(
        verify_hook_chain(n, trials=100 if level == "full" else 25, seed=seed)["ok"] for n in range(2, N(6) + 1)))
    add("main", "hook_chain_uios", lambda: all(
        verify_hook_chain(n, source="poset")["ok"] for n in range(1, N(6) + 1)))

    items = [c.to_json() for c in checks]
    report = {"command": "suite", "level": level, "seed": seed, "fault": fault, "checks": items}
    return _summary(report, items)


def _majorization_order(m: int) -> bool:
    for n in range(1, m + 1):
        ps = partitions_of(n)
        for a in ps:
            if not majorizes(a, a):
                return False
            for b in ps:
                if a != b and majorizes(a, b) and majorizes(b, a):
                    return False
                for c in ps:
                    if majorizes(a, b) and majorizes(b, c) and not majorizes(a, c):
                        return False
    return True


def _kostka_relations(n: int) -> bool:
    for lam in partitions_of(n):
        chi = ch.irreducible_character(lam)
        via_phi = ch.trace_combination((kostka(lam, mu), ch.named_trace("monomial", mu)) for mu in partitions_of(n))
        via_gamma = ch.trace_combination(
            (kostka(transpose(lam), mu), ch.named_trace("forgotten", mu)) for mu in partitions_of(n))
        if via_phi != chi or via_gamma != chi:
            return False
        if ch.named_trace("monomial", lam) != ch.inverse_frobenius(ch.SymmetricFunction.basis_element("m", lam)):
            return False
        if ch.named_trace("forgotten", lam) != ch.inverse_frobenius(ch.SymmetricFunction.basis_element("f", lam)):
            return False
    return True


def _hook_theta(n: int) -> bool:
    for k in range(1, n + 1):
        coeffs = ch.hook_in_theta_basis(n, k)
        combo = ch.trace_combination((c, ch.theta_level(n, l)) for l, c in enumerate(coeffs, start=1))
        if combo != ch.hook_character(n, k):
            return False
    return True


def _difference_coefficients(n_max: int, trace_max: int) -> bool:
    for n in range(2, n_max + 1):
        for k in range(2, n + 1):
            c = ch.hook_difference_coefficients(n, k)
            if c != ch.hook_difference_direct(n, k) or min(c) < 0:
                return False
            if n <= trace_max:
                diff = ch.hook_character(n, k) * Fraction(1, comb(n - 1, k - 1)) - ch.hook_character(
                    n, k - 1) * Fraction(1, comb(n - 1, k - 2))
                if diff != ch.trace_combination((x, ch.theta_level(n, l)) for l, x in enumerate(c, start=1)):
                    return False
    return True


def _lmw_check(n_max: int, count: int, rng) -> bool:
    for n in range(1, n_max + 1):
        for _ in range(count):
            A = _random_rational_matrix(n, rng)
            for lam in partitions_of(n):
                if immanant(ch.named_trace("induced_sign", lam), A) != lmw_sign(lam, A):
                    return False
                if immanant(ch.named_trace("induced_trivial", lam), A) != lmw_trivial(lam, A):
                    return False
    return True


def _det_per_check(n_max: int, rng) -> bool:
    for n in range(1, n_max + 1):
        for _ in range(5):
            A = _random_rational_matrix(n, rng)
            if immanant(ch.sign_character(n), A) != determinant(A):
                return False
            if immanant(ch.trivial_character(n), A) != permanent(A):
                return False
    return True


def _tnn_inequalities(n_max: int, count: int, seed: int) -> bool:
    for n in range(1, n_max + 1):
        for A in tnn_samples(n, count, seed):
            det, per = determinant(A), permanent(A)
            for lam in partitions_of(n):
                chi = ch.irreducible_character(lam)
                v = immanant(chi, A)
                if v < 0 or not det <= v / chi.at_identity() <= per:
                    return False
            for ell in range(1, n + 1):
                if immanant(ch.theta_level(n, ell), A) < 0:
                    return False
            eps = {lam: normalized_immanant(ch.named_trace("induced_sign", lam), A) for lam in partitions_of(n)}
            for lam in partitions_of(n):
                for mu in partitions_of(n):
                    if majorizes(mu, lam) and eps[lam] < eps[mu]:
                        return False
    return True


def _basis_readings(n_max: int) -> bool:
    for n in range(1, n_max + 1):
        for P in enumerate_posets(min(n, 5)) if n <= 5 else [random_poset(n, make_rng(0, t)) for t in range(5)]:
            G = incomparability_graph(P)
            X = chromatic_symmetric_function(G)
            for lam in partitions_of(n):
                s = ch.to_basis(X, "s")[lam]
                if s != trace_of_graph(ch.irreducible_character(transpose(lam)), G):
                    return False
                if ch.to_basis(X, "e")[lam] != trace_of_graph(ch.named_trace("monomial", lam), G):
                    return False
                if ch.to_basis(X, "h")[lam] != trace_of_graph(ch.named_trace("forgotten", lam), G):
                    return False
                if ch.to_basis(X, "f")[lam] != trace_of_graph(ch.named_trace("induced_trivial", lam), G):
                    return False
                p = ch.to_basis(X, "p")[lam]
                if p != (-1) ** (n - len(lam)) * trace_of_graph(ch.named_trace("power_sum", lam), G) / z_value(lam):
                    return False
    return True


def _eta_orientations(n_max: int) -> bool:
    for n in range(1, n_max + 1):
        for P in enumerate_posets(n):
            G = incomparability_graph(P)
            for lam in partitions_of(n):
                eta = trace_of_graph(ch.named_trace("induced_trivial", lam), G)
                if eta != eta_by_orientations(G, lam):
                    return False
                if eta != len(enumerate_ptableaux(P, lam, "row_semistrict")):
                    return False
                if trace_of_graph(ch.named_trace("induced_sign", lam), G) != len(
                        enumerate_ptableaux(P, transpose(lam), "column_strict")):
                    return False
    return True


def _theta_sources(n_max: int) -> bool:
    from .posets import records as rec_count

    for n in range(1, n_max + 1):
        posets = enumerate_posets(n) if n <= 5 else enumerate_uios(n)
        for P in posets:
            G = incomparability_graph(P)
            row_tabs = enumerate_ptableaux(P, (n,), "row_semistrict")
            for ell in range(1, n + 1):
                v = trace_of_graph(ch.theta_level(n, ell), G)
                if v != acyclic_orientations_with_sources(G, ell):
                    return False
                if v != sum(1 for U in row_tabs if rec_count(P, U) == ell):
                    return False
    return True


def _hikita_31_free(n_max: int) -> bool:
    for n in range(1, n_max + 1):
        posets = enumerate_posets(n) if n <= 5 else enumerate_uios(n)
        for P in posets:
            if not is_31_free(P):
                continue
            G = incomparability_graph(P)
            if any(trace_of_graph(ch.named_trace("monomial", lam), G) < 0 for lam in partitions_of(n)):
                return False
    return True


def _network_samples(n: int, seed: int, count: int = 4, depth: int = 5):
    return [random_tnn_network(n, depth, seed, 100 + t) for t in range(count)]


def _network_immanants(n_max: int, seed: int) -> bool:
    for n in range(1, n_max + 1):
        for F in _network_samples(n, seed, depth=min(6, 2 * n)):
            A = path_matrix(F)
            for _, _, theta in _families_of_traces(n):
                if immanant_via_network(theta, F) != immanant(theta, A):
                    return False
    return True


def _lindstrom(n_max: int, seed: int) -> bool:
    return all(lindstrom_det(F) == determinant(path_matrix(F))
               for n in range(1, n_max + 1) for F in _network_samples(n, seed, 6, depth=2 * n))


def _theta_records(n_max: int, seed: int) -> bool:
    for n in range(1, n_max + 1):
        for F in _network_samples(n, seed, depth=min(6, 2 * n)):
            A = path_matrix(F)
            for ell in range(1, n + 1):
                total = sum((immanant(ch.named_trace("monomial", mu), A) for mu in partitions_of(n) if len(mu) == ell),
                            Fraction(0))
                if total < 0 or total != weighted_tableau_count(F, (n,), "row_semistrict", records=ell):
                    return False
    return True


def _factor_roundtrip(n_max: int, seed: int) -> bool:
    for n in range(1, n_max + 1):
        for t in range(5):
            A = path_matrix(totally_positive_network(n, make_rng(seed, 200 + t)))
            if path_matrix(factor_to_network(A)) != A:
                return False
    return True
