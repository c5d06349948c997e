"""Graph corpora and the verification suites behind ``depthlab verify``.

Every suite returns a :class:`SuiteReport` whose pass/fail verdicts are
derived from the recorded values alone.  Cases are evaluated in input
order (optionally in worker processes, capped by ``DEPTHLAB_THREADS``),
so identical parameters give identical reports; per-case timings are
kept out of the serialised output unless explicitly requested.
"""

from __future__ import annotations

import csv
import io
import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import comb, factorial, log2
from typing import Callable, Iterable, Iterator

from depthlab import bounds
from depthlab.blocks import block_forest, forest_diameter, verify_p4p5_structure
from depthlab.constructions import chain_graph, chain_size, cycle_graph, grohe_graph, grohe_size, intersection_graph, ladder, path_graph
from depthlab.cores import minimal_s_core
from depthlab.errors import CapacityError, InvalidInputError
from depthlab.extraction import extract_induced_path, guarantee_met
from depthlab.graph import Graph, build_graph, clique_number, is_connected, is_induced_path, is_path, mask_of
from depthlab.params import DepthSolver
from depthlab.pathwidth import pathwidth
from depthlab.paths import hamiltonian_path, is_pt_free, longest_induced_path

EXHAUSTIVE_LIMIT = 6


# -- corpora --------------------------------------------------------------

def enumerate_graphs(n: int, mode: str = "exhaustive", seed: int = 1, count: int = 100, p: float = 0.5) -> Iterator[Graph]:
    """All 2^C(n,2) labelled graphs on n vertices, or ``count`` seeded G(n, p) samples."""
    pairs = list(combinations(range(n), 2))
    if mode == "exhaustive":
        if n > EXHAUSTIVE_LIMIT:
            raise CapacityError(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_LIMIT}")
        for code in range(1 << len(pairs)):
            yield build_graph(n, [e for i, e in enumerate(pairs) if (code >> i) & 1])
    elif mode == "random":
        rng = random.Random(seed)
        for _ in range(count):
            yield build_graph(n, [e for e in pairs if rng.random() < p])
    else:
        raise InvalidInputError(f"unknown enumeration mode {mode!r}")


@dataclass(frozen=True)
class CorpusItem:
    label: str
    graph: Graph


def size_corpus(n: int, random_count: int = 0, seed: int = 1, p: float = 0.5) -> list[CorpusItem]:
    """Exhaustive when ``random_count`` is 0, else seeded samples."""
    if not random_count:
        return [CorpusItem(f"n={n} code={code}", g) for code, g in enumerate(enumerate_graphs(n))]
    # one seed per size keeps each size reproducible on its own
    samples = enumerate_graphs(n, "random", seed=seed * 1000 + n, count=random_count, p=p)
    return [CorpusItem(f"n={n} seed={seed} sample={i}", g) for i, g in enumerate(samples)]


def build_corpus(n_max: int, random_sizes: Iterable[int] = (), random_count: int = 0, seed: int = 1, p: float = 0.5) -> list[CorpusItem]:
    items = []
    for n in range(1, n_max + 1):
        items += size_corpus(n)
    for n in random_sizes:
        items += size_corpus(n, random_count, seed, p)
    return items


@dataclass(frozen=True)
class Profile:
    """Exact measurements of one corpus graph."""

    label: str
    graph: Graph
    td: int
    td2: int
    lip: int
    connected: bool
    forest_diam: int | None


def profile_graph(item: CorpusItem) -> Profile:
    g = item.graph
    solver = DepthSolver(g, apex_rule=False)
    connected = g.n > 0 and is_connected(g)
    return Profile(
        item.label,
        g,
        solver.td(g.full_mask),
        solver.td2(g.full_mask),
        len(longest_induced_path(g)),
        connected,
        forest_diameter(block_forest(g)) if connected else None,
    )


def worker_count(params: dict | None = None) -> int:
    if params and params.get("threads"):
        return max(1, int(params["threads"]))
    try:
        return max(1, int(os.environ.get("DEPTHLAB_THREADS", "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable, items: list, workers: int = 1) -> list:
    """Map in input order; worker processes when ``workers`` > 1."""
    if workers <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (workers * 8))))


@lru_cache(maxsize=None)
def size_profiles(n: int, random_count: int = 0, seed: int = 1, p: float = 0.5, workers: int = 1) -> tuple[Profile, ...]:
    return tuple(parallel_map(profile_graph, size_corpus(n, random_count, seed, p), workers))


def corpus_profiles(n_max: int, random_sizes: tuple[int, ...], random_count: int, seed: int, p: float = 0.5, workers: int = 1) -> tuple[Profile, ...]:
    out: list[Profile] = []
    for n in range(1, n_max + 1):
        out += size_profiles(n, 0, 1, 0.5, workers)
    for n in random_sizes:
        out += size_profiles(n, random_count, seed, p, workers)
    return tuple(out)


# -- reports --------------------------------------------------------------

@dataclass
class CaseRecord:
    case: str
    measured: dict
    bounds: dict
    passed: bool
    seconds: float = 0.0
    graph: dict | None = None

    def to_json(self, timings: bool = False) -> dict:
        doc = {"case": self.case, "measured": self.measured, "bounds": self.bounds, "passed": self.passed}
        if self.graph is not None:
            doc["graph"] = self.graph
        if timings:
            doc["seconds"] = round(self.seconds, 6)
        return doc


@dataclass
class SuiteReport:
    suite: str
    params: dict
    cases: list[CaseRecord] = field(default_factory=list)
    observations: dict = field(default_factory=dict)

    @property
    def failures(self) -> list[CaseRecord]:
        return [c for c in self.cases if not c.passed]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        return {"cases": len(self.cases), "passed": len(self.cases) - len(self.failures), "failed": len(self.failures)}

    def add(self, case: str, measured: dict, bound_values: dict, passed: bool, graph: Graph | None = None, seconds: float = 0.0) -> None:
        embed = graph.to_json() if (graph is not None and not passed) else None
        self.cases.append(CaseRecord(case, measured, bound_values, bool(passed), seconds, embed))

    def to_json(self, timings: bool = False) -> str:
        doc = {
            "suite": self.suite,
            "params": self.params,
            "summary": self.summary(),
            "observations": self.observations,
            "cases": [c.to_json(timings) for c in self.cases],
        }
        return json.dumps(doc, indent=1, sort_keys=True, default=list)

    def to_csv(self, timings: bool = False) -> str:
        out = io.StringIO()
        fields = ["case", "passed", "measured", "bounds"] + (["seconds"] if timings else [])
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(fields)
        for c in self.cases:
            row = [c.case, int(c.passed), json.dumps(c.measured, sort_keys=True), json.dumps(c.bounds, sort_keys=True)]
            if timings:
                row.append(f"{c.seconds:.6f}")
            writer.writerow(row)
        return out.getvalue()

    def to_table(self, verbose: bool = False) -> str:
        s = self.summary()
        lines = [f"suite {self.suite}: {s['passed']}/{s['cases']} cases passed, {s['failed']} failed"]
        shown = self.cases if verbose else self.failures
        for c in shown:
            mark = "ok  " if c.passed else "FAIL"
            lines.append(f"  {mark} {c.case}  measured={json.dumps(c.measured, sort_keys=True)}  bounds={json.dumps(c.bounds, sort_keys=True)}")
            if c.graph is not None:
                lines.append(f"       graph={json.dumps(c.graph)}")
        for key in sorted(self.observations):
            lines.append(f"  observed {key}: {json.dumps(self.observations[key], sort_keys=True)}")
        return "\n".join(lines)


# -- suites ---------------------------------------------------------------

def _profiles(params: dict) -> tuple[Profile, ...]:
    return corpus_profiles(
        int(params["n_max"]),
        tuple(int(x) for x in params.get("random_sizes", ())),
        int(params.get("random_count", 0)),
        int(params.get("seed", 1)),
        float(params.get("p", 0.5)),
        worker_count(params),
    )


def suite_definitions(params: dict) -> SuiteReport:
    report = SuiteReport("definitions", params)
    for m in range(2, int(params["path_max"]) + 1):
        g = path_graph(m)
        v = DepthSolver(g, apex_rule=False).td2(g.full_mask)
        report.add(f"P{m}", {"td2": v}, {"expected": 2}, v == 2, g)
    for m in range(3, int(params["cycle_max"]) + 1):
        g = cycle_graph(m)
        v = DepthSolver(g, apex_rule=False).td2(g.full_mask)
        report.add(f"C{m}", {"td2": v}, {"expected": 3}, v == 3, g)
    for pr in _profiles(params):
        report.add(pr.label, {"td": pr.td, "td2": pr.td2}, {}, pr.td2 <= pr.td, pr.graph)
    return report


def suite_main_theorem(params: dict) -> SuiteReport:
    report = SuiteReport("main-theorem", params)
    ts = [int(t) for t in params["ts"]]
    observed: dict[str, int] = {}
    for pr in _profiles(params):
        if pr.td2 < 1:
            continue
        k = pr.td2
        measured = {"td": pr.td, "td2": k, "lip": pr.lip}
        bound_values = {}
        ok = True
        for t in ts:
            if pr.lip < t:
                f, gu = bounds.f_value(k, t), bounds.g_upper(k, t)
                bound_values[f"f(k,{t})"] = f
                bound_values[f"g_upper(k,{t})"] = gu
                ok = ok and pr.td <= f < gu
                key = f"k={k} t={t}"
                observed[key] = max(observed.get(key, 0), pr.td)
        if pr.lip < 3:
            # P3-free: disjoint cliques, so td = td2 = clique number
            omega = clique_number(pr.graph)
            measured["omega"] = omega
            ok = ok and pr.td == omega == k
        report.add(pr.label, measured, bound_values, ok, pr.graph)
    report.observations = {
        "max_td_vs_conjectured_g": {
            key: {"max_td": v, "conjectured_g": bounds.conjectured_g(int(key.split()[0][2:]), int(key.split()[1][2:]))}
            for key, v in sorted(observed.items())
        }
    }
    return report


def suite_p4p5(params: dict) -> SuiteReport:
    report = SuiteReport("p4p5", params)
    for pr in _profiles(params):
        k = pr.td2
        measured = {"td": pr.td, "td2": k, "lip": pr.lip}
        bound_values = {}
        ok = True
        if pr.lip < 4:
            bound_values["td_equals"] = k
            ok = ok and pr.td == k
        if pr.lip < 5:
            bound_values["td_at_most"] = comb(k + 1, 2)
            ok = ok and pr.td <= comb(k + 1, 2)
        if pr.connected and pr.lip < 5:
            structure = verify_p4p5_structure(pr.graph)
            measured["structure_items_checked"] = structure.applicable
            ok = ok and not structure.violations
        report.add(pr.label, measured, bound_values, ok, pr.graph)
    return report


def suite_diam(params: dict) -> SuiteReport:
    report = SuiteReport("diam", params)
    ts = [int(t) for t in params["ts"]]
    for pr in _profiles(params):
        if not pr.connected:
            continue
        d = pr.forest_diam
        bound_values = {f"t={t}": 2 * (t - 3) for t in ts if pr.lip < t}
        ok = d % 2 == 0 and all(d <= 2 * (t - 3) for t in ts if pr.lip < t)
        report.add(pr.label, {"forest_diameter": d, "lip": pr.lip}, bound_values, ok, pr.graph)
    return report


def _score_case(g: Graph, solver: DepthSolver, s: frozenset[int]) -> tuple[int, int, int]:
    lhs = solver.tds(g.full_mask, mask_of(s))
    core = minimal_s_core(g, s)
    rhs = DepthSolver(core.graph).tds(core.graph.full_mask, mask_of(core.relabel(s)))
    return lhs, rhs, len(core.vertices)


def suite_s_core(params: dict) -> SuiteReport:
    report = SuiteReport("s-core", params)
    for n in range(1, int(params["n_max"]) + 1):
        for code, g in enumerate(enumerate_graphs(n)):
            solver = DepthSolver(g)
            for smask in range(1 << n):
                s = frozenset(v for v in range(n) if (smask >> v) & 1)
                lhs, rhs, size = _score_case(g, solver, s)
                report.add(f"n={n} code={code} S={smask}", {"td(G,S)": lhs, "td(core,S)": rhs, "core_size": size}, {}, lhs == rhs, g)
    seed = int(params.get("seed", 1))
    for n in params.get("random_sizes", ()):
        n = int(n)
        rng = random.Random(seed * 1000 + n)
        for i, g in enumerate(enumerate_graphs(n, "random", seed=seed * 1000 + n, count=int(params["random_count"]))):
            s = frozenset(v for v in range(n) if rng.random() < 0.5)
            lhs, rhs, size = _score_case(g, DepthSolver(g), s)
            report.add(f"n={n} seed={seed} sample={i} S={sorted(s)}", {"td(G,S)": lhs, "td(core,S)": rhs, "core_size": size}, {}, lhs == rhs, g)
    return report


def grohe_parameters(max_vertices: int, r_max: int, k_max: int) -> list[tuple[int, int]]:
    out = []
    for r in range(1, r_max + 1):
        for k in range(1, k_max + 1):
            if grohe_size(r, k) <= max_vertices:
                out.append((r, k))
    return out


def suite_grohe(params: dict) -> SuiteReport:
    report = SuiteReport("constructions-grohe", params)
    cap = int(params["max_vertices"])
    pairs = grohe_parameters(cap, int(params["r_max"]), int(params["k_max"]))
    td_cache: dict[tuple[int, int], int] = {}
    for r, k in pairs:
        start = time.perf_counter()
        g = grohe_graph(r, k)
        solver = DepthSolver(g)
        td, td2 = solver.td(g.full_mask), solver.td2(g.full_mask)
        td_cache[(r, k)] = td
        free = is_pt_free(g, 2 * r + 1)
        lower = comb(r + k - 1, r)
        measured = {"n": g.n, "td": td, "td2": td2, "P_2r+1_free": free}
        bound_values = {"td2_at_most": k, "td_at_least": lower, "size_recursion": grohe_size(r, k)}
        ok = td2 <= k and free and td >= lower and g.n == grohe_size(r, k)
        if r >= 2 and k >= 2 and (r - 1, k) in td_cache and (r, k - 1) in td_cache:
            sup = td_cache[(r - 1, k)] + td_cache[(r, k - 1)]
            bound_values["superadditive_at_least"] = sup
            ok = ok and td >= sup
        report.add(f"G_r,k r={r} k={k}", measured, bound_values, ok, g, time.perf_counter() - start)
    return report


def check_chain(ell: int, k: int) -> tuple[dict, dict, bool]:
    art = chain_graph(ell, k)
    g = art.graph
    inter, omega = intersection_graph(art.intervals)
    rightmost = max(hi for _, hi in art.intervals.intervals)
    root_strict = art.intervals.intervals[art.root][1] == rightmost and sum(hi == rightmost for _, hi in art.intervals.intervals) == 1
    ham_ok = len(art.ham_path) == g.n and is_path(g, list(art.ham_path)) and art.ham_path[-1] == art.root
    pw = pathwidth(g)
    td2 = DepthSolver(g).td2(g.full_mask)
    free = is_pt_free(g, ell + 1)
    measured = {
        "n": g.n, "pw": pw, "td2": td2, "omega": omega, "P_l+1_free": free,
        "ham_path_ok": ham_ok, "intervals_match": inter == g, "root_rightmost": root_strict,
    }
    bound_values = {"n_expected": chain_size(ell, k), "pw_at_most": k, "td2_at_most": k + 1, "omega_at_most": k + 1}
    ok = (g.n == chain_size(ell, k) and ham_ok and inter == g and root_strict
          and pw <= k and omega <= k + 1 and td2 <= k + 1 and free)
    if ell == 2:
        complete = g.n == k + 1 and g.m == comb(k + 1, 2)
        measured["complete"] = complete
        ok = ok and complete
    return measured, bound_values, ok


def suite_chain(params: dict) -> SuiteReport:
    report = SuiteReport("constructions-chain", params)
    for ell in range(1, int(params["ell_max"]) + 1):
        for k in range(1, int(params["k_max"]) + 1):
            start = time.perf_counter()
            measured, bound_values, ok = check_chain(ell, k)
            report.add(f"G_l,k l={ell} k={k}", measured, bound_values, ok, chain_graph(ell, k).graph, time.perf_counter() - start)
    return report


def chain_capacity(max_vertices: int, k_max: int, ell_max: int) -> list[tuple[int, int]]:
    return [(ell, k) for k in range(1, k_max + 1) for ell in range(1, ell_max + 1) if chain_size(ell, k) <= max_vertices]


def suite_extraction(params: dict) -> SuiteReport:
    report = SuiteReport("extraction", params)
    for pr in _profiles(params):
        g = pr.graph
        if g.n > int(params.get("ham_n_max", 12)) or pr.td2 < 1:
            continue
        ham = hamiltonian_path(g)
        if ham is None:
            continue
        # the tightest admissible k, and one above it
        for k in sorted({max(1, pr.td2 - 1), pr.td2}):
            start = time.perf_counter()
            out = extract_induced_path(g, ham, k)
            ok = is_induced_path(g, out) and guarantee_met(len(out), g.n, k)
            report.add(f"{pr.label} k={k}", {"order": len(out), "td2": pr.td2}, {"n": g.n, "rule": "(2*order)^k >= n"}, ok, g, time.perf_counter() - start)
    for ell, k in chain_capacity(int(params["chain_max_vertices"]), int(params["chain_k_max"]), int(params["chain_ell_max"])):
        art = chain_graph(ell, k)
        start = time.perf_counter()
        out = extract_induced_path(art.graph, art.ham_path, k)
        ok = is_induced_path(art.graph, out) and guarantee_met(len(out), art.graph.n, k) and len(out) <= ell
        report.add(f"chain l={ell} k={k}", {"order": len(out), "k": k}, {"n": art.graph.n, "order_at_most": ell}, ok, art.graph, time.perf_counter() - start)
    return report


def suite_tightness(params: dict) -> SuiteReport:
    report = SuiteReport("tightness", params)
    for k in [int(x) for x in params["ks"]]:
        for ell in range(1, int(params["ell_max"]) + 1):
            start = time.perf_counter()
            art = chain_graph(ell, k - 1)
            g = art.graph
            n = comb(ell + k - 2, k - 1)
            td2 = DepthSolver(g).td2(g.full_mask)
            lip = len(longest_induced_path(g))
            path_ok = len(art.ham_path) == n == g.n and is_path(g, list(art.ham_path))
            c = factorial(k - 1)
            # ell <= c * n^(1/(k-1))  <=>  ell^(k-1) <= c^(k-1) * n
            scaled = ell ** (k - 1) <= c ** (k - 1) * n
            ok = td2 <= k and path_ok and lip <= ell and scaled
            report.add(
                f"chain l={ell} k-1={k - 1}",
                {"n": g.n, "td2": td2, "longest_induced_path": lip, "path_order": len(art.ham_path)},
                {"td2_at_most": k, "path_order": n, "lip_at_most": ell, "c_k": c},
                ok, g, time.perf_counter() - start,
            )
    return report


def suite_bounds_table(params: dict) -> SuiteReport:
    report = SuiteReport("bounds-table", params)
    k_max, t_max = int(params["k_max"]), int(params["t_max"])
    for k in range(1, k_max + 1):
        for t in range(2, t_max + 1):
            f = bounds.f_value(k, t)
            measured = {"f": f}
            bound_values = {"g_lower": bounds.g_lower(k, t), "g_upper": bounds.g_upper(k, t)}
            ok = bounds.g_lower(k, t) <= f < bounds.g_upper(k, t) and f <= bounds.f_value(k, t + 1)
            if t % 2 == 0:
                bound_values["closed_form"] = bounds.f_closed_form(k, t)
                ok = ok and f == bounds.f_closed_form(k, t)
            if t == 3:
                ok = ok and f == k
            report.add(f"f k={k} t={t}", measured, bound_values, ok)
    for k in range(1, int(params["reduction_k_max"]) + 1):
        for ell in range(1, int(params["reduction_ell_max"]) + 1):
            report.add(f"c_k=k! k={k} l={ell}", {}, {"c_k": factorial(k)}, bounds.factorial_reduction_holds(k, ell))
            if k >= 2:
                report.add(f"c_k=(k-1)! k={k} l={ell}", {}, {"c_k": factorial(k - 1)}, bounds.factorial_reduction_holds(k, ell, shift=1))
    return report


def suite_ladder(params: dict) -> SuiteReport:
    report = SuiteReport("ladder", params)
    for t in range(1, int(params["t_max"]) + 1):
        g = ladder(t)
        v = DepthSolver(g).td2(g.full_mask)
        report.add(f"L{t}", {"td2": v}, {"log2_t": round(log2(t), 6)}, 2 ** v >= t, g)
    return report


_CORPUS = {"n_max": 6, "random_sizes": [7, 8], "random_count": 100, "seed": 1, "p": 0.5}

SUITES: dict[str, tuple[Callable[[dict], SuiteReport], dict]] = {
    "definitions": (suite_definitions, {"path_max": 12, "cycle_max": 12, "n_max": 6}),
    "main-theorem": (suite_main_theorem, {**_CORPUS, "ts": [4, 5, 6]}),
    "p4p5": (suite_p4p5, dict(_CORPUS)),
    "diam": (suite_diam, {"n_max": 6, "ts": [3, 4, 5, 6]}),
    "s-core": (suite_s_core, {"n_max": 5, "random_sizes": [6, 7, 8], "random_count": 500, "seed": 1}),
    "constructions-grohe": (suite_grohe, {"max_vertices": 20, "r_max": 10, "k_max": 20}),
    "constructions-chain": (suite_chain, {"ell_max": 5, "k_max": 3}),
    "extraction": (suite_extraction, {
        **_CORPUS, "ham_n_max": 12, "random_sizes": [7, 8, 9, 10, 11, 12],
        "chain_max_vertices": 64, "chain_k_max": 5, "chain_ell_max": 12,
    }),
    "tightness": (suite_tightness, {"ks": [2, 3], "ell_max": 6}),
    "bounds-table": (suite_bounds_table, {"k_max": 12, "t_max": 24, "reduction_k_max": 4, "reduction_ell_max": 30}),
    "ladder": (suite_ladder, {"t_max": 8}),
}


def run_suite(name: str, params: dict | None = None) -> SuiteReport:
    if name not in SUITES:
        raise InvalidInputError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    fn, defaults = SUITES[name]
    merged = {**defaults, **(params or {})}
    return fn(merged)
