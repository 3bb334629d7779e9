"""Property suites with a pass/fail matrix.

Each row states one law the vertex-set calculus must satisfy.  The laws
about annihilators are refereed against the matrix oracle on an exhaustive
family of small acyclic graphs; the purely graph-level laws run over seeded
random graph samples (cycles allowed); the Laurent row covers the single
exit-free cycle family.  A failing row is reported together with a greedily
minimized witness graph.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from random import Random

from . import ideals
from .graphdoc import document_from_graph
from .graphs import Graph
from .hereditary import HereditarySaturatedSet, enumerate_hs_sets, hs_closure
from .ideals import GradedIdeal
from .laurent import LaurentElement, laurent_mul, laurent_perp_is_zero
from .oracle import (
    build_oracle,
    ideal_generated_by,
    is_graded_subspace,
    perp_subspace,
    vertex_set_of,
)

ROW_PERP_VSET = "perp-vertex-set"
ROW_DPERP_VSET = "double-perp-vertex-set"
ROW_REGULARITY = "regularity-verdict"
ROW_PERP_REGULAR = "perp-always-regular"
ROW_PERP_GRADED = "perp-graded"
ROW_LATTICE_COUNT = "ideal-lattice-count"
ROW_PC_BIJECTION = "exitless-cycle-bijection"
ROW_QUOTIENT_L_PC = "quotient-condition-l-forces-pc"
ROW_REGULAR_L_IFF_PC = "regular-quotient-condition-l-iff-pc"
ROW_L_PRESERVED = "condition-l-preserved"
ROW_MAXIMAL = "maximal-ideal-dichotomy"
ROW_LAURENT = "laurent-annihilator-zero"

ALL_ROWS = (
    ROW_PERP_VSET,
    ROW_DPERP_VSET,
    ROW_REGULARITY,
    ROW_PERP_REGULAR,
    ROW_PERP_GRADED,
    ROW_LATTICE_COUNT,
    ROW_PC_BIJECTION,
    ROW_QUOTIENT_L_PC,
    ROW_REGULAR_L_IFF_PC,
    ROW_L_PRESERVED,
    ROW_MAXIMAL,
    ROW_LAURENT,
)

ORACLE_ROWS = (ROW_PERP_VSET, ROW_DPERP_VSET, ROW_REGULARITY, ROW_PERP_GRADED, ROW_LATTICE_COUNT)
CALCULUS_ROWS = (
    ROW_PERP_REGULAR,
    ROW_PC_BIJECTION,
    ROW_QUOTIENT_L_PC,
    ROW_REGULAR_L_IFF_PC,
    ROW_L_PRESERVED,
    ROW_MAXIMAL,
)

# the exhaustive oracle family stays desk-scale regardless of requested bounds
ORACLE_FAMILY_MAX_VERTICES = 4
ORACLE_FAMILY_MAX_EDGES = 5


@dataclass(frozen=True)
class VerifyConfig:
    max_vertices: int = 5
    max_edges: int = 8
    trials: int = 500
    seed: int = 42
    prime: int = 2


@dataclass(frozen=True)
class Failure:
    row: str
    graph: Graph | None
    detail: str


@dataclass(frozen=True)
class RowResult:
    name: str
    trials: int
    failures: int
    seed: int
    counterexample: dict | None = None
    detail: str = ""


@dataclass(frozen=True)
class VerificationMatrix:
    config: VerifyConfig
    rows: tuple[RowResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.failures == 0 for r in self.rows)

    def to_json_dict(self) -> dict:
        return {
            "config": {
                "max_vertices": self.config.max_vertices,
                "max_edges": self.config.max_edges,
                "trials": self.config.trials,
                "seed": self.config.seed,
                "prime": self.config.prime,
            },
            "rows": [
                {
                    "name": r.name,
                    "trials": r.trials,
                    "failures": r.failures,
                    "seed": r.seed,
                    "counterexample": r.counterexample,
                    "detail": r.detail,
                }
                for r in self.rows
            ],
            "passed": self.passed,
        }

    def render_text(self) -> str:
        cfg = self.config
        lines = [
            "verification matrix  "
            f"seed={cfg.seed} prime={cfg.prime} max-vertices={cfg.max_vertices} "
            f"max-edges={cfg.max_edges} trials={cfg.trials}",
            f"{'row':<38} {'trials':>8} {'failures':>9} {'seed':>6}",
        ]
        for r in self.rows:
            lines.append(f"{r.name:<38} {r.trials:>8} {r.failures:>9} {r.seed:>6}")
        for r in self.rows:
            if r.failures:
                lines.append(f"counterexample[{r.name}]: " + json.dumps(r.counterexample))
                lines.append(f"detail[{r.name}]: {r.detail}")
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines) + "\n"


# -- graph families -------------------------------------------------------------


def exhaustive_acyclic_graphs(
    max_vertices: int = ORACLE_FAMILY_MAX_VERTICES,
    max_edges: int = ORACLE_FAMILY_MAX_EDGES,
) -> tuple[Graph, ...]:
    """Every acyclic multigraph within the bounds, one per isomorphism class.

    Labeled graphs are enumerated as edge multisets over ordered vertex
    pairs (loops excluded: they are cycles) and deduplicated by the minimal
    relabeling under vertex permutations.
    """
    family: list[Graph] = []
    seen: set[tuple] = set()
    for n in range(max_vertices + 1):
        pairs = [(i, j) for i in range(n) for j in range(n) if i != j]
        perms = list(itertools.permutations(range(n)))
        for m in range(max_edges + 1):
            for combo in itertools.combinations_with_replacement(pairs, m):
                if not _is_dag(n, combo):
                    continue
                key = min(
                    (tuple(sorted((perm[a], perm[b]) for a, b in combo)) for perm in perms),
                    default=(),
                )
                full_key = (n, key)
                if full_key in seen:
                    continue
                seen.add(full_key)
                family.append(_graph_from_pairs(n, combo))
    return tuple(family)


def _is_dag(n: int, pairs) -> bool:
    indeg = [0] * n
    out: list[list[int]] = [[] for _ in range(n)]
    for a, b in pairs:
        out[a].append(b)
        indeg[b] += 1
    queue = [v for v in range(n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def _graph_from_pairs(n: int, pairs) -> Graph:
    vertices = tuple(f"v{i}" for i in range(n))
    edges = tuple(
        (f"e{k}", f"v{a}", f"v{b}") for k, (a, b) in enumerate(sorted(pairs))
    )
    return Graph(vertices, edges)


def random_graph(rng: Random, max_vertices: int, max_edges: int) -> Graph:
    """Seeded random multigraph; loops and parallel edges allowed."""
    n = rng.randint(0, max_vertices)
    vertices = tuple(f"v{i}" for i in range(n))
    if n == 0:
        return Graph((), ())
    m = rng.randint(0, max_edges)
    edges = tuple(
        (f"e{k}", f"v{rng.randrange(n)}", f"v{rng.randrange(n)}") for k in range(m)
    )
    return Graph(vertices, edges)


# -- per-graph checks -----------------------------------------------------------


def oracle_checks_for_graph(graph: Graph, p: int, algebra=None):
    """Rows refereed by the matrix oracle, for one acyclic graph.

    Returns (trial counts per row, failures, algebra) so callers can reuse
    the built algebra.
    """
    counts = {row: 0 for row in ORACLE_ROWS}
    failures: list[Failure] = []
    try:
        if algebra is None:
            algebra = build_oracle(graph, p)
        hs_sets = enumerate_hs_sets(graph)
    except Exception as exc:  # oracle build is part of what the rows verify
        for row in ORACLE_ROWS:
            counts[row] += 1
            failures.append(Failure(row, graph, f"setup failed: {exc}"))
        return counts, failures, None

    for h in hs_sets:
        for row in (ROW_PERP_VSET, ROW_DPERP_VSET, ROW_REGULARITY, ROW_PERP_GRADED):
            counts[row] += 1
        try:
            images = [algebra.vertex_image(v) for v in h.sorted_vertices()]
            ideal = ideal_generated_by(algebra, images)
            perp1 = perp_subspace(algebra, ideal)
            perp2 = perp_subspace(algebra, perp1)

            j = GradedIdeal(h)
            bar = ideals.bar_closure(j)

            got = vertex_set_of(algebra, perp1)
            want = graph._vset - bar
            if got != want:
                failures.append(
                    Failure(
                        ROW_PERP_VSET,
                        graph,
                        f"H={h.sorted_vertices()}: oracle perp {sorted(got)} != "
                        f"calculus {sorted(want)}",
                    )
                )

            got2 = vertex_set_of(algebra, perp2)
            want2 = frozenset(w for w in graph.vertices if graph.tree(w) <= bar)
            if got2 != want2:
                failures.append(
                    Failure(
                        ROW_DPERP_VSET,
                        graph,
                        f"H={h.sorted_vertices()}: oracle double perp {sorted(got2)} != "
                        f"calculus {sorted(want2)}",
                    )
                )

            oracle_regular = perp2 == ideal
            calculus_regular = ideals.is_regular(j)
            if oracle_regular != calculus_regular:
                failures.append(
                    Failure(
                        ROW_REGULARITY,
                        graph,
                        f"H={h.sorted_vertices()}: oracle regular={oracle_regular} but "
                        f"calculus says {calculus_regular}",
                    )
                )

            if not is_graded_subspace(algebra, perp1):
                failures.append(
                    Failure(
                        ROW_PERP_GRADED,
                        graph,
                        f"H={h.sorted_vertices()}: annihilator is not graded",
                    )
                )
        except Exception as exc:
            for row in (ROW_PERP_VSET, ROW_DPERP_VSET, ROW_REGULARITY, ROW_PERP_GRADED):
                failures.append(
                    Failure(row, graph, f"H={h.sorted_vertices()}: check raised {exc!r}")
                )

    counts[ROW_LATTICE_COUNT] += 1
    try:
        signatures = set()
        for size in range(len(graph.vertices) + 1):
            for subset in itertools.combinations(graph.vertices, size):
                images = [algebra.vertex_image(v) for v in subset]
                ideal = ideal_generated_by(algebra, images)
                signatures.add(ideal.signature())
                closed = hs_closure(graph, subset)
                got = vertex_set_of(algebra, ideal)
                if got != closed.vertices:
                    raise AssertionError(
                        f"X={sorted(subset)}: oracle vertex set {sorted(got)} != "
                        f"closure {closed.sorted_vertices()}"
                    )
        expected = 2 ** len(graph.sinks())
        if not (len(signatures) == len(hs_sets) == expected):
            raise AssertionError(
                f"(oracle ideals, lattice size, 2^sinks) = "
                f"({len(signatures)}, {len(hs_sets)}, {expected})"
            )
    except Exception as exc:
        failures.append(Failure(ROW_LATTICE_COUNT, graph, f"count check failed: {exc}"))

    return counts, failures, algebra


def random_ideal_check(algebra, rng: Random):
    """One gradedness trial for the annihilator of a randomly generated ideal."""
    gens = [_random_element(algebra, rng) for _ in range(rng.randint(1, 2))]
    ideal = ideal_generated_by(algebra, gens)
    perp1 = perp_subspace(algebra, ideal)
    if not is_graded_subspace(algebra, perp1):
        return "annihilator of a random ideal is not graded"
    hset = vertex_set_of(algebra, ideal)
    try:
        HereditarySaturatedSet(algebra.graph, hset)
    except ValueError:
        return f"vertex set {sorted(hset)} of a random ideal is not hereditary saturated"
    return None


def _random_element(algebra, rng: Random):
    vec = algebra.zero()
    if algebra.dimension == 0:
        return vec
    support = rng.sample(range(algebra.dimension), rng.randint(1, min(4, algebra.dimension)))
    for i in support:
        vec[i] = rng.randrange(1, algebra.p) if algebra.p > 2 else 1
    return vec


def calculus_checks_for_graph(graph: Graph):
    """Graph-level rows (no oracle) for one graph, cycles allowed."""
    counts = {row: 0 for row in CALCULUS_ROWS}
    failures: list[Failure] = []
    try:
        hs_sets = enumerate_hs_sets(graph)
        cond_l = graph.condition_l()
        pc = graph.exit_free_cycle_vertices()
    except Exception as exc:
        for row in CALCULUS_ROWS:
            counts[row] += 1
            failures.append(Failure(row, graph, f"setup failed: {exc}"))
        return counts, failures

    for h in hs_sets:
        for row in (
            ROW_PERP_REGULAR,
            ROW_PC_BIJECTION,
            ROW_QUOTIENT_L_PC,
            ROW_REGULAR_L_IFF_PC,
            ROW_L_PRESERVED,
        ):
            counts[row] += 1
        label = f"H={h.sorted_vertices()}"
        try:
            j = GradedIdeal(h)
            p1 = ideals.perp(j)
            if not ideals.is_regular(p1):
                failures.append(Failure(ROW_PERP_REGULAR, graph, f"{label}: perp not regular"))
            p3 = ideals.perp(ideals.double_perp(j))
            if p1.vertices != p3.vertices:
                failures.append(
                    Failure(
                        ROW_PERP_REGULAR,
                        graph,
                        f"{label}: perp {sorted(p1.vertices)} != triple perp {sorted(p3.vertices)}",
                    )
                )

            regular = ideals.is_regular(j)
            quotient_l = ideals.quotient_graph(graph, h).condition_l()
            pc_inside = pc <= h.vertices

            if regular and not ideals.pc_bijection_check(graph, h):
                failures.append(
                    Failure(ROW_PC_BIJECTION, graph, f"{label}: regular but cycle sets differ")
                )
            if quotient_l and not pc_inside:
                failures.append(
                    Failure(
                        ROW_QUOTIENT_L_PC,
                        graph,
                        f"{label}: quotient satisfies (L) but exit-free vertices escape H",
                    )
                )
            if regular and quotient_l != pc_inside:
                failures.append(
                    Failure(
                        ROW_REGULAR_L_IFF_PC,
                        graph,
                        f"{label}: regular but (L)-quotient={quotient_l} vs containment={pc_inside}",
                    )
                )
            if cond_l and regular and not quotient_l:
                failures.append(
                    Failure(ROW_L_PRESERVED, graph, f"{label}: quotient lost Condition (L)")
                )
        except Exception as exc:
            for row in (
                ROW_PERP_REGULAR,
                ROW_PC_BIJECTION,
                ROW_QUOTIENT_L_PC,
                ROW_REGULAR_L_IFF_PC,
                ROW_L_PRESERVED,
            ):
                failures.append(Failure(row, graph, f"{label}: check raised {exc!r}"))

    everything = graph._vset
    proper = [h for h in hs_sets if h.vertices != everything]
    for h in proper:
        if any(h.vertices < other.vertices for other in proper):
            continue
        counts[ROW_MAXIMAL] += 1
        label = f"H={h.sorted_vertices()}"
        try:
            j = GradedIdeal(h)
            if not ideals.is_regular(j) and ideals.perp(j).vertices:
                failures.append(
                    Failure(
                        ROW_MAXIMAL,
                        graph,
                        f"{label}: maximal but neither regular nor annihilator-zero",
                    )
                )
        except Exception as exc:
            failures.append(Failure(ROW_MAXIMAL, graph, f"{label}: check raised {exc!r}"))

    return counts, failures


def random_laurent(rng: Random, p: int) -> LaurentElement:
    """Nonzero element with support width at most 7, pinned at both ends."""
    width = rng.randint(1, 7)
    lo = rng.randint(-6, 6 - (width - 1))
    coeffs = {lo: rng.randint(1, p - 1)}
    if width > 1:
        coeffs[lo + width - 1] = rng.randint(1, p - 1)
        for d in range(lo + 1, lo + width - 1):
            c = rng.randrange(p)
            if c:
                coeffs[d] = c
    return LaurentElement(p, coeffs)


def laurent_checks(rng: Random, p: int, trials: int):
    """Annihilator-freeness and degree additivity over random pairs."""
    failures: list[Failure] = []
    for _ in range(trials):
        f = random_laurent(rng, p)
        g = random_laurent(rng, p)
        try:
            if not laurent_perp_is_zero(f):
                failures.append(Failure(ROW_LAURENT, None, f"{f!r}: annihilator test failed"))
                continue
            prod = laurent_mul(f, g)
            if (
                prod.is_zero
                or prod.min_degree != f.min_degree + g.min_degree
                or prod.max_degree != f.max_degree + g.max_degree
            ):
                failures.append(
                    Failure(ROW_LAURENT, None, f"degrees not additive for {f!r} * {g!r}")
                )
        except Exception as exc:
            failures.append(Failure(ROW_LAURENT, None, f"{f!r}: check raised {exc!r}"))
    return trials, failures


# -- counterexample minimization --------------------------------------------------


def minimize_counterexample(graph: Graph, still_fails) -> Graph:
    """Greedily drop edges, then vertices, while the failure persists."""
    changed = True
    while changed:
        changed = False
        for e in graph.edges:
            candidate = graph.without_edge(e.name)
            if still_fails(candidate):
                graph = candidate
                changed = True
                break
        if changed:
            continue
        for v in graph.vertices:
            candidate = graph.without_vertex(v)
            if still_fails(candidate):
                graph = candidate
                changed = True
                break
    return graph


def _row_fail_predicate(row: str, cfg: VerifyConfig):
    if row in ORACLE_ROWS and row != ROW_PERP_GRADED:

        def fails(g: Graph) -> bool:
            _counts, failures, _ = oracle_checks_for_graph(g, cfg.prime)
            return any(f.row == row for f in failures)

        return fails
    if row == ROW_PERP_GRADED:

        def fails(g: Graph) -> bool:
            _counts, failures, algebra = oracle_checks_for_graph(g, cfg.prime)
            if any(f.row == row for f in failures):
                return True
            if algebra is None:
                return False
            rng = Random(cfg.seed + 1)
            return any(random_ideal_check(algebra, rng) for _ in range(32))

        return fails
    if row in CALCULUS_ROWS:

        def fails(g: Graph) -> bool:
            _counts, failures = calculus_checks_for_graph(g)
            return any(f.row == row for f in failures)

        return fails
    return None


# -- the runner -------------------------------------------------------------------


def run_verification(cfg: VerifyConfig, rows=None) -> VerificationMatrix:
    """Run the requested rows (all by default); trials=0 yields an empty matrix."""
    if rows is None:
        requested = ALL_ROWS
    else:
        unknown = set(rows) - set(ALL_ROWS)
        if unknown:
            raise ValueError(f"unknown rows: {sorted(unknown)}")
        requested = tuple(r for r in ALL_ROWS if r in set(rows))
    if cfg.trials == 0:
        return VerificationMatrix(cfg, ())

    counts = {row: 0 for row in ALL_ROWS}
    failures: dict[str, list[Failure]] = {row: [] for row in ALL_ROWS}
    seeds = {row: cfg.seed for row in ALL_ROWS}

    if any(r in requested for r in ORACLE_ROWS):
        family = exhaustive_acyclic_graphs(
            min(cfg.max_vertices, ORACLE_FAMILY_MAX_VERTICES),
            min(cfg.max_edges, ORACLE_FAMILY_MAX_EDGES),
        )
        pool = []
        for g in family:
            c, fs, algebra = oracle_checks_for_graph(g, cfg.prime)
            for row, k in c.items():
                counts[row] += k
            for f in fs:
                failures[f.row].append(f)
            if algebra is not None:
                pool.append((g, algebra))
        if ROW_PERP_GRADED in requested and pool:
            seeds[ROW_PERP_GRADED] = cfg.seed + 1
            rng = Random(cfg.seed + 1)
            for _ in range(cfg.trials):
                g, algebra = pool[rng.randrange(len(pool))]
                counts[ROW_PERP_GRADED] += 1
                try:
                    problem = random_ideal_check(algebra, rng)
                except Exception as exc:
                    problem = f"random ideal check raised {exc!r}"
                if problem:
                    failures[ROW_PERP_GRADED].append(Failure(ROW_PERP_GRADED, g, problem))

    if any(r in requested for r in CALCULUS_ROWS):
        rng = Random(cfg.seed)
        for _ in range(cfg.trials):
            g = random_graph(rng, cfg.max_vertices, cfg.max_edges)
            c, fs = calculus_checks_for_graph(g)
            for row, k in c.items():
                counts[row] += k
            for f in fs:
                failures[f.row].append(f)

    if ROW_LAURENT in requested:
        seeds[ROW_LAURENT] = cfg.seed + 2
        t, fs = laurent_checks(Random(cfg.seed + 2), cfg.prime, cfg.trials)
        counts[ROW_LAURENT] += t
        failures[ROW_LAURENT].extend(fs)

    results = []
    for name in requested:
        fs = failures[name]
        counterexample = None
        detail = ""
        if fs:
            detail = fs[0].detail
            witness = next((f.graph for f in fs if f.graph is not None), None)
            if witness is not None:
                predicate = _row_fail_predicate(name, cfg)
                if predicate is not None:
                    witness = minimize_counterexample(witness, predicate)
                counterexample = document_from_graph(witness)
        results.append(
            RowResult(name, counts[name], len(fs), seeds[name], counterexample, detail)
        )
    return VerificationMatrix(cfg, tuple(results))
