"""
Command line front end.

Every solve subcommand prints one JSON document on stdout::

    {"certificate": {...}, "size": 2, "solution": [3, 7], "stats": {...}, "status": "feasible"}

Vertex ids are 1-based on the command line, in every file and in the JSON.
Exit codes: 0 success, 2 parse error, 3 precondition violation, 4 oracle
mismatch.
"""

import argparse
import json
import random
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Union

from loguru import logger
from pydantic import BaseModel, Field

from . import __version__
from .classes import ALL_GRAPHS, EDGELESS, GraphClass, max_deficiency, resolve_class
from .config import get_settings, override_settings
from .decomposition.pace import write_td
from .decomposition.tree import decompose
from .dp.constraints import ConstraintSpec
from .dp.demand import SeparationDemand
from .errors import GraphFormatError, OracleLimitError, OracleMismatchError, PreconditionError, TwcutError
from .flow.chain import separator_chain
from .flow.network import min_vertex_cut
from .graph.colored import ColoredGraph, Edge, VertexSet
from .graph.io import format_graph, read_graph, read_pairs, write_graph
from .graph.torso import torso
from .logger import RunStats, collect_stats, configure_logging
from .oracle import brute
from .reduction.terminals import reduce_terminals
from .solvers.bipartization import exact_stable_bipartization, g_bipartization, oct
from .solvers.connected import connected_cut
from .solvers.cuts import edge_induced_vertex_cut, g_mincut, host_for, multicut_uncut, stable_cut
from .solvers.edge_bipartization import bipartite_contraction, g_edge_bipartization
from .solvers.hck import HckDocument, hck_solve, verify_coloring
from .utils.generators import GraphKind, generate

Solution = Union[VertexSet, List[Edge]]


class RunStatsModel(BaseModel):
    """Counters reported with every result."""

    reduced_vertices: int = 0
    decomposition_width: int = -1
    dp_states: int = 0
    wall_ms: float = 0.0

    @classmethod
    def from_stats(cls, stats: RunStats) -> "RunStatsModel":
        return cls(
            reduced_vertices=stats.reduced_vertices,
            decomposition_width=stats.decomposition_width,
            dp_states=stats.dp_states,
            wall_ms=stats.wall_ms,
        )


class SolveResult(BaseModel):
    """JSON document printed by every solve subcommand."""

    status: str = Field(pattern="^(feasible|infeasible|error)$")
    solution: List[Any] = Field(default_factory=list)
    size: int = 0
    certificate: Dict[str, Any] = Field(default_factory=dict)
    stats: RunStatsModel = Field(default_factory=RunStatsModel)
    error: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json", exclude_none=True), sort_keys=True, indent=2)


class ReduceSidecar(BaseModel):
    """Written next to ``reduce --output``: input id of every reduced vertex (null for subdivision vertices)."""

    origin: List[Optional[int]]
    cover: List[int]
    k: int


@dataclass
class Outcome:
    solution: Optional[Solution]
    certificate: Dict[str, Any] = field(default_factory=dict)
    graph: Optional[ColoredGraph] = None


def _ids(vertices: Sequence[int]) -> List[int]:
    return [v + 1 for v in vertices]


def _edges(edges: Sequence[Edge]) -> List[List[int]]:
    return [[u + 1, v + 1] for u, v in edges]


def _require_k(args: argparse.Namespace) -> int:
    if args.k is None:
        raise PreconditionError("--k is required for this subcommand")
    if args.k < 0:
        raise PreconditionError("--k must be nonnegative")
    return args.k


def _terminals(args: argparse.Namespace, g: ColoredGraph) -> tuple:
    """Source and sink as 0-based ids; a seed picks a random pair when --s/--t are omitted."""
    if args.s is not None and args.t is not None:
        return g.check_vertex(args.s - 1), g.check_vertex(args.t - 1)
    if args.seed is not None and g.n >= 2:
        s, t = sorted(random.Random(args.seed).sample(range(g.n), 2))
        logger.info("seed {} picked terminals {} and {}", args.seed, s + 1, t + 1)
        return s, t
    raise PreconditionError("--s and --t are required (or --seed to pick them)")


def _class(args: argparse.Namespace, default: GraphClass = ALL_GRAPHS) -> GraphClass:
    return resolve_class(args.graph_class) if args.graph_class else default


def _vertex_list(text: Optional[str], g: ColoredGraph) -> VertexSet:
    if not text:
        raise PreconditionError("--set is required for this subcommand")
    try:
        values = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise GraphFormatError(f"--set expects vertex ids, got {text!r}") from None
    return tuple(sorted({g.check_vertex(v - 1) for v in values}))


def _pairs(args: argparse.Namespace, g: ColoredGraph) -> tuple:
    if not args.pairs:
        raise PreconditionError("--pairs is required for this subcommand")
    return read_pairs(args.pairs, g.n)


# Solvers


def _mincut(args, g) -> Outcome:
    s, t = _terminals(args, g)
    found = min_vertex_cut(g, s, t, _require_k(args))
    return Outcome(None if found is None else found[1], {"flow": found[0]} if found else {})


def _chain(args, g) -> Outcome:
    s, t = _terminals(args, g)
    chain = separator_chain(g, s, t)
    certificate = {"ell": chain.ell, "separators": [_ids(sep) for sep in chain.separators]}
    return Outcome(chain.union(), certificate)


def _torso(args, g) -> Outcome:
    c = _vertex_list(args.vertex_set, g)
    t = torso(g, c)
    certificate = {
        "edges": _edges([(t.origin[u], t.origin[v]) for u, v in t.black_edges()]),
        "red_edges": _edges([(t.origin[u], t.origin[v]) for u, v in t.red_edges()]),
    }
    return Outcome(c, certificate, graph=t)


def _reduce(args, g) -> Outcome:
    k = _require_k(args)
    terms = _vertex_list(args.vertex_set, g) if args.vertex_set else _terminals(args, g)
    result = reduce_terminals(g, terms, k)
    origin = [None if o < 0 else o + 1 for o in result.origin_map]
    if args.output:
        write_graph(result.reduced, args.output)
        sidecar = ReduceSidecar(origin=origin, cover=_ids(result.cover), k=k)
        Path(f"{args.output}.json").write_text(sidecar.model_dump_json(indent=2), encoding="utf-8")
        logger.info("wrote reduced graph to {}", args.output)
    certificate = {"reduced_vertices": result.reduced.n, "reduced_edges": result.reduced.m}
    return Outcome(result.cover, certificate, graph=result.reduced)


def _stable_cut(args, g) -> Outcome:
    s, t = _terminals(args, g)
    return Outcome(stable_cut(g, s, t, _require_k(args)))


def _hereditary_cut(args, g) -> Outcome:
    s, t = _terminals(args, g)
    graph_class = _class(args)
    return Outcome(g_mincut(g, s, t, _require_k(args), graph_class), {"class": graph_class.name})


def _eivc(args, g) -> Outcome:
    s, t = _terminals(args, g)
    found = edge_induced_vertex_cut(g, s, t, _require_k(args))
    if found is None:
        return Outcome(None)
    sep, cover = found
    return Outcome(sep, {"cover": _edges(cover)})


def _connected_cut(args, g) -> Outcome:
    s, t = _terminals(args, g)
    return Outcome(connected_cut(g, s, t, _require_k(args)))


def _multicut(args, g) -> Outcome:
    cut, uncut = _pairs(args, g)
    graph_class = _class(args)
    found = multicut_uncut(g, cut, uncut, _require_k(args), graph_class)
    return Outcome(found, {"cut_pairs": len(cut), "uncut_pairs": len(uncut), "class": graph_class.name})


def _bipartize(args, g) -> Outcome:
    k = _require_k(args)
    graph_class = _class(args)
    if graph_class.universal:
        return Outcome(oct(g, k), {"class": graph_class.name})
    return Outcome(g_bipartization(g, k, graph_class), {"class": graph_class.name})


def _stable_bipartize(args, g) -> Outcome:
    return Outcome(g_bipartization(g, _require_k(args), EDGELESS))


def _exact_stable_bipartize(args, g) -> Outcome:
    return Outcome(exact_stable_bipartization(g, _require_k(args)))


def _edge_bipartize(args, g) -> Outcome:
    graph_class = _class(args)
    return Outcome(g_edge_bipartization(g, _require_k(args), graph_class), {"class": graph_class.name})


def _contract_bipartite(args, g) -> Outcome:
    return Outcome(bipartite_contraction(g, _require_k(args)))


def _hck_instance(args, g):
    if not args.target:
        raise PreconditionError("--target is required for hck")
    doc = HckDocument.load(args.target)
    target = doc.target()
    return target, doc.list_assignment(target, g.n)


def _hck(args, g) -> Outcome:
    target, lists = _hck_instance(args, g)
    coloring = hck_solve(g, target, lists)
    if coloring is None:
        return Outcome(None, {"k": target.k})
    assert verify_coloring(g, target, lists, coloring)
    return Outcome(coloring.exceptional(target), {"coloring": coloring.named(target), "k": target.k})


# Oracles


def _oracle_mincut(args, g):
    s, t = _terminals(args, g)
    return brute.brute_min_cut(g, s, t, _require_k(args))


def _oracle_class_cut(graph_class: GraphClass) -> Callable:
    def run(args, g):
        s, t = _terminals(args, g)
        k = _require_k(args)
        host = host_for(g, graph_class)
        return brute.brute_constrained_cut(host, SeparationDemand.single(s, t), k, graph_class.spec(k), (s, t))

    return run


def _oracle_hereditary_cut(args, g):
    return _oracle_class_cut(_class(args))(args, g)


def _oracle_eivc(args, g):
    s, t = _terminals(args, g)
    k = _require_k(args)
    graph_class = max_deficiency(k)
    return brute.brute_constrained_cut(
        host_for(g, graph_class), SeparationDemand.single(s, t), 2 * k, graph_class.spec(2 * k), (s, t)
    )


def _oracle_connected_cut(args, g):
    s, t = _terminals(args, g)
    if g.has_edge(s, t):
        return None
    return brute.brute_constrained_cut(
        g, SeparationDemand.single(s, t), _require_k(args), ConstraintSpec.connected_black(), (s, t)
    )


def _oracle_multicut(args, g):
    cut, uncut = _pairs(args, g)
    k = _require_k(args)
    graph_class = _class(args)
    return brute.brute_constrained_cut(host_for(g, graph_class), SeparationDemand.of(cut, uncut), k, graph_class.spec(k))


def _oracle_bipartize(args, g):
    return brute.brute_bipartization(g, _require_k(args), _class(args))


def _oracle_stable_bipartize(args, g):
    return brute.brute_bipartization(g, _require_k(args), EDGELESS)


def _oracle_exact_stable_bipartize(args, g):
    return brute.brute_bipartization(g, _require_k(args), EDGELESS, exact=True)


def _oracle_edge_bipartize(args, g):
    return brute.brute_edge_bipartization(g, _require_k(args), _class(args))


def _oracle_contract_bipartite(args, g):
    return brute.brute_contraction(g, _require_k(args))


def _oracle_hck(args, g):
    target, lists = _hck_instance(args, g)
    coloring = brute.brute_hck(g, target, lists)
    return None if coloring is None else coloring.exceptional(target)


@dataclass(frozen=True)
class Problem:
    """
    Attributes:
        solve: Runs the solver
        oracle: Brute-force counterpart (None if the problem has no oracle)
        exact_size: The solver's answer is a minimum, so sizes must agree too
        edges: Solutions are edge lists
    """

    solve: Callable[[argparse.Namespace, ColoredGraph], Outcome]
    oracle: Optional[Callable[[argparse.Namespace, ColoredGraph], Optional[Solution]]] = None
    exact_size: bool = True
    edges: bool = False


PROBLEMS: Dict[str, Problem] = {
    "mincut": Problem(_mincut, _oracle_mincut),
    "chain": Problem(_chain),
    "torso": Problem(_torso),
    "reduce": Problem(_reduce),
    "stable-cut": Problem(_stable_cut, _oracle_class_cut(EDGELESS)),
    "hereditary-cut": Problem(_hereditary_cut, _oracle_hereditary_cut),
    "eivc": Problem(_eivc, _oracle_eivc),
    "connected-cut": Problem(_connected_cut, _oracle_connected_cut),
    "multicut": Problem(_multicut, _oracle_multicut),
    "bipartize": Problem(_bipartize, _oracle_bipartize),
    "stable-bipartize": Problem(_stable_bipartize, _oracle_stable_bipartize),
    "exact-stable-bipartize": Problem(_exact_stable_bipartize, _oracle_exact_stable_bipartize, exact_size=False),
    "edge-bipartize": Problem(_edge_bipartize, _oracle_edge_bipartize, exact_size=False, edges=True),
    "contract-bipartite": Problem(_contract_bipartite, _oracle_contract_bipartite, edges=True),
    "hck": Problem(_hck, _oracle_hck, exact_size=False),
}


def _cross_check(name: str, problem: Problem, args, g, outcome: Outcome, strict: bool) -> None:
    """
    Compare against the brute-force oracle and record the oracle's answer.

    Raises:
        OracleMismatchError: If feasibility (or the optimum size) differs
        OracleLimitError: If strict and the instance exceeds the oracle caps
    """
    if problem.oracle is None:
        raise PreconditionError(f"No oracle for '{name}'")
    try:
        expected = problem.oracle(args, g)
    except OracleLimitError as e:
        if strict:
            raise
        logger.warning("oracle skipped: {}", e)
        outcome.certificate["oracle"] = "skipped"
        return
    found = outcome.solution
    outcome.certificate["oracle"] = None if expected is None else (_edges(expected) if problem.edges else _ids(expected))
    if (found is None) != (expected is None):
        raise OracleMismatchError(
            f"{name}: solver {'found' if found is not None else 'found nothing'}, oracle "
            f"{'found' if expected is not None else 'found nothing'}"
        )
    if problem.exact_size and found is not None and expected is not None and len(found) != len(expected):
        raise OracleMismatchError(f"{name}: solver size {len(found)}, oracle size {len(expected)}")


def _result(problem: Problem, outcome: Outcome, stats: RunStats) -> SolveResult:
    solution = outcome.solution
    if solution is None:
        return SolveResult(status="infeasible", certificate=outcome.certificate, stats=RunStatsModel.from_stats(stats))
    rendered = _edges(solution) if problem.edges else _ids(solution)
    return SolveResult(
        status="feasible",
        solution=rendered,
        size=len(solution),
        certificate=outcome.certificate,
        stats=RunStatsModel.from_stats(stats),
    )


def _solve(name: str, args: argparse.Namespace, verify: bool) -> int:
    problem = PROBLEMS[name]
    if not args.graph:
        raise PreconditionError("--graph is required")
    g = read_graph(args.graph)
    with collect_stats() as stats:
        outcome = problem.solve(args, g)
        if verify or args.oracle:
            _cross_check(name, problem, args, g, outcome, strict=verify)
    if args.emit_td:
        target = outcome.graph if outcome.graph is not None else g
        write_td(decompose(target), target.n, args.emit_td)
    print(_result(problem, outcome, stats).to_json())
    return 0


def _gen(args: argparse.Namespace) -> int:
    g = generate(GraphKind(args.kind), n=args.n, p=args.p, dim=args.dim, seed=args.seed)
    sys.stdout.write(format_graph(g))
    return 0


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--graph", help="Graph file (p/e lines, 1-based ids)")
    parser.add_argument("--k", type=int, help="Size bound")
    parser.add_argument("--s", type=int, help="Source vertex")
    parser.add_argument("--t", type=int, help="Sink vertex")
    parser.add_argument("--pairs", help="Pair file with 'cut X | Y' and 'uncut X | Y' lines")
    parser.add_argument("--class", dest="graph_class", help="Graph class name or graph6 member file")
    parser.add_argument("--set", dest="vertex_set", help="Vertex ids, comma or space separated")
    parser.add_argument("--target", help="hck target document (JSON)")
    parser.add_argument("--output", help="reduce: write the reduced graph here (plus a .json sidecar)")
    parser.add_argument("--seed", type=int, help="Random seed (picks --s/--t when omitted)")
    parser.add_argument("--oracle", action="store_true", help="Cross-check with the brute-force oracle when small")
    parser.add_argument("--emit-td", dest="emit_td", help="Write a PACE .td decomposition of the solved graph")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twcut", description="Treewidth-reduction solvers for small separators")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--log-level", dest="log_level", help="stderr log level (default TWCUT_LOG_LEVEL)")
    parser.add_argument("--threads", type=int, help="Worker threads for branch fan-outs")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in PROBLEMS:
        _add_common(sub.add_parser(name, help=f"solve {name}"))
    verify = sub.add_parser("verify", help="solve and cross-check with the brute-force oracle")
    verify.add_argument("problem", choices=[n for n, p in PROBLEMS.items() if p.oracle is not None])
    _add_common(verify)
    gen = sub.add_parser("gen", help="write a generated graph to stdout")
    gen.add_argument("--kind", choices=[k.value for k in GraphKind], default=GraphKind.GNP.value)
    gen.add_argument("--n", type=int, default=10)
    gen.add_argument("--p", type=float, default=0.3)
    gen.add_argument("--dim", type=int, default=3)
    gen.add_argument("--seed", type=int)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Parse arguments, run one subcommand and print its result.

    Returns:
        Process exit code
    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    settings = get_settings()
    configure_logging((args.log_level or settings.log_level).upper(), settings.log_file)
    overrides = {"threads": args.threads} if args.threads else {}
    try:
        with override_settings(**overrides):
            if args.command == "gen":
                return _gen(args)
            if args.command == "verify":
                return _solve(args.problem, args, verify=True)
            return _solve(args.command, args, verify=False)
    except TwcutError as e:
        logger.error("{}: {}", type(e).__name__, e)
        print(SolveResult(status="error", error=str(e)).to_json())
        return e.exit_code


def main() -> None:
    sys.exit(run())
