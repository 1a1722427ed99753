"""Dispatches a ``RunConfig`` to the analysis it names.

Every handler returns the report dict and whether it is a negative
finding; ``run`` validates the report against the JSON schema of its
command before handing it back.
"""
import logging
import sys

from jsonschema import validate

from ..decomposition.inflation import hyperinflate
from ..decomposition.intervals import (
    SeedListStrategy,
    interval_decomposition,
    seeded_decomposition,
)
from ..decomposition.jets import Jet, verify_jet
from ..decomposition.matching import (
    Matching,
    arc_seed_decomposition,
    connected_seed_decomposition,
    decomposition_from_matching,
    is_maximal,
    matching_from_decomposition,
    smallest_edge,
)
from ..decomposition.schema import (
    decomposition_schema,
    jet_check_schema,
    matching_schema,
    trace_schema,
)
from ..decomposition.serializers import (
    decomposition_to_dict,
    jet_check_to_dict,
    matching_to_dict,
    trace_to_dict,
)
from ..graph.parsers import DOT, parse_graph
from ..turan.bowtie import find_bowtie, witness_to_dict
from ..turan.extremal import ex_oracle, extremal_report, is_k4
from ..turan.lemmas import lemma_suite, within_volume_bound
from ..turan.schema import extremal_report_schema, turan_check_schema
from . import config as cli
from .exceptions import UsageError

logger = logging.getLogger(__name__)


class RunResult(object):
    def __init__(self, command, report, negative=False):
        self.command = command
        self.report = report
        self.negative = negative

    def __repr__(self):
        return f"<RunResult {self.command} negative={self.negative}>"


def read_input(config, stdin=None):
    if config.input_path == "-":
        return (stdin or sys.stdin).read()
    with open(config.input_path, encoding="utf-8") as handle:
        return handle.read()


def load_graph(config, stdin=None):
    graph = parse_graph(read_input(config, stdin), config.fmt, directed=config.directed)
    if config.fmt == DOT:
        # the header decides, a contradicting flag is a usage error
        if config.directed and not graph.directed:
            raise UsageError("--directed contradicts the undirected DOT header")
        if config.command in cli.UNDIRECTED_COMMANDS and graph.directed:
            raise UsageError(f"{config.command} works on undirected graphs only")
    logger.debug(f"loaded {graph!r} from {config.input_path}")
    return graph


def _inflate(config, graph):
    trace = hyperinflate(graph, graph.vertex_set(config.set_list[0]))
    return trace_to_dict(graph, trace), False


def _decompose(config, graph):
    method = config.method
    if method is None:
        method = cli.INTERVAL if graph.directed else cli.CONNECTED_SEED
    if method == cli.ARC_SEED and graph.directed:
        raise UsageError("arc-seed decompositions need an undirected graph")
    seeds = [graph.vertex_set(seed) for seed in config.seed_list or ()]
    if method == cli.INTERVAL:
        if seeds:
            raise UsageError("interval decompositions take no seeds")
        decomposition = interval_decomposition(graph)
    elif method == cli.ARC_SEED:
        decomposition = arc_seed_decomposition(graph, _edges(seeds))
    elif graph.directed:
        decomposition = seeded_decomposition(graph, SeedListStrategy(seeds))
    else:
        strategy = SeedListStrategy(seeds, fallback=smallest_edge)
        decomposition = connected_seed_decomposition(graph, strategy)
    return decomposition_to_dict(decomposition.validate()), False


def _edges(groups):
    edges = []
    for group in groups:
        if len(group) != 2:
            raise UsageError(f"an edge needs two vertices, got {sorted(group)}")
        edges.append(tuple(group))
    return edges


def _matching(config, graph):
    if config.set_list:
        edges = [graph.vertex_set(group) for group in config.set_list]
        matching = Matching.for_graph(graph, _edges(edges))
        maximal, extendable = is_maximal(graph, matching)
        decomposition = None
        if maximal:
            decomposition = decomposition_from_matching(graph, matching)
        report = matching_to_dict(graph, matching, maximal, extendable, decomposition)
        return report, not maximal
    seeds = [graph.vertex_set(seed) for seed in config.seed_list or ()]
    decomposition = arc_seed_decomposition(graph, _edges(seeds)).validate()
    matching = matching_from_decomposition(decomposition)
    return matching_to_dict(graph, matching, True, decomposition=decomposition), False


def _turan_check(config, graph):
    p, q = graph.volume()
    witness = find_bowtie(graph)
    k4 = is_k4(graph)
    within = within_volume_bound(p, q)
    suite = lemma_suite(graph, config.budget_vertices, config.budget_seconds)
    lemmas = [report.as_dict() for report in suite]
    report = {
        "p": p,
        "q": q,
        "formula_bound": p * p // 4 + 1,
        "bowtie": witness_to_dict(witness) if witness is not None else None,
        "k4": k4,
        "within_bound": within,
        "lemmas": lemmas,
    }
    negative = (not within and not k4) or not all(item["ok"] for item in lemmas)
    return report, negative


def _turan_oracle(config, graph):
    report = ex_oracle(config.p, config.budget_vertices, config.budget_seconds)
    return report.as_dict(), False


def _turan_extremal(config, graph):
    return extremal_report(config.p).as_dict(), False


def _jet_verify(config, graph):
    jet = Jet.from_labels(graph, config.set_list)
    ok, violation = verify_jet(graph, jet)
    return jet_check_to_dict(graph, jet, ok, violation), not ok


HANDLERS = {
    cli.INFLATE: (_inflate, trace_schema),
    cli.DECOMPOSE: (_decompose, decomposition_schema),
    cli.MATCHING: (_matching, matching_schema),
    cli.TURAN_CHECK: (_turan_check, turan_check_schema),
    cli.TURAN_ORACLE: (_turan_oracle, extremal_report_schema),
    cli.TURAN_EXTREMAL: (_turan_extremal, extremal_report_schema),
    cli.JET_VERIFY: (_jet_verify, jet_check_schema),
}


def run(config, stdin=None):
    """Runs ``config`` and returns a ``RunResult``."""
    handler, schema = HANDLERS[config.command]
    graph = load_graph(config, stdin) if config.reads_graph else None
    report, negative = handler(config, graph)
    validate(report, schema)
    return RunResult(config.command, report, negative)
