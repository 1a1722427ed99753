"""Checks of the degree and volume bounds behind ex(p, H).

Each check returns a ``LemmaReport``. A report whose numeric hypotheses do
not hold is marked not applicable; a graph outside the structural
hypotheses (bowtie present, disconnected, edgeless) raises
``PreconditionError`` instead. Paths have length l = number of vertices.
"""
import logging

from ..decomposition.inflation import inflate
from ..graph.exceptions import GraphDomainError
from ..graph.paths import Path, longest_paths
from ..utils import get_deadline
from .bowtie import find_bowtie, has_k4_mask, witness_to_dict
from .exceptions import PreconditionError
from .extremal import is_k4

logger = logging.getLogger(__name__)

PATH_DEGREE = "path-degree"
PREMAXIMAL = "premaximal"
SHORT_PATH = "short-path"
VOLUME_BOUND = "volume-bound"
COMPONENT_ADDITIVITY = "component-additivity"
VERTEX_EXCHANGE = "vertex-exchange"


class LemmaReport(object):
    def __init__(self, name, applicable=True, reason=None, details=None):
        self.name = name
        self.applicable = applicable
        self.reason = reason
        self.details = details or {}
        self.violations = []

    def __repr__(self):
        return f"<LemmaReport {self.name} ok={self.ok}>"

    @property
    def ok(self):
        return not self.violations

    def violation(self, condition, **witness):
        self.violations.append({"condition": condition, **witness})

    def as_dict(self):
        return {
            "name": self.name,
            "applicable": self.applicable,
            "reason": self.reason,
            "ok": self.ok,
            "details": self.details,
            "violations": self.violations,
        }


def half_up(length):
    """⌈l/2⌉"""
    return (length + 1) // 2


def within_volume_bound(p, q):
    """q ≤ p²/4 + 1, kept in integers."""
    return 4 * q <= p * p + 4


def _require_bowtie_free(graph):
    witness = find_bowtie(graph)
    if witness is not None:
        raise PreconditionError("the graph contains a bowtie", witness=witness)


def _require_connected(graph):
    if not graph.is_connected():
        raise PreconditionError("the graph is not connected")
    if not graph.edge_count():
        raise PreconditionError("the graph is completely disconnected")


def _path_and_vertex(graph, path, x):
    path = Path(graph.resolve(vertex) for vertex in path)
    if not path:
        raise GraphDomainError("the path is empty")
    if not path.is_path_in(graph):
        raise GraphDomainError(f"{graph.labels_of(path)} is not a path in the graph")
    x = graph.resolve(x)
    if x in path:
        raise GraphDomainError(f'vertex "{graph.label(x)}" lies on the path')
    return path, x


def _degree(graph, vertex, subset):
    return (graph.in_mask(vertex) & subset.mask).bit_count()


def _path_degree(report, graph, path, x):
    """Adds the violations of the path degree lemma for ``x`` to ``report``."""
    adjacency = graph.in_mask(x)
    length = len(path)
    degree = _degree(graph, x, path.as_set())
    bound = half_up(length) + 1
    witness = {"path": [graph.label(v) for v in path], "vertex": graph.label(x)}
    if degree > bound:
        report.violation("degree-bound", degree=degree, **witness)
    if degree != bound:
        return False
    adjacent = [bool(adjacency >> vertex & 1) for vertex in path]
    if not any(first and second for first, second in zip(adjacent, adjacent[1:])):
        report.violation("consecutive-pair", **witness)
    if length % 2 == 0 and not (adjacent[0] or adjacent[-1]):
        report.violation("endpoint", **witness)
    if length % 2 == 1 and not (adjacent[0] and adjacent[-1]):
        report.violation("both-endpoints", **witness)
    return True


def check_path_degree_lemma(graph, path, x):
    """Checks d(x,U) ≤ ⌈l/2⌉ + 1 and, on equality, that x is adjacent to two
    consecutive path vertices and to one (l even) or both (l odd) ends."""
    _require_bowtie_free(graph)
    path, x = _path_and_vertex(graph, path, x)
    report = LemmaReport(PATH_DEGREE)
    equality = _path_degree(report, graph, path, x)
    report.details = {
        "length": len(path),
        "degree": _degree(graph, x, path.as_set()),
        "bound": half_up(len(path)) + 1,
        "equality": equality,
    }
    return report


def check_maximal_path_degrees(graph, budget=None, deadline=None):
    """Runs the path degree lemma on every maximal path and outside vertex."""
    _require_bowtie_free(graph)
    longest = longest_paths(graph, budget, deadline)
    report = LemmaReport(PATH_DEGREE)
    paths = equalities = 0
    for path in longest.maximal_paths():
        paths += 1
        for x in graph.vertices() - path.as_set():
            equalities += _path_degree(report, graph, path, x)
    report.details = {
        "length": longest.length,
        "paths": paths,
        "equalities": equalities,
    }
    return report


def check_premaximal_lemmas(graph, budget=None, deadline=None):
    """Checks every premaximal path U of a connected H-free graph.

    Inf U ≠ U; if some outside x has d(x,U) = ⌈l/2⌉ + 1 every other outside
    vertex has degree at most ⌈l/2⌉ - 1 into U; and when |Inf U| - l ≥ 2,
    d(Inf U \\ U, U) ≤ (|Inf U| - l)⌈l/2⌉.
    """
    _require_connected(graph)
    _require_bowtie_free(graph)
    longest = longest_paths(graph, budget, deadline)
    report = LemmaReport(PREMAXIMAL)
    length = longest.length - 1
    ceiling = half_up(length)
    paths = 0
    for path in longest.premaximal_paths():
        paths += 1
        subset = path.as_set()
        labels = [graph.label(v) for v in path]
        inflated = inflate(graph, subset)
        if inflated == subset:
            report.violation("inflation-grows", path=labels)
        degrees = {x: _degree(graph, x, subset) for x in graph.vertices() - subset}
        saturated = [x for x, degree in degrees.items() if degree == ceiling + 1]
        if saturated:
            x = saturated[0]
            for y, degree in degrees.items():
                if y != x and degree > ceiling - 1:
                    report.violation(
                        "second-vertex",
                        path=labels,
                        vertex=graph.label(y),
                        saturated=graph.label(x),
                        degree=degree,
                    )
        grown = inflated - subset
        if len(grown) >= 2:
            total = sum(_degree(graph, x, subset) for x in grown)
            if total > len(grown) * ceiling:
                report.violation("aggregate", path=labels, degree=total)
    report.details = {"length": length, "paths": paths}
    logger.debug(f"checked {paths} premaximal paths of {graph!r}")
    return report


def _is_star(graph):
    p = graph.vertex_count
    return graph.edge_count() == p - 1 and any(
        graph.in_mask(v).bit_count() == p - 1 for v in range(p)
    )


def check_short_path_prop(graph, budget=None, deadline=None):
    """Graphs whose longest path has at most 2 edges (3 vertices) satisfy
    q ≤ p²/4 + 1 and are K_p for p ≤ 3 or a star K_{1,p-1}."""
    if not graph.is_connected():
        raise PreconditionError("the graph is not connected")
    p, q = graph.volume()
    length = longest_paths(graph, budget, deadline).length
    details = {"p": p, "q": q, "longest_path": length}
    if length > 3:
        return LemmaReport(
            SHORT_PATH, False, f"the longest path has {length} vertices", details
        )
    report = LemmaReport(SHORT_PATH, details=details)
    if not within_volume_bound(p, q):
        report.violation("volume-bound", q=q)
    complete = p <= 3 and q == p * (p - 1) // 2
    if not (complete or _is_star(graph)):
        report.violation("shape")
    return report


def volume_bound_check(graph):
    """q ≤ p²/4 + 1 for H-free graphs other than K₄."""
    p, q = graph.volume()
    details = {"p": p, "q": q, "bound": p * p // 4 + 1}
    witness = find_bowtie(graph)
    if witness is not None:
        details["bowtie"] = witness_to_dict(witness)
        return LemmaReport(VOLUME_BOUND, False, "the graph contains a bowtie", details)
    if is_k4(graph):
        return LemmaReport(VOLUME_BOUND, False, "K4 is exempt", details)
    report = LemmaReport(VOLUME_BOUND, details=details)
    if not within_volume_bound(p, q):
        report.violation("volume-bound", q=q)
    return report


def check_component_additivity(graph):
    """If every connected component obeys q_j ≤ p_j²/4 + 1, so does the graph."""
    components = graph.connected_components()
    volumes = [graph.induced_subgraph(component).volume() for component in components]
    details = {"volumes": [list(volume) for volume in volumes]}
    if len(components) < 2:
        return LemmaReport(
            COMPONENT_ADDITIVITY, False, "the graph is connected", details
        )
    if not all(within_volume_bound(p, q) for p, q in volumes):
        return LemmaReport(
            COMPONENT_ADDITIVITY, False, "a component exceeds the volume bound", details
        )
    report = LemmaReport(COMPONENT_ADDITIVITY, details=details)
    if not within_volume_bound(*graph.volume()):
        report.violation("volume-bound", q=graph.edge_count())
    return report


def check_vertex_exchange_lemma(graph, path, x):
    """Checks that some path vertex v_j has d(v_j, U \\ {v_j} ∪ {x}) ≤ ⌈l/2⌉.

    Hypotheses: l ≥ 3, G is H- and K₄-free, d(x,U) = ⌈l/2⌉ + 1 and G[U]
    has at most l²/4 + 1 edges.
    """
    _require_bowtie_free(graph)
    if has_k4_mask(graph.adjacency()):
        raise PreconditionError("the graph contains K4")
    path, x = _path_and_vertex(graph, path, x)
    length = len(path)
    subset = path.as_set()
    ceiling = half_up(length)
    degree = _degree(graph, x, subset)
    inner = graph.induced_subgraph(subset).edge_count()
    details = {"length": length, "degree": degree, "path_edges": inner}
    if length < 3:
        return LemmaReport(
            VERTEX_EXCHANGE, False, "the path has fewer than 3 vertices", details
        )
    if degree != ceiling + 1:
        return LemmaReport(
            VERTEX_EXCHANGE, False, f"d(x,U) is {degree}, not {ceiling + 1}", details
        )
    if not within_volume_bound(length, inner):
        return LemmaReport(
            VERTEX_EXCHANGE, False, "G[U] exceeds the volume bound", details
        )
    report = LemmaReport(VERTEX_EXCHANGE, details=details)
    extended = subset.with_vertex(x)
    exchangeable = [
        vertex
        for vertex in path
        if _degree(graph, vertex, extended.without_vertex(vertex)) <= ceiling
    ]
    details["exchangeable"] = [graph.label(vertex) for vertex in exchangeable]
    if not exchangeable:
        report.violation(
            "exchange", path=[graph.label(v) for v in path], vertex=graph.label(x)
        )
    return report


def lemma_suite(graph, budget=None, seconds=None):
    """All checks that apply to ``graph``, as used by ``turan-check``.

    ``budget`` bounds the vertex count of the path searches and ``seconds``
    their wall clock time, both falling back to the configured budgets.
    """
    deadline = get_deadline(seconds)
    reports = [volume_bound_check(graph), check_component_additivity(graph)]
    if find_bowtie(graph) is not None or not graph.edge_count():
        return reports
    reports.append(check_maximal_path_degrees(graph, budget, deadline))
    if graph.is_connected():
        reports.append(check_premaximal_lemmas(graph, budget, deadline))
        reports.append(check_short_path_prop(graph, budget, deadline))
    return reports

