import re

from .digraph import Digraph
from .exceptions import GraphDomainError, ParseError
from .undirected import UndirectedGraph

EDGE_LIST = "edge-list"
DOT = "dot-subset"
FORMATS = (EDGE_LIST, DOT)


class _GraphBuilder(object):
    """Interns labels in order of first appearance and collects pairs."""

    def __init__(self, directed):
        self.directed = directed
        self.labels = {}
        self.pairs = []

    def vertex(self, label):
        return self.labels.setdefault(label, len(self.labels))

    def pair(self, tail, head, line=None, column=None):
        if not self.directed and tail == head:
            raise ParseError(
                f'loop "{tail} {head}" is not allowed in an undirected graph',
                line=line,
                column=column,
            )
        self.pairs.append((self.vertex(tail), self.vertex(head)))

    def build(self):
        graph_class = Digraph if self.directed else UndirectedGraph
        # duplicate arcs collapse inside the graph constructors
        return graph_class(len(self.labels), self.pairs, labels=list(self.labels))


def parse_edge_list(text, directed=True):
    """Parses the edge-list format.

    One ``u v`` pair per line, ``#`` starts a comment and a bare label on its
    own line declares a vertex. Directedness is chosen by the caller.
    """
    builder = _GraphBuilder(directed)
    for number, line in enumerate(text.splitlines(), start=1):
        tokens = line.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) == 1:
            builder.vertex(tokens[0])
        elif len(tokens) == 2:
            builder.pair(tokens[0], tokens[1], line=number)
        else:
            raise ParseError(
                f'expected "u v" or a single vertex label, got {len(tokens)} fields',
                line=number,
            )
    return builder.build()


def dump_edge_list(graph):
    """Writes ``graph`` in the edge-list format.

    Every vertex is declared first, in index order, so that parsing the
    output interns the labels in the same order.
    """
    for label in graph.labels:
        if not label or any(char.isspace() for char in label) or "#" in label:
            raise GraphDomainError(
                f'label "{label}" cannot be written in the edge-list format'
            )
    lines = list(graph.labels)
    pairs = graph.sorted_arcs() if graph.directed else graph.sorted_edges()
    for tail, head in pairs:
        lines.append(f"{graph.labels[tail]} {graph.labels[head]}")
    return "\n".join(lines) + "\n"


_DOT_TOKEN = re.compile(
    r"""
    (?P<space>\s+)
    |(?P<comment>//[^\n]*|/\*.*?\*/|^\#[^\n]*)
    |(?P<arrow>->|--)
    |(?P<string>"(?:[^"\\]|\\.)*")
    |(?P<id>[^\W\d]\w*|-?(?:\.\d+|\d+(?:\.\d*)?))
    |(?P<punct>[{}\[\];,=:])
    """,
    re.VERBOSE | re.DOTALL | re.MULTILINE,
)
_KEYWORDS = {"strict", "graph", "digraph", "node", "edge", "subgraph"}


def _tokenize_dot(text):
    position = 0
    tokens = []
    while position < len(text):
        match = _DOT_TOKEN.match(text, position)
        line = text.count("\n", 0, position) + 1
        column = position - text.rfind("\n", 0, position)
        if not match:
            raise ParseError(
                f"unexpected character {text[position]!r}", line=line, column=column
            )
        kind = match.lastgroup
        value = match.group()
        position = match.end()
        if kind in ("space", "comment"):
            continue
        if kind == "string":
            kind = "id"
            value = value[1:-1].replace('\\"', '"')
        elif kind == "id" and value.lower() in _KEYWORDS:
            kind = value.lower()
        elif kind == "punct":
            kind = value
        tokens.append((kind, value, line, column))
    tokens.append(("end", "", text.count("\n") + 1, 0))
    return tokens


class _DotParser(object):
    def __init__(self, text):
        self.tokens = _tokenize_dot(text)
        self.position = 0

    def peek(self):
        return self.tokens[self.position]

    def take(self, *kinds):
        token = self.peek()
        if kinds and token[0] not in kinds:
            expected = " or ".join(repr(kind) for kind in kinds)
            found = token[1] or "end of input"
            raise ParseError(
                f"expected {expected}, found {found!r}", line=token[2], column=token[3]
            )
        self.position += 1
        return token

    def accept(self, *kinds):
        if self.peek()[0] in kinds:
            return self.take()
        return None

    def skip_attributes(self):
        while self.accept("["):
            while not self.accept("]"):
                if self.peek()[0] == "end":
                    self.take("]")
                self.take()

    def parse(self):
        self.accept("strict")
        header = self.take("graph", "digraph")
        builder = _GraphBuilder(directed=header[0] == "digraph")
        self.accept("id")
        self.take("{")
        while not self.accept("}"):
            self.statement(builder)
        self.take("end")
        return builder.build()

    def statement(self, builder):
        if self.accept(";", ","):
            return
        kind = self.peek()[0]
        if kind in ("graph", "node", "edge"):
            self.take()
            self.skip_attributes()
            return
        if kind == "subgraph":
            token = self.peek()
            raise ParseError(
                "subgraphs are not supported", line=token[2], column=token[3]
            )
        chain = [self.take("id")[1]]
        if self.accept("="):
            # graph attribute assignment, e.g. rankdir=LR
            self.take("id")
            return
        while self.peek()[0] == "arrow":
            arrow = self.take()
            if (arrow[1] == "->") != builder.directed:
                message = (
                    "undirected edge in a digraph"
                    if builder.directed
                    else "directed edge in an undirected graph"
                )
                raise ParseError(message, line=arrow[2], column=arrow[3])
            head = self.take("id")
            builder.pair(chain[-1], head[1], line=head[2], column=head[3])
            chain.append(head[1])
        if len(chain) == 1:
            builder.vertex(chain[0])
        self.skip_attributes()


def parse_dot_subset(text):
    """Parses the supported subset of the DOT language.

    ``digraph``/``graph`` headers, ``a -> b`` / ``a -- b`` statements (also
    chained), bare node statements and quoted identifiers are understood;
    attribute lists are ignored. The header decides directedness.
    """
    return _DotParser(text).parse()


def parse_graph(text, fmt=EDGE_LIST, directed=True):
    if fmt == EDGE_LIST:
        return parse_edge_list(text, directed=directed)
    if fmt == DOT:
        return parse_dot_subset(text)
    raise GraphDomainError(f'unknown graph format "{fmt}"')
