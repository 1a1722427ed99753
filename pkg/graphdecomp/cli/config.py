from ..graph.parsers import EDGE_LIST, FORMATS
from .exceptions import UsageError

INFLATE = "inflate"
DECOMPOSE = "decompose"
MATCHING = "matching"
TURAN_CHECK = "turan-check"
TURAN_ORACLE = "turan-oracle"
TURAN_EXTREMAL = "turan-extremal"
JET_VERIFY = "jet-verify"
COMMANDS = (
    INFLATE,
    DECOMPOSE,
    MATCHING,
    TURAN_CHECK,
    TURAN_ORACLE,
    TURAN_EXTREMAL,
    JET_VERIFY,
)
# commands that build their graph from p instead of reading one
P_COMMANDS = (TURAN_ORACLE, TURAN_EXTREMAL)
UNDIRECTED_COMMANDS = (MATCHING, TURAN_CHECK)

INTERVAL = "interval"
CONNECTED_SEED = "connected-seed"
ARC_SEED = "arc-seed"
METHODS = (INTERVAL, CONNECTED_SEED, ARC_SEED)

JSON = "json"
TEXT = "text"
OUTPUTS = (JSON, TEXT)


def parse_set_list(value):
    """Parses ``"a,b;c"`` into ``[["a", "b"], ["c"]]``."""
    if value is None:
        return None
    groups = []
    for group in value.split(";"):
        labels = [label.strip() for label in group.split(",")]
        if not all(labels):
            raise UsageError(f'empty vertex label in "{value}"')
        groups.append(labels)
    return groups


class RunConfig(object):
    """One invocation of the graphdecomp command."""

    def __init__(
        self,
        command,
        input_path="-",
        directed=False,
        fmt=EDGE_LIST,
        output=JSON,
        method=None,
        seed_list=None,
        set_list=None,
        p=None,
        budget_vertices=None,
        budget_seconds=None,
    ):
        self.command = command
        self.input_path = input_path
        self.directed = directed
        self.fmt = fmt
        self.output = output
        self.method = method
        self.seed_list = seed_list
        self.set_list = set_list
        self.p = p
        self.budget_vertices = budget_vertices
        self.budget_seconds = budget_seconds
        self.validate()

    def __repr__(self):
        return f"<RunConfig {self.command}>"

    @classmethod
    def from_options(cls, options):
        command = options["command"]
        set_list = options.get("set")
        if command == JET_VERIFY:
            set_list = options.get("layers")
        return cls(
            command,
            input_path=options.get("input") or "-",
            directed=options.get("directed", False),
            fmt=options.get("format") or EDGE_LIST,
            output=options.get("output") or JSON,
            method=options.get("method"),
            seed_list=parse_set_list(options.get("seeds")),
            set_list=parse_set_list(set_list),
            p=options.get("p"),
            budget_vertices=options.get("budget_vertices"),
            budget_seconds=options.get("budget_seconds"),
        )

    @property
    def reads_graph(self):
        return self.command not in P_COMMANDS

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f'unknown command "{self.command}"')
        if self.fmt not in FORMATS:
            raise UsageError(f'unknown format "{self.fmt}"')
        if self.output not in OUTPUTS:
            raise UsageError(f'unknown output "{self.output}"')
        if self.command in P_COMMANDS and self.p is None:
            raise UsageError(f"{self.command} requires --p")
        if self.command in (INFLATE, JET_VERIFY) and not self.set_list:
            option = "--layers" if self.command == JET_VERIFY else "--set"
            raise UsageError(f"{self.command} requires {option}")
        if self.command == INFLATE and len(self.set_list) != 1:
            raise UsageError("inflate takes a single vertex set")
        if self.command in UNDIRECTED_COMMANDS and self.directed:
            raise UsageError(f"{self.command} works on undirected graphs only")
        if self.method is not None and self.method not in METHODS:
            raise UsageError(f'unknown decomposition method "{self.method}"')
        if self.method == ARC_SEED and self.directed:
            raise UsageError("arc-seed decompositions need an undirected graph")
        if self.budget_vertices is not None and self.budget_vertices < 0:
            raise UsageError("--budget-vertices must not be negative")
        if self.budget_seconds is not None and self.budget_seconds <= 0:
            raise UsageError("--budget-seconds must be positive")
