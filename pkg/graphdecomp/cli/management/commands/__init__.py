import argparse

from django.core.management.base import BaseCommand, CommandError

from ....graph.exceptions import (
    BudgetExceeded,
    ContractViolation,
    GraphDomainError,
    ParseError,
)
from ....graph.parsers import EDGE_LIST, FORMATS
from ...config import (
    COMMANDS,
    DECOMPOSE,
    INTERVAL,
    JET_VERIFY,
    JSON,
    METHODS,
    OUTPUTS,
    P_COMMANDS,
    RunConfig,
)
from ...exceptions import UsageError
from ...renderers import render
from ...runner import run

USAGE = 2
NEGATIVE = 1

HELP = {
    "inflate": "hyperinflation trace of a vertex set",
    "decompose": "interval or seeded decomposition",
    "matching": "maximal matching and its arc-seed decomposition",
    "turan-check": "bowtie search, volume bound and path lemmas",
    "turan-oracle": "exact ex(p, H) by exhaustive search",
    "turan-extremal": "the extremal bowtie-free construction",
    "jet-verify": "checks that layers form a jet",
}


class BaseGraphDecompCommand(BaseCommand):
    help = "Decomposes graphs and checks bowtie-free extremal bounds"
    stealth_options = ("stdin",)

    def _common_options(self):
        parser = argparse.ArgumentParser(add_help=False)
        parser.add_argument(
            "--output",
            choices=OUTPUTS,
            default=JSON,
            help="json (default) or a text rendering of the same report",
        )
        parser.add_argument("--budget-vertices", type=int, dest="budget_vertices")
        parser.add_argument("--budget-seconds", type=float, dest="budget_seconds")
        return parser

    def _graph_options(self):
        parser = argparse.ArgumentParser(add_help=False)
        parser.add_argument(
            "input", nargs="?", default="-", help="graph file, - for standard input"
        )
        parser.add_argument("--directed", action="store_true", default=False)
        parser.add_argument("--format", choices=FORMATS, default=EDGE_LIST)
        parser.add_argument("--seeds", help='seed sets like "a,b;c"')
        parser.add_argument("--set", help='vertex sets like "a,b;c"')
        return parser

    def add_arguments(self, parser):
        subparsers = parser.add_subparsers(dest="command", required=True)
        common = self._common_options()
        graph = self._graph_options()
        for command in COMMANDS:
            parents = [common] if command in P_COMMANDS else [common, graph]
            subparser = subparsers.add_parser(
                command, parents=parents, help=HELP[command]
            )
            if command in P_COMMANDS:
                subparser.add_argument("--p", type=int, required=True)
            if command == JET_VERIFY:
                subparser.add_argument("--layers", help='jet layers like "a;b,c;d"')
            if command == DECOMPOSE:
                subparser.add_argument("--method", choices=METHODS)
                subparser.add_argument(
                    "--intervals", action="store_const", const=INTERVAL, dest="method"
                )

    def handle(self, *args, **options):
        try:
            config = RunConfig.from_options(options)
            result = run(config, options.get("stdin"))
        except (
            UsageError,
            ParseError,
            GraphDomainError,
            ContractViolation,
            BudgetExceeded,
        ) as error:
            raise CommandError(str(error), returncode=USAGE)
        except OSError as error:
            raise CommandError(f"cannot read input: {error}", returncode=USAGE)
        self.stdout.write(render(config, result))
        if result.negative:
            raise CommandError(
                f"{result.command} reported a negative finding", returncode=NEGATIVE
            )
