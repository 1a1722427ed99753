from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class CliConfig(AppConfig):
    name = "graphdecomp.cli"
    label = "graphdecomp_cli"
    verbose_name = _("Graph Decomposition Command Line")
