from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _

from graphdecomp.graph import checks  # noqa


class GraphConfig(AppConfig):
    name = "graphdecomp.graph"
    label = "graphdecomp_graph"
    verbose_name = _("Graph Core")
