from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _


class DecompositionConfig(AppConfig):
    name = "graphdecomp.decomposition"
    label = "graphdecomp_decomposition"
    verbose_name = _("Graph Decompositions")
