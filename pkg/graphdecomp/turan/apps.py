from django.apps import AppConfig
from django.utils.translation import gettext_lazy as _

from graphdecomp.turan import checks  # noqa


class TuranConfig(AppConfig):
    name = "graphdecomp.turan"
    label = "graphdecomp_turan"
    verbose_name = _("Bowtie Turán Numbers")
