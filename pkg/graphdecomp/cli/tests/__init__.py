import json
from io import StringIO

from django.core.management import call_command

P4 = "a b\nb c\nc d\n"
CHAIN = "a b\nb c\n"
BOWTIE = "c x\nc y\nx y\nc u\nc v\nu v\n"
K4 = "a b\na c\na d\nb c\nb d\nc d\n"
K5 = K4 + "e a\ne b\ne c\ne d\n"


class TestCommandMixin(object):
    def _call(self, *args, stdin=""):
        out = StringIO()
        call_command("graphdecomp", *args, stdin=StringIO(stdin), stdout=out)
        return out.getvalue()

    def _call_json(self, *args, stdin=""):
        return json.loads(self._call(*args, stdin=stdin))
