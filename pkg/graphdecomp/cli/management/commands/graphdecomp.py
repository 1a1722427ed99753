from . import BaseGraphDecompCommand


class Command(BaseGraphDecompCommand):
    pass
