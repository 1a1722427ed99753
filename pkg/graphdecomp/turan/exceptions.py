from ..graph.exceptions import GraphDomainError


class PreconditionError(GraphDomainError):
    """A lemma check was called on a graph outside its hypotheses."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
