class GraphDomainError(ValueError):
    pass


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            position = f"line {line}"
            if column is not None:
                position = f"{position}, column {column}"
            message = f"{position}: {message}"
        super().__init__(message)


class BudgetExceeded(RuntimeError):
    pass


class ContractViolation(RuntimeError):
    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
