class UsageError(ValueError):
    """Invalid combination of command line options."""
