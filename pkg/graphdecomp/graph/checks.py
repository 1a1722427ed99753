from django.core.checks import Error, register
from jsonschema import Draft7Validator

from .. import settings as app_settings

BUDGETS_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "longest_path": {"type": "integer", "minimum": 0},
        "greatest_matching": {"type": "integer", "minimum": 0},
        "ex_oracle": {"type": "integer", "minimum": 2},
        "k3_check": {"type": "integer", "minimum": 2},
        "seconds": {"type": ["number", "null"], "exclusiveMinimum": 0},
    },
}


@register()
def check_budgets(app_configs, **kwargs):
    errors = []
    validator = Draft7Validator(BUDGETS_SCHEMA)
    for error in sorted(validator.iter_errors(app_settings.BUDGETS), key=str):
        path = "/".join(str(part) for part in error.path)
        message = "Invalid budget"
        if path:
            message = f'{message} in "{path}"'
        errors.append(
            Error(
                f"{message}: {error.message}",
                hint="Budgets limit the exhaustive searches, see DEFAULT_BUDGETS",
                obj="GRAPHDECOMP_BUDGETS",
            )
        )
    return errors


@register()
def check_threads(app_configs, **kwargs):
    try:
        threads = int(app_settings.THREADS)
    except (TypeError, ValueError):
        threads = 0
    if threads < 1:
        return [
            Error(
                f"Invalid thread count: {app_settings.THREADS!r}",
                hint="Use a positive integer",
                obj="GRAPHDECOMP_THREADS",
            )
        ]
    return []
