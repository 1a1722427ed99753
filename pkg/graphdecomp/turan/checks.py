from django.core.checks import Error, register

from . import settings as app_settings


@register()
def check_oracle_backend(app_configs, **kwargs):
    errors = []
    if app_settings.ORACLE_BACKEND not in app_settings.ORACLE_BACKENDS:
        errors.append(
            Error(
                f"Invalid oracle backend: {app_settings.ORACLE_BACKEND!r}",
                hint=f"Use one of {', '.join(app_settings.ORACLE_BACKENDS)}",
                obj="GRAPHDECOMP_ORACLE_BACKEND",
            )
        )
    limit = app_settings.ORACLE_TASK_TIME_LIMIT
    if not isinstance(limit, int) or isinstance(limit, bool) or limit <= 0:
        errors.append(
            Error(
                f"Invalid task time limit: {limit!r}",
                hint="Use a positive number of seconds",
                obj="GRAPHDECOMP_ORACLE_TASK_TIME_LIMIT",
            )
        )
    return errors
