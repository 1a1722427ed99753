from ..settings import get_settings_value

ORACLE_BACKENDS = ("local", "celery")
ORACLE_BACKEND = get_settings_value("ORACLE_BACKEND", "local")
ORACLE_TASK_TIME_LIMIT = get_settings_value(
    "ORACLE_TASK_TIME_LIMIT", 30 * 60
)  # in seconds, for one enumeration chunk
