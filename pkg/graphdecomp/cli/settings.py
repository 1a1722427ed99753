from ..settings import get_settings_value

JSON_INDENT = get_settings_value("JSON_INDENT", 4)
