import json

from . import settings as app_settings
from .config import TEXT


def render_json(report):
    return json.dumps(
        report, indent=app_settings.JSON_INDENT, sort_keys=True, ensure_ascii=False
    )


def _format_value(value):
    if isinstance(value, list) and all(isinstance(item, str) for item in value):
        return "{" + ", ".join(value) + "}"
    if isinstance(value, list):
        return " ".join(_format_value(item) for item in value) or "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    return str(value)


def _is_records(value):
    return isinstance(value, list) and value and all(isinstance(i, dict) for i in value)


def _render(data, indent=0):
    lines = []
    prefix = "  " * indent
    for key in sorted(data):
        value = data[key]
        name = key.replace("_", " ")
        if isinstance(value, dict):
            lines.append(f"{prefix}{name}:")
            lines.extend(_render(value, indent + 1))
        elif _is_records(value):
            lines.append(f"{prefix}{name}:")
            for position, item in enumerate(value, start=1):
                lines.append(f"{prefix}  [{position}]")
                lines.extend(_render(item, indent + 2))
        else:
            lines.append(f"{prefix}{name}: {_format_value(value)}")
    return lines


def render_text(command, report):
    """A human readable rendering of ``report``, not meant to be parsed."""
    return "\n".join([f"graphdecomp {command}", *_render(report)])


def render(config, result):
    if config.output == TEXT:
        return render_text(result.command, result.report)
    return render_json(result.report)
