"""Entry point of the ``graphdecomp`` console script.

Outside a Django project the apps are configured on the fly; inside one
(``DJANGO_SETTINGS_MODULE`` set) the project settings are used as is.
"""
import os
import sys

import django
from django.conf import settings
from django.core.management import execute_from_command_line

INSTALLED_APPS = [
    "graphdecomp.graph",
    "graphdecomp.decomposition",
    "graphdecomp.turan",
    "graphdecomp.cli",
]


def configure():
    if settings.configured or os.environ.get("DJANGO_SETTINGS_MODULE"):
        return
    settings.configure(
        INSTALLED_APPS=INSTALLED_APPS,
        LOGGING={
            "version": 1,
            "disable_existing_loggers": False,
            "handlers": {"console": {"class": "logging.StreamHandler"}},
            "loggers": {
                "graphdecomp": {
                    "handlers": ["console"],
                    "level": os.getenv("GRAPHDECOMP_LOG_LEVEL", "WARNING"),
                }
            },
        },
    )


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    configure()
    django.setup()
    execute_from_command_line(["graphdecomp", "graphdecomp", *argv])


if __name__ == "__main__":
    main()
