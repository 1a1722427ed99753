import os
import sys

# Mirror runtests.py so the suite can be collected by pytest.
sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "tests"))
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "graphdecomp_project.settings")

import django  # noqa: E402

# graphdecomp_project.settings detects test mode via ``"test" in sys.argv``,
# which holds under runtests.py (manage.py test) but not under pytest.
_argv = sys.argv
sys.argv = _argv + ["test"]
try:
    django.setup()
finally:
    sys.argv = _argv


def _tags(item):
    tags = set(getattr(getattr(item, "function", None), "tags", ()))
    tags |= set(getattr(getattr(item, "cls", None), "tags", ()))
    return tags


def pytest_collection_modifyitems(config, items):
    # runtests.py passes ``--exclude-tag acceptance`` unless ACCEPTANCE is set
    if os.environ.get("ACCEPTANCE", False):
        return
    selected, deselected = [], []
    for item in items:
        (deselected if "acceptance" in _tags(item) else selected).append(item)
    if deselected:
        config.hook.pytest_deselected(items=deselected)
        items[:] = selected
