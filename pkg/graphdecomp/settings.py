import os

from django.conf import settings

from openwisp_utils.utils import deep_merge_dicts


def get_settings_value(option, default=None):
    return getattr(settings, f"GRAPHDECOMP_{option}", default)


DEFAULT_BUDGETS = {
    # exhaustive DFS over simple paths
    "longest_path": 15,
    # branch and bound over matchings
    "greatest_matching": 16,
    # p = 8 already means 13 million candidate graphs
    "ex_oracle": 7,
    "k3_check": 6,
    # wall clock limit for the oracle, None means unlimited
    "seconds": None,
}

BUDGETS = deep_merge_dicts(DEFAULT_BUDGETS, get_settings_value("BUDGETS", {}))

# the environment variable wins over the django setting
THREADS = os.environ.get(
    "GRAPHDECOMP_THREADS", get_settings_value("THREADS", os.cpu_count() or 1)
)
