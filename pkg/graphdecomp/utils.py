import logging
import time
from functools import wraps

from . import settings as app_settings
from .graph.exceptions import BudgetExceeded

logger = logging.getLogger(__name__)


def get_budget(name, override=None):
    """Returns ``override`` if given, otherwise the configured budget."""
    if override is not None:
        return override
    return app_settings.BUDGETS.get(name)


def get_thread_count():
    return max(1, int(app_settings.THREADS))


def get_deadline(seconds=None):
    """Converts a budget in seconds to an absolute wall clock deadline.

    Wall clock time is used because deadlines travel to worker processes.
    """
    seconds = get_budget("seconds", seconds)
    if seconds is None:
        return None
    return time.time() + seconds


def check_deadline(deadline, what):
    if deadline is not None and time.time() > deadline:
        raise BudgetExceeded(f"{what} exceeded the time budget")


def check_vertex_budget(name, vertex_count, budget=None, work=None):
    budget = get_budget(name, budget)
    if budget is not None and vertex_count > budget:
        message = (
            f"{vertex_count} vertices exceed the {name} budget of {budget} vertices"
        )
        if work is not None:
            message = f"{message} (estimated work: {work} candidates)"
        raise BudgetExceeded(message)


def timed(method):
    """Logs how long ``method`` took, like the timed checks do."""

    @wraps(method)
    def wrapper(*args, **kwargs):
        start_time = time.time()
        result = method(*args, **kwargs)
        logger.info(
            '"%s" executed in %.2fs' % (method.__name__, time.time() - start_time)
        )
        return result

    return wrapper
