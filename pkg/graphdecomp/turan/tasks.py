import logging

from celery import shared_task

from . import settings as app_settings
from .search import search_chunk

logger = logging.getLogger(__name__)


@shared_task(time_limit=app_settings.ORACLE_TASK_TIME_LIMIT)
def search_bowtie_free_chunk(vertex_count, edge_count, first, deadline=None):
    """Searches one chunk of the m-edge graphs for a bowtie-free graph.

    Returns a JSON serializable dict with the edge list found (or ``None``)
    and the number of graphs checked.
    """
    edges, checked = search_chunk(vertex_count, edge_count, first, deadline)
    logger.debug(
        f"chunk {first} of p={vertex_count}, m={edge_count}: {checked} graphs checked"
    )
    return {"edges": edges, "checked": checked}
