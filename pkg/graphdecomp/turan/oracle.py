"""Runs the chunked bowtie-free search on the configured backend.

``local`` runs the chunks in a process pool capped by the thread setting,
or in-process when it is 1; ``celery`` sends them to the workers as a
group of tasks. Results are reduced in chunk order, so the graph found is
the same whatever the parallelism.
"""
import logging
from concurrent.futures import ProcessPoolExecutor

from celery import group

from ..utils import check_deadline, get_thread_count
from . import settings as app_settings
from .search import chunk_indices, search_chunk
from .tasks import search_bowtie_free_chunk

logger = logging.getLogger(__name__)


def _search_in_process(vertex_count, edge_count, chunks, deadline):
    checked = 0
    for first in chunks:
        check_deadline(deadline, "bowtie search")
        edges, count = search_chunk(vertex_count, edge_count, first, deadline)
        checked += count
        if edges is not None:
            return edges, checked
    return None, checked


def _search_in_pool(vertex_count, edge_count, chunks, deadline, workers):
    with ProcessPoolExecutor(max_workers=workers) as executor:
        futures = [
            executor.submit(search_chunk, vertex_count, edge_count, first, deadline)
            for first in chunks
        ]
        results = [future.result() for future in futures]
    return _reduce(results)


def _search_on_celery(vertex_count, edge_count, chunks, deadline):
    job = group(
        search_bowtie_free_chunk.s(vertex_count, edge_count, first, deadline)
        for first in chunks
    )
    results = job.apply_async().get()
    return _reduce((result["edges"], result["checked"]) for result in results)


def _reduce(results):
    found = None
    checked = 0
    for edges, count in results:
        checked += count
        if found is None and edges is not None:
            found = edges
    return found, checked


def search_bowtie_free(vertex_count, edge_count, deadline=None):
    """Returns ``(edges, checked)`` for the lexicographically first
    bowtie-free graph with ``edge_count`` edges, ``edges`` being ``None``
    when every such graph contains a bowtie."""
    if edge_count == 0:
        return [], 1
    chunks = chunk_indices(vertex_count, edge_count)
    backend = app_settings.ORACLE_BACKEND
    workers = min(get_thread_count(), len(chunks)) if chunks else 1
    logger.info(
        f"searching {len(chunks)} chunks of {vertex_count}-vertex graphs with "
        f"{edge_count} edges on the {backend} backend"
    )
    if backend == "celery":
        return _search_on_celery(vertex_count, edge_count, chunks, deadline)
    if workers <= 1:
        return _search_in_process(vertex_count, edge_count, chunks, deadline)
    return _search_in_pool(vertex_count, edge_count, chunks, deadline, workers)
