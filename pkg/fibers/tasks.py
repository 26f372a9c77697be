import logging

from celery import shared_task

logger = logging.getLogger('fibers')


@shared_task
def census_fiber_type(label):
    """Property (P) census of one fiber type, as a JSON-ready dict."""
    from fibers.catalog import fiber, parse_fiber_type
    from fibers.services.census import census_entry

    entry = census_entry(fiber(parse_fiber_type(label)))
    if entry.violations:
        logger.warning(f"{label}: {len(entry.violations)} (P)-divisors off the full configuration or with D² ≠ 0")
    return entry.to_dict()
