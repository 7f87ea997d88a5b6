"""
Enumeration guard helpers
"""

import logging
from typing import Optional

from common.exceptions import EnumerationBoundError
from config.models import EnumerationBounds, default_bounds

logger = logging.getLogger(__name__)


def resolve_bounds(bounds: Optional[EnumerationBounds]) -> EnumerationBounds:
    return bounds if bounds is not None else default_bounds()


def ensure_within(what: str, value: int, limit: int) -> None:
    """Raise EnumerationBoundError when value exceeds limit"""
    if value > limit:
        logger.debug(f"Guard {what} tripped: {value} > {limit}")
        raise EnumerationBoundError(what, value, limit)
