import logging

UTILS_LOGGER = logging.getLogger(__name__)

__all__ = [
    "decorators",
    "ideal_parser",
    "render",
]

UTILS_LOGGER.debug("Utils package initialized. Modules available: %s", ", ".join(__all__))
