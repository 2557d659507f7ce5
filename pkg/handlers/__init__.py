import logging

# Importing the feature modules registers their sub-commands.
from handlers import closure_handlers, family_handlers, ideal_handlers, semigroup_handler

HANDLERS_LOGGER = logging.getLogger(__name__)

__all__ = [
    "closure_handlers",
    "family_handlers",
    "ideal_handlers",
    "semigroup_handler",
]

HANDLERS_LOGGER.debug("Handlers package initialized. Modules available: %s", ", ".join(__all__))
