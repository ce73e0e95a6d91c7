# Copyright (c) 2024 by Jonathan AW
# utils/error_handling.py
# Summary: Log-then-raise helpers shared by the parser, serializer and services.

import logging

logger = logging.getLogger("sbm")


def log_error(message: str):
    """
    Log an error message on the toolchain logger.
    """
    logger.error(message)


def log_diagnostics(diagnostics) -> None:
    # one record per finding, ERRORs at error level and the rest as warnings
    for diagnostic in diagnostics:
        level = logging.ERROR if getattr(diagnostic, "severity", None) is not None \
            and diagnostic.severity.name == "ERROR" else logging.WARNING
        logger.log(level, "%s", diagnostic)


def handle_error(exception: Exception, custom_message: str = ""):
    """
    Standardized error handling function that logs the error and raises the exception.
    Exceptions carrying validation diagnostics get each diagnostic logged as well.
    """
    log_error(f"{custom_message}: {str(exception)}" if custom_message else str(exception))
    log_diagnostics(getattr(exception, "diagnostics", ()))
    raise exception
