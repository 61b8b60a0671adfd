"""
Structured logging configuration for morse-flowlines.

Provides a centralized logging setup using structlog so that every
complex build, algorithm run and homology computation logs consistently.
"""

import logging

import structlog


def configure_logging(
    debug: bool = False, log_format: str = "json", log_level: str = "INFO"
) -> None:
    """
    Configure structured logging for the application.

    Args:
        debug: Enable debug-level logging if True.
        log_format: "json" for machine-readable lines, "text" for console output.
        log_level: Level name used when debug is off.
    """
    level = logging.DEBUG if debug else logging.getLevelName(log_level.upper())

    # stderr only; reports own stdout. force rebinds to the current sys.stderr
    logging.basicConfig(
        format="%(message)s",
        level=level,
        force=True,
    )

    renderer: structlog.types.Processor
    if log_format == "text":
        renderer = structlog.dev.ConsoleRenderer(colors=False)
    else:
        renderer = structlog.processors.JSONRenderer()

    structlog.configure(
        processors=[
            structlog.stdlib.add_log_level,
            structlog.stdlib.add_logger_name,
            structlog.processors.TimeStamper(fmt="iso"),
            structlog.processors.StackInfoRenderer(),
            structlog.processors.format_exc_info,
            structlog.processors.UnicodeDecoder(),
            renderer,
        ],
        context_class=dict,
        logger_factory=structlog.stdlib.LoggerFactory(),
        cache_logger_on_first_use=True,
    )


def get_logger(name: str) -> structlog.BoundLogger:
    """
    Get a structured logger instance.

    Args:
        name: Logger name (typically __name__).

    Returns:
        A structlog BoundLogger instance.
    """
    return structlog.get_logger(name)
