import logging
import logging.handlers
import sys
from pathlib import Path

from pythonjsonlogger import jsonlogger

from config import settings

LOG_FILE_NAME = "treewidth_ties.log"


def _attach(root: logging.Logger, handler: logging.Handler, formatter: logging.Formatter, level: int) -> None:
    handler.setFormatter(formatter)
    handler.setLevel(level)
    root.addHandler(handler)


def setup_logging() -> logging.Logger:
    """
    Configure JSON logging for the command-line tools.

    Console output goes to stderr; stdout carries graphs, decompositions
    and reports only. When LOG_DIR is set, the same records also go to a
    file rotated at midnight.

    Returns:
        logging.Logger: the configured root logger
    """
    root = logging.getLogger()
    root.handlers.clear()

    level_name = settings.LOG_LEVEL.upper()
    level = getattr(logging, level_name, logging.INFO)
    root.setLevel(level)

    formatter = jsonlogger.JsonFormatter(
        "%(asctime)s %(levelname)s %(name)s %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        json_ensure_ascii=False,
        json_indent=2 if level_name == "DEBUG" else None,
        timestamp=True,
    )
    _attach(root, logging.StreamHandler(sys.stderr), formatter, level)

    if settings.LOG_DIR:
        log_dir = Path(settings.LOG_DIR)
        log_dir.mkdir(parents=True, exist_ok=True)
        rotating = logging.handlers.TimedRotatingFileHandler(
            filename=log_dir / LOG_FILE_NAME,
            when="midnight",
            backupCount=30,
            encoding="utf-8",
        )
        _attach(root, rotating, formatter, level)

    return root
