"""
Logging System for Intensity Efficiency
Provides centralized logging with file output and level controls
"""

import logging
from datetime import datetime
from pathlib import Path
from typing import Optional

from src.core.constants import LOG_DIR


class AnalysisLogger:
    _instance: Optional['AnalysisLogger'] = None

    def __init__(self, log_dir: str = LOG_DIR, log_level: int = logging.INFO):
        if AnalysisLogger._instance is not None:
            raise RuntimeError("AnalysisLogger is a singleton. Use get_logger() instead.")

        self.log_dir = Path(log_dir)
        self.log_dir.mkdir(parents=True, exist_ok=True)

        timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
        self.log_file = self.log_dir / f"intensity_{timestamp}.log"

        self.logger = logging.getLogger("IntensityEfficiency")
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False

        if self.logger.handlers:
            self.logger.handlers.clear()

        file_handler = logging.FileHandler(self.log_file, encoding='utf-8')
        file_handler.setLevel(logging.DEBUG)

        # stderr, so command output on stdout stays machine-readable
        self.console_handler = logging.StreamHandler()
        self.console_handler.setLevel(log_level)

        formatter = logging.Formatter(
            '[%(asctime)s] [%(levelname)s] [%(name)s] %(message)s',
            datefmt='%H:%M:%S'
        )
        file_handler.setFormatter(formatter)
        self.console_handler.setFormatter(formatter)

        self.logger.addHandler(file_handler)
        self.logger.addHandler(self.console_handler)

        AnalysisLogger._instance = self
        self.debug("Logger initialized")

    def debug(self, message: str):
        self.logger.debug(message)

    def info(self, message: str):
        self.logger.info(message)

    def warning(self, message: str):
        self.logger.warning(message)

    def error(self, message: str, exc_info: bool = False):
        self.logger.error(message, exc_info=exc_info)

    def critical(self, message: str, exc_info: bool = False):
        self.logger.critical(message, exc_info=exc_info)

    def set_level(self, log_level: int):
        """Change the console level; the log file always records DEBUG."""
        self.console_handler.setLevel(log_level)

    @classmethod
    def get_instance(cls) -> 'AnalysisLogger':
        if cls._instance is None:
            cls._instance = AnalysisLogger()
        return cls._instance

    @classmethod
    def shutdown(cls):
        if cls._instance:
            for handler in list(cls._instance.logger.handlers):
                handler.close()
                cls._instance.logger.removeHandler(handler)
            cls._instance = None


def get_logger() -> AnalysisLogger:
    return AnalysisLogger.get_instance()


def init_logger(log_dir: str = LOG_DIR, log_level: int = logging.INFO):
    current = AnalysisLogger._instance
    if current is not None and current.log_dir != Path(log_dir):
        AnalysisLogger.shutdown()
        current = None
    if current is None:
        AnalysisLogger(log_dir, log_level)
    else:
        current.set_level(log_level)
    return get_logger()
