"""COPD Simulator Module"""

from .rotating_file_handler_custom import RotatingFileHandlerCustom
from .trace_logger import TraceLogger
