"""Utility modules for the zariski-mm package."""

from .logger import setup_logger, get_logger
from .rationals import format_rational, parse_rational

__all__ = ["setup_logger", "get_logger", "format_rational", "parse_rational"]
