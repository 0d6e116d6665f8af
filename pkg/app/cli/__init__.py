"""
Command-line surface: request models, dispatch and report rendering.
"""

from .commands import RunResult, run
from .models import COMMANDS, FORMATS, RunRequest

__all__ = ["COMMANDS", "FORMATS", "RunRequest", "RunResult", "run"]
