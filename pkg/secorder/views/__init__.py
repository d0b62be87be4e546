"""
Import the command-line surface.
"""

from secorder.views.cli import cli, RunConfig

__all__ = [
    'cli',
    'RunConfig'
]
