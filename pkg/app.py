#!/usr/bin/env python3
"""
secorder: unordered sections and contractive boolean functions
Entry point for the command line.
"""

from secorder.views.cli import cli

if __name__ == '__main__':
    cli()
