"""
Provides zerodiv version information.
"""

# This file is auto-generated! Do not edit!
# Use `python -m incremental.update zerodiv` to change this file.

from incremental import Version

__version__ = Version("zerodiv", 1, 0, 0)
__all__ = ["__version__"]
