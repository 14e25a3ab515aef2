"""
Command modules; each exposes ``register(subparsers)``.
"""

from . import bench, images, symbols

COMMAND_MODULES = (bench, symbols, images)
