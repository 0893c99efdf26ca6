"""Caratheodory-type interpolation for J-Potapov functions."""

try:
    from ._jpotapov import *  # noqa: F401,F403  (wheel layout)
except ImportError:
    from _jpotapov import *  # noqa: F401,F403  (in-tree builds)

__version__ = "0.1.0"
