"""Ambiguity function toolkit: float-mode bindings over the C++ core."""

try:
    from ._ambikit import *  # noqa: F401,F403
    from ._ambikit import __version__  # noqa: F401
except ImportError:  # development layout: extension built out of tree
    from _ambikit import *  # noqa: F401,F403
    from _ambikit import __version__  # noqa: F401
