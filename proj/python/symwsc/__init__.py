"""Symmetric weakly separated collections, plabic tilings and weave N-graphs."""

try:
    from ._symwsc import *  # noqa: F401,F403
    from ._symwsc import __version__  # noqa: F401
except ImportError:  # in-tree builds put the extension on sys.path directly
    from _symwsc import *  # noqa: F401,F403
    from _symwsc import __version__  # noqa: F401
