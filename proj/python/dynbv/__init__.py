"""Drift analysis of the (mu+1)-EA on the Dynamic BinVal function."""

try:
    from ._dynbv import *  # noqa: F401,F403  (installed package layout)
    from ._dynbv import __doc__  # noqa: F401
except ImportError:
    from _dynbv import *  # noqa: F401,F403  (in-tree build on PYTHONPATH)
    from _dynbv import __doc__  # noqa: F401
