try:
    from ._divcodes import *  # noqa: F401,F403
except ImportError:  # in-tree build: extension on PYTHONPATH, not in the package
    from _divcodes import *  # noqa: F401,F403
