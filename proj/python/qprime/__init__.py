from ._qprime import *  # noqa: F401,F403
from ._qprime import __doc__  # noqa: F401
