from ._lexidis import *  # noqa: F401,F403
from ._lexidis import __doc__  # noqa: F401
