from raagdyn._core import *  # noqa: F401,F403
from raagdyn._core import __version__  # noqa: F401
