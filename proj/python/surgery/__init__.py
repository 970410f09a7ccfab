"""Structure sets of products of spheres.

Thin re-export of the compiled ``_surgery`` extension.
"""

from ._surgery import *  # noqa: F401,F403
from ._surgery import DomainError, TableError, __version__  # noqa: F401
