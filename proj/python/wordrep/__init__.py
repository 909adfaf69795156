"""Words, locality, word-representable graphs and clique-width expressions."""

from ._wordrep import *  # noqa: F401,F403
from ._wordrep import __doc__  # noqa: F401
