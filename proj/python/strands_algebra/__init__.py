"""Strands algebra of n matched circles on a surface: both presentations
(moving-strands generators and quiver normal forms), their differentials and
gradings, the morphism between them, and piece-by-piece homology."""

from ._strands import *  # noqa: F401,F403

__version__ = "0.1.0"
