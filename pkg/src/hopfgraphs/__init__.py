"""Exact engine for graph and poset Hopf algebras with alphabet realizations.

Four basis families (Feynman graphs, simple oriented graphs, quasi-posets,
posets) carry a one-parameter gluing product, an ideal coproduct, and on the
graph side a second coproduct by compatible equivalences, together with the
no-cycle quotients and the projections linking them.  Every structure
constant can be cross-checked against truncated polynomial algebras over
finite quasi-ordered alphabets.
"""

from .kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
