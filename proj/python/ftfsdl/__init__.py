"""Finite semidistributive lattices as two-acyclic factorization systems."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import DomainError, FactSystem, Lattice  # noqa: F401
except ImportError:  # in-tree runs: the extension sits on sys.path directly
    from _core import *  # noqa: F401,F403
    from _core import DomainError, FactSystem, Lattice  # noqa: F401
