"""Congruence verification for binomial-coefficient sums and Apery-like
numbers: p-adic engine, exact big-rational oracle, registry DSL and
constant fitting."""

try:
    from supercong._supercong import *  # noqa: F401,F403  (installed wheel)
except ImportError:  # pragma: no cover - in-tree builds put it on PYTHONPATH
    from _supercong import *  # noqa: F401,F403
