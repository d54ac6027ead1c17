"""Exact verification of contact pseudo-metric structures.

Thin wrapper over the compiled extension; see ``help(_kappamu)`` for the
underlying signatures.
"""

from _kappamu import (
    DomainError,
    EngineError,
    EvalError,
    ExponentOverflowError,
    Expr,
    ParseError,
    catalog,
    deform_file,
    parse,
    verify_file,
)

__all__ = [
    "DomainError",
    "EngineError",
    "EvalError",
    "ExponentOverflowError",
    "Expr",
    "ParseError",
    "catalog",
    "deform_file",
    "parse",
    "verify_file",
]
