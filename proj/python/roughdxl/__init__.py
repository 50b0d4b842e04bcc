"""Rough-set deductive engine over extended logic programs."""

from ._core import (
    IngestError,
    LoadError,
    ParseError,
    ProgramError,
    QueryError,
    Session,
    canonical_program,
    canonical_query,
    export_definite,
    tau,
)

__all__ = [
    "IngestError",
    "LoadError",
    "ParseError",
    "ProgramError",
    "QueryError",
    "Session",
    "canonical_program",
    "canonical_query",
    "export_definite",
    "tau",
]
