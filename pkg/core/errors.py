# core/errors.py
"""
Hierarchia wyjątków coqkit.

Każdy wyjątek niesie kod wyjścia CLI i status HTTP, tłumaczone dopiero na
brzegu (interface/cli.py, interface/api.py).
"""


class CoqError(Exception):
    exit_code = 1
    http_status = 400


class ParseError(CoqError):
    """Niepoprawny dokument JSON, słowo warkoczowe albo wartość flagi."""

    exit_code = 1
    http_status = 400


class DomainError(CoqError):
    """Naruszony warunek wstępny operacji (np. mutacja w wierzchołku niewłaściwym)."""

    exit_code = 2
    http_status = 422


class ResourceLimitError(CoqError):
    """Przekroczony limit (cykle bezcięciwowe, minory, kanonizacja)."""

    exit_code = 3
    http_status = 413


class InvariantViolation(CoqError):
    """Wewnętrzna kontrola spójności nie przeszła – to zawsze błąd w kodzie."""

    exit_code = 4
    http_status = 500
