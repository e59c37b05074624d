"""
Exception hierarchy source: errors.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License
"""


class RomanusError(Exception):
    """
    Base class of every error raised by the package.
    """


class ConfigError(RomanusError):
    """
    Malformed configuration value.
    """


class ParseError(RomanusError, ValueError):
    """
    Syntax error in radical or polynomial text.

    Attributes:
        offset: byte offset of the offending token in the UTF-8 encoded input.
        expected: descriptions of the tokens that would have been accepted.
    """

    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        detail = f" (expected {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at offset {offset}{detail}")


class _PathError(RomanusError):
    """
    Error located at a node of a radical expression tree.

    Attributes:
        path: child indices leading from the root to the node.
        node_text: rendered text of the node.
    """

    reason = "invalid node"

    def __init__(self, path: tuple = (), node_text: str = ""):
        self.path = tuple(path)
        self.node_text = node_text
        where = "/".join(str(i) for i in self.path) or "root"
        super().__init__(f"{self.reason} at {where}: {node_text}")


class DomainError(_PathError):
    reason = "negative radicand"


class DivisionByZero(_PathError):
    reason = "zero denominator"


class UndecidableSign(_PathError):
    reason = "sign undecided after refinement limit"


class RangeError(RomanusError, ValueError):
    """
    Right-hand side outside [-2, 2].
    """


class RecognitionError(RomanusError):
    """
    No rational multiple of pi matches the given value.
    """


class UnsupportedError(RomanusError):
    """
    Requested value has no square-root form or lies outside the handled primes.
    """


class UnsupportedDialect(UnsupportedError):
    """
    Polynomial cannot be written in the requested notation.
    """
