"""
A Lexer Token class source: ltoken.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License
"""

# Token kinds
INTEGER = 'integer'
WORD = 'word'
SYMBOL = 'symbol'
END = 'end'


class LexerToken:
    """
    This class represents a single Lexer Token.
    """

    def __init__(self, start: int, val: str = "", kind: str = SYMBOL):
        self._start = start
        self._val = val
        self._kind = kind

    def __repr__(self):
        return f"LexerToken({self._start}, {self._val!r}, {self._kind})"

    def __str__(self):
        return f"{self._start}:{self._val}[{self._kind}]"

    def __len__(self):
        return len(self._val)

    def __eq__(self, other):
        if isinstance(other, LexerToken):
            return self._val == other._val and self._kind == other._kind
        elif isinstance(other, str):
            return self._kind != END and self._val == other
        else:
            raise TypeError("Token compared to non-supported type")

    __hash__ = None

    @property
    def val(self):
        return self._val

    @property
    def start(self):
        return self._start

    @property
    def kind(self):
        return self._kind

    @property
    def description(self):
        """
        How the token is named in a syntax error.
        """

        if self._kind == END:
            return "end of input"
        if self._kind == INTEGER:
            return "integer"
        return repr(self._val)
