"""
A text scanner and token stream source: lexer.py

Author:     romanus contributors
Version:    1.0.0-alpha.1
License:    MIT License
"""

from .errors import ParseError
from .ltoken import LexerToken, INTEGER, WORD, SYMBOL, END


def input_txt_from_string(text: str):
    """
    Read text character by character.
        Line breaks and tabs are folded into plain spaces.
        Offsets count bytes of the UTF-8 encoding, so multi-byte characters advance them by more than one.
    :param text: input string.
    :return: generator of (character, byte offset) pairs.
    """

    offset = 0

    for char in text:
        width = len(char.encode('utf-8'))

        if char in '\r\n\t\f\v':
            char = ' '

        yield char, offset
        offset += width


def tokenize(text: str, symbols: str, aliases: dict = None):
    """
    Decompose text into integer, word and symbol tokens.
        Runs of digits form integer tokens, runs of ASCII letters form word tokens,
        each character of 'symbols' forms its own token and white space separates tokens.
    :param text: input string.
    :param symbols: accepted single-character symbols.
    :param aliases: characters replaced by a word token (e.g. '√' -> 'sqrt').
    :return: list of tokens, terminated by an end token.
    """

    aliases = aliases or {}
    tokens = []
    token_buf = None
    end_offset = 0

    def flush():
        nonlocal token_buf
        if token_buf is not None:
            tokens.append(LexerToken(*token_buf))
            token_buf = None

    for char, offset in input_txt_from_string(text):
        end_offset = offset + len(char.encode('utf-8'))

        if char.isascii() and char.isdigit():
            kind = INTEGER
        elif char.isascii() and char.isalpha():
            kind = WORD
        else:
            kind = None

        if kind is not None:
            if token_buf is not None and token_buf[2] == kind:
                token_buf[1] += char
            else:
                flush()
                token_buf = [offset, char, kind]
            continue

        flush()

        if char == ' ':
            continue
        elif char in aliases:
            tokens.append(LexerToken(offset, aliases[char], WORD))
        elif char in symbols:
            tokens.append(LexerToken(offset, char, SYMBOL))
        else:
            raise ParseError(f"Unexpected character {char!r}", offset)

    flush()
    tokens.append(LexerToken(end_offset, "", END))

    return tokens


class TokenStream:
    """
    Cursor over a token list for recursive-descent parsers.
    """

    def __init__(self, tokens: list):
        self._tokens = tokens
        self._pos = 0

    @property
    def current(self) -> LexerToken:
        return self._tokens[self._pos]

    def peek(self, ahead: int = 1) -> LexerToken:
        return self._tokens[min(self._pos + ahead, len(self._tokens) - 1)]

    def advance(self) -> LexerToken:
        tok = self._tokens[self._pos]
        if tok.kind != END:
            self._pos += 1
        return tok

    def at_end(self) -> bool:
        return self.current.kind == END

    def accept(self, val: str):
        """
        Consume the current token if it equals val.
        :return: the consumed token or None.
        """

        if self.current == val:
            return self.advance()
        return None

    def expect(self, val: str) -> LexerToken:
        if self.current == val:
            return self.advance()
        self.fail({repr(val)})

    def expect_kind(self, kind: str, description: str) -> LexerToken:
        if self.current.kind == kind:
            return self.advance()
        self.fail({description})

    def fail(self, expected, message: str = None):
        tok = self.current
        if message is None:
            message = f"Unexpected {tok.description}"
        raise ParseError(message, tok.start, expected)
