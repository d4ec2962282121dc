"""Surface syntax for power sums.

Grammar (whitespace-insensitive)::

    expr   := term (('+' | '-') term)*
    term   := coeff | coeff '*' pow | pow
    pow    := base '^' 'n'
    coeff  := ['-' | '+'] rational
    base   := rational                    (must be > 0)
    rational := INT ['/' INT] | '(' ['-' | '+'] INT ['/' INT] ')'

A bare coefficient is a root-1 term.  A leading sign always belongs to the
coefficient, so ``-2^n`` is ``-1 * 2^n``.  An unparenthesized ``3/2^n`` reads
as ``(3/2)^n``; :func:`render` always parenthesizes non-integral rationals.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import NonpositiveBaseError, ParseError, ZeroDenominatorError
from .powersum import PowerSum


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message, pos=None, cls=ParseError):
        raise cls(message, self.pos if pos is None else pos, self.text)

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def accept(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.accept(ch):
            found = self.peek() or "end of input"
            self.error(f"expected {ch!r}, found {found!r}")

    def parse(self) -> PowerSum:
        if not self.peek():
            self.error("empty expression")
        terms = [self.term()]
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                root, coeff = self.term()
                terms.append((root, -coeff))
            else:
                break
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return PowerSum(terms)

    def term(self):
        sign = 1
        while self.peek() in ("-", "+"):
            if self.text[self.pos] == "-":
                sign = -sign
            self.pos += 1
        self.skip()
        start = self.pos
        value, inner_sign = self.rational()
        if self.accept("^"):
            self.exponent()
            self.check_base(value * inner_sign, start)
            return value, Fraction(sign)
        coeff = sign * inner_sign * value
        if self.accept("*"):
            self.skip()
            base_start = self.pos
            base, base_sign = self.rational()
            self.expect("^")
            self.exponent()
            self.check_base(base * base_sign, base_start)
            return base, coeff
        return Fraction(1), coeff

    def check_base(self, base: Fraction, pos: int):
        if base <= 0:
            self.error(f"base must be positive, got {base}", pos, NonpositiveBaseError)

    def exponent(self):
        if self.peek() != "n":
            self.error(f"expected exponent 'n', found {self.peek() or 'end of input'!r}")
        self.pos += 1
        nxt = self.text[self.pos : self.pos + 1]
        if nxt.isalnum() or nxt == "_":
            self.error("only the variable 'n' is allowed as exponent")

    def rational(self):
        """Return ``(absolute value, sign)``; signs only inside parentheses."""
        if self.accept("("):
            sign = 1
            while self.peek() in ("-", "+"):
                if self.text[self.pos] == "-":
                    sign = -sign
                self.pos += 1
            value = self.fraction()
            self.expect(")")
            return value, sign
        return self.fraction(), 1

    def fraction(self) -> Fraction:
        num = self.integer()
        if self.peek() == "/":
            self.pos += 1
            self.skip()
            den_pos = self.pos
            den = self.integer()
            if den == 0:
                self.error("zero denominator", den_pos, ZeroDenominatorError)
            return Fraction(num, den)
        return Fraction(num)

    def integer(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            found = self.text[start] if start < len(self.text) else "end of input"
            self.error(f"expected a number, found {found!r}", start)
        return int(self.text[start : self.pos])


def parse_power_sum(text: str) -> PowerSum:
    """Parse ``text`` into a normalized :class:`PowerSum`.

    Raises :class:`ParseError` (or a subclass) carrying the 0-based column of
    the offending character.
    """
    return _Parser(text).parse()


def _rational_text(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"({x.numerator}/{x.denominator})"


def render(alpha: PowerSum) -> str:
    if not alpha.terms:
        return "0"
    parts = []
    for i, (root, coeff) in enumerate(alpha.terms):
        negative = coeff < 0
        mag = -coeff if negative else coeff
        if root == 1:
            body = str(mag)
        elif mag == 1:
            body = f"{_rational_text(root)}^n"
        else:
            body = f"{_rational_text(mag)}*{_rational_text(root)}^n"
        if i == 0:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)
