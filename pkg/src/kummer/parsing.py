"""Parser and renderer for scalar coefficient expressions.

Grammar (whitespace-insensitive):

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := '-' factor | power
    power    := atom ('^' exponent)?
    exponent := '-'? INT
    atom     := INT | 'rho' | VAR | '(' expr ')'
    VAR      := ('a' | 'b') INT        -- e.g. a1, b2; index between 1 and n

Negative exponents are allowed on a/b variables only (the coefficient ring
is a Laurent ring in those parameters; rho and integers stay polynomial).
``parse_scalar`` reports syntax errors with the 0-based input position.

``render_scalar`` is the canonical inverse used for reports and files:
for any value whose rational coefficients are integers the output parses
back to the same value.  Non-integer rationals render with a '/' (display
only; '/' is not part of the input grammar).
"""

from __future__ import annotations

from .scalars import Cyclotomic, Laurent


class ParseError(ValueError):
    """Syntax or semantic error in a scalar expression, with position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at index {position})")
        self.position = position


_SYMBOLS = "+-*^()"


def _tokenize(text: str):
    """Yield (kind, value, position) triples; kind in {int, name, sym}."""
    tokens = []
    i = 0
    size = len(text)
    while i < size:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < size and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < size and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
            continue
        if ch in _SYMBOLS:
            tokens.append(("sym", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", size))
    return tokens


class _Parser:
    def __init__(self, tokens, p: int, n: int):
        self.tokens = tokens
        self.pos = 0
        self.p = p
        self.n = n

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect_sym(self, sym: str):
        kind, value, position = self.peek()
        if kind != "sym" or value != sym:
            raise ParseError(f"expected '{sym}'", position)
        return self.advance()

    def parse(self) -> Laurent:
        value = self.expr()
        kind, text, position = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {text!r}", position)
        return value

    def expr(self) -> Laurent:
        value = self.term()
        while True:
            kind, sym, _ = self.peek()
            if kind == "sym" and sym in "+-":
                self.advance()
                rhs = self.term()
                value = value + rhs if sym == "+" else value - rhs
            else:
                return value

    def term(self) -> Laurent:
        value = self.factor()
        while True:
            kind, sym, _ = self.peek()
            if kind == "sym" and sym == "*":
                self.advance()
                value = value * self.factor()
            else:
                return value

    def factor(self) -> Laurent:
        kind, sym, _ = self.peek()
        if kind == "sym" and sym == "-":
            self.advance()
            return -self.factor()
        return self.power()

    def power(self) -> Laurent:
        base, is_variable = self.atom()
        kind, sym, _ = self.peek()
        if not (kind == "sym" and sym == "^"):
            return base
        self.advance()
        negative = False
        kind, value, position = self.peek()
        if kind == "sym" and value == "-":
            negative = True
            self.advance()
            kind, value, position = self.peek()
        if kind != "int":
            raise ParseError("expected integer exponent", position)
        self.advance()
        exponent = int(value)
        if negative:
            if not is_variable:
                raise ParseError(
                    "negative exponents are only allowed on a/b variables", position
                )
            exponent = -exponent
        if is_variable:
            # Rebuild the variable monomial directly at the target power.
            ((exps, coeff),) = base.terms.items()
            slot = next(i for i, e in enumerate(exps) if e)
            return Laurent.variable(self.p, self.n, slot, exponent)
        return base ** exponent

    def atom(self):
        """Return (value, is_plain_variable)."""
        kind, text, position = self.advance()
        if kind == "int":
            return Laurent.constant(self.p, self.n, int(text)), False
        if kind == "name":
            if text == "rho":
                return Laurent.constant(self.p, self.n, Cyclotomic.rho(self.p)), False
            if text[0] in "ab" and text[1:].isdigit():
                k = int(text[1:])
                if not 1 <= k <= self.n:
                    raise ParseError(
                        f"variable {text!r} out of range (n = {self.n})", position
                    )
                slot = 2 * (k - 1) + (0 if text[0] == "a" else 1)
                return Laurent.variable(self.p, self.n, slot), True
            raise ParseError(f"unknown name {text!r}", position)
        if kind == "sym" and text == "(":
            value = self.expr()
            self.expect_sym(")")
            return value, False
        raise ParseError("expected integer, rho, variable, or '('", position)


def parse_scalar(text: str, p: int, n: int) -> Laurent:
    """Parse a coefficient expression into the Laurent ring over Q(rho)."""
    return _Parser(_tokenize(text), p, n).parse()


# -- rendering ------------------------------------------------------------


def _join_terms(parts) -> str:
    out = parts[0]
    for part in parts[1:]:
        if part.startswith("-"):
            out += " - " + part[1:]
        else:
            out += " + " + part
    return out


def render_cyclotomic(value: Cyclotomic) -> str:
    if value.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(value.coeffs):
        if not c:
            continue
        rational = str(c)  # may contain '/'; display only
        if i == 0:
            parts.append(rational)
            continue
        power = "rho" if i == 1 else f"rho^{i}"
        if c == 1:
            parts.append(power)
        elif c == -1:
            parts.append("-" + power)
        else:
            parts.append(f"{rational}*{power}")
    return _join_terms(parts)


def _is_atomic(rendered: str) -> bool:
    return "+" not in rendered and "-" not in rendered.lstrip("-") and " " not in rendered


def render_scalar(value: Laurent) -> str:
    """Canonical grammar string for a Laurent coefficient."""
    if not value.terms:
        return "0"
    parts = []
    for exps in sorted(value.terms):
        coeff = value.terms[exps]
        names = []
        for slot, e in enumerate(exps):
            if not e:
                continue
            k = slot // 2 + 1
            base = f"a{k}" if slot % 2 == 0 else f"b{k}"
            names.append(base if e == 1 else f"{base}^{e}")
        varpart = "*".join(names)
        coeffpart = render_cyclotomic(coeff)
        if not varpart:
            parts.append(coeffpart)
            continue
        if coeffpart == "1":
            parts.append(varpart)
        elif coeffpart == "-1":
            parts.append("-" + varpart)
        elif _is_atomic(coeffpart) or (
            coeffpart.startswith("-") and _is_atomic(coeffpart[1:])
        ):
            parts.append(f"{coeffpart}*{varpart}")
        else:
            parts.append(f"({coeffpart})*{varpart}")
    return _join_terms(parts)
