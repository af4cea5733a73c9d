"""A small expression language for univariate test functions.

Grammar (``^`` binds tightest and is right-associative, then unary minus,
then ``* /``, then ``+ -``)::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := "-" factor | base ("^" factor)?
    base   := number | "x" | ident "(" expr ")" | "(" expr ")"
    ident  := "ln" | "exp" | "sqrt" | "abs"

Expressions are immutable trees. They can be printed back with minimal
parentheses, differentiated symbolically, evaluated on numpy arrays, and
evaluated together with their first derivative through dual numbers.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass

import numpy as np

FUNCTIONS = ("ln", "exp", "sqrt", "abs")


class ExprSyntaxError(ValueError):
    def __init__(self, message, offset, text=""):
        self.offset = offset
        self.text = text
        super().__init__(f"{message} at offset {offset}")


class DomainError(ArithmeticError):
    """Raised when a subexpression leaves the real domain (or overflows).

    ``subexpr`` is the printed offending node, ``x`` the first failing input
    and ``index`` its flat position in the evaluated array.
    """

    def __init__(self, subexpr, x, index=0, what="value"):
        self.subexpr = subexpr
        self.x = x
        self.index = index
        self.what = what
        super().__init__(f"{what} of '{subexpr}' is undefined or non-finite at x={x!r}")


# ---------------------------------------------------------------------------
# tree


@dataclass(frozen=True)
class Num:
    value: float
    text: str = ""

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("Num holds non-negative literals; wrap negatives in Neg")
        if not self.text:
            object.__setattr__(self, "text", _format_number(self.value))


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    arg: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    fn: str
    arg: "Expr"


Expr = Num | Var | Neg | BinOp | Call
X = Var()


def _format_number(v):
    if float(v).is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def const(v):
    """Literal for any real ``v`` (negative values become ``Neg(Num)``)."""
    v = float(v)
    return Neg(Num(-v)) if v < 0 else Num(v)


def contains_x(e):
    if isinstance(e, Var):
        return True
    if isinstance(e, Num):
        return False
    if isinstance(e, (Neg, Call)):
        return contains_x(e.arg)
    return contains_x(e.left) or contains_x(e.right)


# ---------------------------------------------------------------------------
# parsing

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", pos, text)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, value, pos = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(f"expected {expected}, found {found}", pos, self.text)

    def expect(self, value):
        if self.peek()[1] != value or self.peek()[0] != "op":
            self.fail(repr(value))
        self.advance()

    def parse(self):
        e = self.expr()
        if self.peek()[0] != "end":
            self.fail("operator or end of input")
        return e

    def expr(self):
        left = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.advance()[1]
            left = BinOp(op, left, self.term())
        return left

    def term(self):
        left = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            op = self.advance()[1]
            left = BinOp(op, left, self.factor())
        return left

    def factor(self):
        if self.peek()[:2] == ("op", "-"):
            self.advance()
            return Neg(self.factor())
        base = self.base()
        if self.peek()[:2] == ("op", "^"):
            self.advance()
            return BinOp("^", base, self.factor())
        return base

    def base(self):
        kind, value, pos = self.peek()
        if kind == "num":
            self.advance()
            return Num(float(value), value)
        if kind == "name":
            if value == "x":
                self.advance()
                return X
            if value in FUNCTIONS:
                self.advance()
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return Call(value, arg)
            raise ExprSyntaxError(f"unknown identifier {value!r} (expected x, ln, exp, sqrt or abs)", pos, self.text)
        if (kind, value) == ("op", "("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        self.fail("number, 'x', function call or '('")


def parse_expr(text):
    """Parse ``text`` into an expression tree; raises :class:`ExprSyntaxError`."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# printing

_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "neg": 3, "^": 4, "atom": 5}


def _prec(e):
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return _PREC["neg"]
    return _PREC["atom"]


def _wrap(e, min_prec):
    s = to_text(e)
    return f"({s})" if _prec(e) < min_prec else s


def to_text(e):
    """Print with the fewest parentheses that re-parse to the same tree."""
    if isinstance(e, Num):
        return e.text
    if isinstance(e, Var):
        return "x"
    if isinstance(e, Call):
        return f"{e.fn}({to_text(e.arg)})"
    if isinstance(e, Neg):
        return "-" + _wrap(e.arg, _PREC["neg"])
    op = e.op
    if op in "+-":
        return f"{_wrap(e.left, 1)}{op}{_wrap(e.right, 2)}"
    if op in "*/":
        return f"{_wrap(e.left, 2)}{op}{_wrap(e.right, 3)}"
    # power: base must be an atom, exponent is a factor
    return f"{_wrap(e.left, _PREC['atom'])}^{_wrap(e.right, _PREC['neg'])}"


# ---------------------------------------------------------------------------
# symbolic derivative (with constant folding only)

ZERO = Num(0.0)
ONE = Num(1.0)


def _is_num(e, v=None):
    return isinstance(e, Num) and (v is None or e.value == v)


def _add(a, b):
    if _is_num(a, 0.0):
        return b
    if _is_num(b, 0.0):
        return a
    if isinstance(b, Neg):
        return _sub(a, b.arg)
    return BinOp("+", a, b)


def _sub(a, b):
    if _is_num(b, 0.0):
        return a
    if _is_num(a, 0.0):
        return _neg(b)
    return BinOp("-", a, b)


def _neg(a):
    if _is_num(a, 0.0):
        return ZERO
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def _mul(a, b):
    if _is_num(a, 0.0) or _is_num(b, 0.0):
        return ZERO
    if _is_num(a, 1.0):
        return b
    if _is_num(b, 1.0):
        return a
    if isinstance(a, Neg):
        return _neg(_mul(a.arg, b))
    if isinstance(b, Neg):
        return _neg(_mul(a, b.arg))
    if _is_num(a) and _is_num(b):
        return Num(a.value * b.value)
    return BinOp("*", a, b)


def _div(a, b):
    if _is_num(a, 0.0):
        return ZERO
    if _is_num(b, 1.0):
        return a
    if isinstance(a, Neg):
        return _neg(_div(a.arg, b))
    if _is_num(a) and _is_num(b) and b.value != 0.0:
        return Num(a.value / b.value)
    return BinOp("/", a, b)


def _pow(a, b):
    if _is_num(b, 1.0):
        return a
    if _is_num(b, 0.0):
        return ONE
    if _is_num(a) and _is_num(b):
        return Num(a.value ** b.value)
    return BinOp("^", a, b)


def _const_value(e):
    return float(np.asarray(evaluate(e, np.array([1.0])))[0])


def diff(e):
    """Symbolic d/dx of ``e``."""
    if isinstance(e, Num):
        return ZERO
    if isinstance(e, Var):
        return ONE
    if isinstance(e, Neg):
        return _neg(diff(e.arg))
    if isinstance(e, Call):
        u, du = e.arg, diff(e.arg)
        if _is_num(du, 0.0):
            return ZERO
        if e.fn == "ln":
            return _div(du, u)
        if e.fn == "exp":
            return _mul(e, du)
        if e.fn == "sqrt":
            return _div(du, _mul(Num(2.0), e))
        return _mul(_div(u, e), du)  # abs: sign(u) = u/|u|
    a, b = e.left, e.right
    if e.op == "+":
        return _add(diff(a), diff(b))
    if e.op == "-":
        return _sub(diff(a), diff(b))
    if e.op == "*":
        return _add(_mul(diff(a), b), _mul(a, diff(b)))
    if e.op == "/":
        return _div(_sub(_mul(diff(a), b), _mul(a, diff(b))), _pow(b, Num(2.0)))
    # power
    if not contains_x(b):
        c = _const_value(b)
        return _mul(_mul(b, _pow(a, const(c - 1.0))), diff(a))
    # general u^v = exp(v ln u)
    return _mul(e, _add(_mul(diff(b), Call("ln", a)), _div(_mul(b, diff(a)), a)))


def substitute(e, replacement):
    """Replace every occurrence of x in ``e`` by ``replacement``."""
    if isinstance(e, Var):
        return replacement
    if isinstance(e, Num):
        return e
    if isinstance(e, Neg):
        return Neg(substitute(e.arg, replacement))
    if isinstance(e, Call):
        return Call(e.fn, substitute(e.arg, replacement))
    return BinOp(e.op, substitute(e.left, replacement), substitute(e.right, replacement))


# ---------------------------------------------------------------------------
# numeric evaluation


def _check(node, out, x, what="value"):
    bad = ~np.isfinite(out)
    if np.any(bad):
        idx = int(np.flatnonzero(bad.ravel())[0])
        xv = np.broadcast_to(x, out.shape).ravel()[idx]
        raise DomainError(to_text(node), float(xv), idx, what)
    return out


def _eval(e, x):
    if isinstance(e, Num):
        return np.full(x.shape, e.value)
    if isinstance(e, Var):
        return x
    if isinstance(e, Neg):
        return -_eval(e.arg, x)
    if isinstance(e, Call):
        u = _eval(e.arg, x)
        if e.fn == "ln":
            out = np.log(u)
            out = np.where(u > 0, out, np.nan)
        elif e.fn == "exp":
            out = np.exp(u)
        elif e.fn == "sqrt":
            out = np.sqrt(u)
        else:
            out = np.abs(u)
        return _check(e, out, x)
    a = _eval(e.left, x)
    b = _eval(e.right, x)
    if e.op == "+":
        out = a + b
    elif e.op == "-":
        out = a - b
    elif e.op == "*":
        out = a * b
    elif e.op == "/":
        out = a / b
    else:
        out = np.power(a, b)
    return _check(e, out, x)


def evaluate(e, x):
    """Evaluate ``e`` at ``x`` (scalar or array); raises :class:`DomainError`."""
    arr = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        out = _eval(e, arr)
    if np.ndim(x) == 0:
        return float(out)
    return out


@functools.lru_cache(maxsize=512)
def compiled(e):
    """Return a cached vectorised callable for ``e``."""
    return functools.partial(evaluate, e)


def eval_dual(e, x):
    """Value and first derivative of ``e`` at ``x`` via dual-number propagation."""
    arr = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        v, d = _dual(e, arr)
    if np.ndim(x) == 0:
        return float(v), float(d)
    return v, d


def _dual(e, x):
    if isinstance(e, Num):
        return np.full(x.shape, e.value), np.zeros(x.shape)
    if isinstance(e, Var):
        return x, np.ones(x.shape)
    if isinstance(e, Neg):
        v, d = _dual(e.arg, x)
        return -v, -d
    if isinstance(e, Call):
        u, du = _dual(e.arg, x)
        if e.fn == "ln":
            v = _check(e, np.where(u > 0, np.log(u), np.nan), x)
            d = du / u
        elif e.fn == "exp":
            v = _check(e, np.exp(u), x)
            d = v * du
        elif e.fn == "sqrt":
            v = _check(e, np.sqrt(u), x)
            d = np.where(du == 0, 0.0, du / (2.0 * v))
        else:
            v = np.abs(u)
            d = np.sign(u) * du
        return v, _check(e, d, x, "derivative")
    a, da = _dual(e.left, x)
    b, db = _dual(e.right, x)
    if e.op == "+":
        v, d = a + b, da + db
    elif e.op == "-":
        v, d = a - b, da - db
    elif e.op == "*":
        v, d = a * b, da * b + a * db
    elif e.op == "/":
        v = a / b
        d = (da * b - a * db) / (b * b)
    elif not contains_x(e.right):
        c = float(b.flat[0]) if b.size else 0.0
        v = np.power(a, c)
        d = np.where(da == 0, 0.0, c * np.power(a, c - 1.0) * da)
    else:
        v = np.power(a, b)
        d = v * (db * np.log(a) + b * da / a)
    return _check(e, v, x), _check(e, d, x, "derivative")
