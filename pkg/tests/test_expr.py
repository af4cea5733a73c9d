import math
import re
import zlib

import numpy as np
import pytest

from gaconvex import expr as ex
from gaconvex.funcat import catalog

CORPUS = [
    "x", "2", "3.5", "x^2", "x^2.5", "-x", "-x^2", "(-x)^2", "x^-1", "x ^ 3 + ln( x )",
    "2^x^2", "(2^x)^2", "1/x", "x/2/3", "x/(2/3)", "x-1-2", "x-(1-2)", "x+1+2",
    "x*(x+1)", "(x+1)*(x-1)", "-(x+1)", "--x", "x*-2", "ln(x)", "exp(x/2)",
    "sqrt(x)", "abs(x-2)", "ln(x)+1/x", "x*ln(x)", "x^2.5*ln(x)", "exp(-x)",
    "exp(x)^2", "sqrt(x^2+1)", "ln(ln(x+2))", "x^1.5", "1/(1+x)", "(x+1)/(x-3)",
    "x^x", "2*x^3-4*x+1", "ln(x)^0.5", "abs(ln(x))^2", "-ln(x)", "exp(ln(x))",
    "x/(x+1)^2", "(1-x)^3", "x-x^2/2+x^3/3", "sqrt(abs(x))*exp(-x^2)", "1e-3*x",
    "(x+1)^(x-1)", "-2^x",
]


def _nows(s):
    return re.sub(r"\s+", "", s)


def test_corpus_size():
    assert len(set(CORPUS)) == 50


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    tree = ex.parse_expr(text)
    printed = ex.to_text(tree)
    assert printed == _nows(text)
    assert ex.parse_expr(printed) == tree


def test_redundant_parentheses_are_dropped():
    assert ex.to_text(ex.parse_expr("((x))+(1)")) == "x+1"
    assert ex.to_text(ex.parse_expr("x^(-1)")) == "x^-1"


def test_precedence():
    assert ex.parse_expr("x^2") == ex.BinOp("^", ex.X, ex.Num(2.0, "2"))
    # power is right associative and binds tighter than unary minus
    assert ex.parse_expr("2^x^2") == ex.parse_expr("2^(x^2)")
    assert ex.parse_expr("-x^2") == ex.Neg(ex.parse_expr("x^2"))
    assert ex.parse_expr("x-1-2") == ex.parse_expr("(x-1)-2")
    t = ex.parse_expr("ln(x) + 1/x")
    assert isinstance(t, ex.BinOp) and t.op == "+"
    assert t.left == ex.Call("ln", ex.X)
    assert t.right.op == "/"


@pytest.mark.parametrize("text, offset", [
    ("2*^x", 2), ("x+", 2), ("(x", 2), ("ln x", 3), ("foo(x)", 0), ("x $ 2", 2), ("", 0), ("x)", 1),
])
def test_syntax_errors(text, offset):
    with pytest.raises(ex.ExprSyntaxError) as err:
        ex.parse_expr(text)
    assert err.value.offset == offset


def test_dual_examples():
    assert ex.eval_dual(ex.parse_expr("x^2"), 3.0) == (9.0, 6.0)
    v, d = ex.eval_dual(ex.parse_expr("ln(x)"), math.e)
    assert v == pytest.approx(1.0, rel=1e-15)
    assert d == pytest.approx(1 / math.e, rel=1e-15)


def test_dual_matches_finite_difference_example():
    e = ex.parse_expr("x^2.5*ln(x)")
    h = 1e-6
    fd = (ex.evaluate(e, 1.7 + h) - ex.evaluate(e, 1.7 - h)) / (2 * h)
    assert ex.eval_dual(e, 1.7)[1] == pytest.approx(fd, rel=1e-6)


@pytest.mark.parametrize("name", sorted(catalog()))
def test_catalog_derivatives_match_central_differences(name):
    f = catalog()[name]
    rng = np.random.default_rng(zlib.crc32(name.encode()))
    x = rng.uniform(0.2, 5.0, 100)
    h = 1e-6 * x
    fd = (f(x + h) - f(x - h)) / (2 * h)
    _, d = f.dual(x)
    sym = ex.evaluate(f.derivative, x)
    scale = np.maximum(np.abs(fd), 1e-8)
    assert np.max(np.abs(d - fd) / scale) <= 1e-6
    np.testing.assert_allclose(sym, d, rtol=1e-12, atol=1e-14)


def test_symbolic_derivative_printing():
    assert ex.to_text(ex.diff(ex.parse_expr("ln(x)+1/x"))) == "1/x-1/x^2"
    assert ex.to_text(ex.diff(ex.parse_expr("3"))) == "0"
    assert ex.to_text(ex.diff(ex.parse_expr("x"))) == "1"


def test_domain_error_names_subexpression():
    with pytest.raises(ex.DomainError) as err:
        ex.evaluate(ex.parse_expr("1+ln(x-2)"), np.array([3.0, 1.0]))
    assert err.value.subexpr == "ln(x-2)"
    assert err.value.x == 1.0
    assert err.value.index == 1
    with pytest.raises(ex.DomainError):
        ex.evaluate(ex.parse_expr("1/(x-1)"), 1.0)
    with pytest.raises(ex.DomainError) as err:
        ex.eval_dual(ex.parse_expr("sqrt(x-1)"), 1.0)
    assert err.value.what == "derivative"


def test_substitute_and_general_power():
    g = ex.parse_expr("x^0.5+1")
    f = ex.substitute(g, ex.Call("ln", ex.X))
    assert ex.to_text(f) == "ln(x)^0.5+1"
    v, d = ex.eval_dual(ex.parse_expr("x^x"), 2.0)
    assert v == pytest.approx(4.0)
    assert d == pytest.approx(4.0 * (math.log(2.0) + 1.0), rel=1e-14)


def test_evaluate_vectorised_constants():
    out = ex.evaluate(ex.parse_expr("7"), np.zeros(4))
    assert out.shape == (4,) and np.all(out == 7)
