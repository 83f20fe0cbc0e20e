"""A small arithmetic language for cube actions.

Expressions mention coordinates t1, t2, ... and combine them with
+ - * / ^ (with ^ binding tightest and associating to the right,
then unary minus, then * and /, then + and -), parentheses, and the
functions sin, cos, exp, abs (one argument) and min, max (two).

parse_expr reports syntax errors with a byte offset and the set of
tokens that would have been accepted; eval_expr is the reference
interpreter; compile_expr produces an equivalent fast callable used
for cube actions.

Grammar:

    expr    = term , { ("+" | "-") , term } ;
    term    = factor , { ("*" | "/") , factor } ;
    factor  = "-" , factor | power ;
    power   = atom , [ "^" , factor ] ;
    atom    = number | variable | call | "(" , expr , ")" ;
    call    = function , "(" , expr , { "," , expr } , ")" ;
    number  = digit , { digit } , [ "." , digit , { digit } ] ,
              [ ("e" | "E") , [ "+" | "-" ] , digit , { digit } ] ;
    variable = "t" , nonzero-digit , { digit } ;
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence, Union

from .core import MooreCube, Shape, Space, make_cube
from .errors import DimensionMismatch, EvalError, ParseError

FUNCTIONS: dict[str, tuple[int, Callable]] = {
    "sin": (1, math.sin),
    "cos": (1, math.cos),
    "exp": (1, math.exp),
    "abs": (1, abs),
    "min": (2, min),
    "max": (2, max),
}

_ATOM_EXPECTED = ("number", "variable", "function", "'('", "'-'")


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True, slots=True)
class Num:
    value: float
    span: tuple[int, int] = field(compare=False, default=(0, 0))


@dataclass(frozen=True, slots=True)
class Var:
    index: int  # 1-based
    span: tuple[int, int] = field(compare=False, default=(0, 0))

    @property
    def name(self) -> str:
        return f"t{self.index}"


@dataclass(frozen=True, slots=True)
class Unary:
    op: str
    operand: "Expr"
    span: tuple[int, int] = field(compare=False, default=(0, 0))


@dataclass(frozen=True, slots=True)
class Bin:
    op: str
    left: "Expr"
    right: "Expr"
    span: tuple[int, int] = field(compare=False, default=(0, 0))


@dataclass(frozen=True, slots=True)
class Call:
    fn: str
    args: tuple["Expr", ...]
    span: tuple[int, int] = field(compare=False, default=(0, 0))


Expr = Union[Num, Var, Unary, Bin, Call]


# ---------------------------------------------------------------------------
# lexer


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str  # "num", "ident", "op", "(", ")", ",", "eof"
    text: str
    start: int  # byte offsets
    end: int


def _lex(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    pos = 0  # char index
    byte = 0  # byte offset of text[pos]
    n = len(text)

    def advance(count: int) -> None:
        nonlocal pos, byte
        byte += len(text[pos : pos + count].encode("utf-8"))
        pos += count

    while pos < n:
        ch = text[pos]
        if ch in " \t\r\n":
            advance(1)
            continue
        start = byte
        if ch.isdigit():
            end = pos + 1
            while end < n and text[end].isdigit():
                end += 1
            if end < n and text[end] == ".":
                if end + 1 >= n or not text[end + 1].isdigit():
                    raise ParseError(
                        "digit must follow decimal point",
                        start + (end + 1 - pos),
                        ("digit",),
                    )
                end += 1
                while end < n and text[end].isdigit():
                    end += 1
            if end < n and text[end] in "eE":
                mark = end + 1
                if mark < n and text[mark] in "+-":
                    mark += 1
                if mark >= n or not text[mark].isdigit():
                    raise ParseError(
                        "malformed exponent", start + (mark - pos), ("digit",)
                    )
                end = mark
                while end < n and text[end].isdigit():
                    end += 1
            word = text[pos:end]
            advance(end - pos)
            tokens.append(_Token("num", word, start, byte))
            continue
        if ch.isalpha() or ch == "_":
            end = pos + 1
            while end < n and (text[end].isalnum() or text[end] == "_"):
                end += 1
            word = text[pos:end]
            advance(end - pos)
            tokens.append(_Token("ident", word, start, byte))
            continue
        if ch in "+-*/^":
            advance(1)
            tokens.append(_Token("op", ch, start, byte))
            continue
        if ch in "(),":
            advance(1)
            tokens.append(_Token(ch if ch != "," else ",", ch, start, byte))
            continue
        raise ParseError(f"unexpected character {ch!r}", start, _ATOM_EXPECTED)
    tokens.append(_Token("eof", "", byte, byte))
    return tokens


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.cur
        self.pos += 1
        return tok

    def fail(self, message: str, expected: tuple[str, ...]) -> ParseError:
        return ParseError(message, self.cur.start, expected)

    def expr(self) -> Expr:
        node = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.take().text
            right = self.term()
            node = Bin(op, node, right, (node.span[0], right.span[1]))
        return node

    def term(self) -> Expr:
        node = self.factor()
        while self.cur.kind == "op" and self.cur.text in "*/":
            op = self.take().text
            right = self.factor()
            node = Bin(op, node, right, (node.span[0], right.span[1]))
        return node

    def factor(self) -> Expr:
        if self.cur.kind == "op" and self.cur.text == "-":
            tok = self.take()
            operand = self.factor()
            return Unary("-", operand, (tok.start, operand.span[1]))
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            self.take()
            exponent = self.factor()
            return Bin("^", base, exponent, (base.span[0], exponent.span[1]))
        return base

    def atom(self) -> Expr:
        tok = self.cur
        if tok.kind == "num":
            self.take()
            return Num(float(tok.text), (tok.start, tok.end))
        if tok.kind == "ident":
            self.take()
            word = tok.text
            if word in FUNCTIONS:
                return self.call(tok)
            if (
                len(word) >= 2
                and word[0] == "t"
                and word[1:].isdigit()
                and word[1] != "0"
            ):
                return Var(int(word[1:]), (tok.start, tok.end))
            raise ParseError(
                f"unknown identifier {word!r}",
                tok.start,
                ("variable", "function"),
            )
        if tok.kind == "(":
            self.take()
            node = self.expr()
            if self.cur.kind != ")":
                raise self.fail("expected ')'", ("operator", "')'"))
            close = self.take()
            return _respan(node, tok.start, close.end)
        raise self.fail(f"expected an operand, found {tok.text or 'end of input'!r}", _ATOM_EXPECTED)

    def call(self, name: _Token) -> Expr:
        arity = FUNCTIONS[name.text][0]
        if self.cur.kind != "(":
            raise self.fail(f"{name.text} requires arguments", ("'('",))
        self.take()
        args = [self.expr()]
        while len(args) < arity:
            if self.cur.kind != ",":
                raise self.fail(
                    f"{name.text} takes {arity} arguments", ("','",)
                )
            self.take()
            args.append(self.expr())
        if self.cur.kind == ",":
            raise self.fail(f"{name.text} takes {arity} arguments", ("')'",))
        if self.cur.kind != ")":
            raise self.fail("expected ')'", ("operator", "')'"))
        close = self.take()
        return Call(name.text, tuple(args), (name.start, close.end))


def _respan(node: Expr, start: int, end: int) -> Expr:
    """Widen a parenthesised expression's span without adding an AST node."""
    cls = type(node)
    fields = {f: getattr(node, f) for f in node.__dataclass_fields__ if f != "span"}
    return cls(**fields, span=(start, end))


def parse_expr(text: str) -> Expr:
    parser = _Parser(_lex(text))
    node = parser.expr()
    if parser.cur.kind != "eof":
        raise parser.fail(
            f"unexpected {parser.cur.text!r} after expression",
            ("operator", "end of input"),
        )
    return node


# ---------------------------------------------------------------------------
# evaluation


def _pow(base: float, exponent: float, start: int, end: int) -> float:
    try:
        result = base ** exponent
    except ZeroDivisionError:
        raise EvalError("zero raised to a negative power", (start, end)) from None
    if isinstance(result, complex):
        raise EvalError(
            "fractional power of a negative base", (start, end)
        )
    return result


def _div(num: float, den: float, start: int, end: int) -> float:
    try:
        return num / den
    except ZeroDivisionError:
        raise EvalError("division by zero", (start, end)) from None


def eval_expr(expr: Expr, env: Sequence[float] | Mapping[str, float]) -> float:
    """Reference interpreter; env is positional (t1 is env[0]) or by name."""
    if isinstance(expr, Num):
        return expr.value
    if isinstance(expr, Var):
        if isinstance(env, Mapping):
            try:
                return float(env[expr.name])
            except KeyError:
                raise EvalError(f"unbound variable {expr.name}", expr.span) from None
        if expr.index > len(env):
            raise EvalError(f"unbound variable {expr.name}", expr.span)
        return float(env[expr.index - 1])
    if isinstance(expr, Unary):
        return -eval_expr(expr.operand, env)
    if isinstance(expr, Bin):
        left = eval_expr(expr.left, env)
        right = eval_expr(expr.right, env)
        if expr.op == "+":
            return left + right
        if expr.op == "-":
            return left - right
        if expr.op == "*":
            return left * right
        if expr.op == "/":
            return _div(left, right, *expr.span)
        return _pow(left, right, *expr.span)
    fn = FUNCTIONS[expr.fn][1]
    return fn(*(eval_expr(a, env) for a in expr.args))


# ---------------------------------------------------------------------------
# pretty-printing

_LEVEL_ADD, _LEVEL_MUL, _LEVEL_UNARY, _LEVEL_POW, _LEVEL_ATOM = 1, 2, 3, 4, 5


def _render(expr: Expr, floor: int) -> str:
    if isinstance(expr, Num):
        return repr(expr.value)
    if isinstance(expr, Var):
        return expr.name
    if isinstance(expr, Call):
        inner = ", ".join(_render(a, _LEVEL_ADD) for a in expr.args)
        return f"{expr.fn}({inner})"
    if isinstance(expr, Unary):
        text = "-" + _render(expr.operand, _LEVEL_UNARY)
        level = _LEVEL_UNARY
    elif expr.op in "+-":
        text = f"{_render(expr.left, _LEVEL_ADD)} {expr.op} {_render(expr.right, _LEVEL_MUL)}"
        level = _LEVEL_ADD
    elif expr.op in "*/":
        text = f"{_render(expr.left, _LEVEL_MUL)}{expr.op}{_render(expr.right, _LEVEL_UNARY)}"
        level = _LEVEL_MUL
    else:  # ^ is right-associative
        text = f"{_render(expr.left, _LEVEL_ATOM)}^{_render(expr.right, _LEVEL_UNARY)}"
        level = _LEVEL_POW
    if level < floor:
        return f"({text})"
    return text


def to_source(expr: Expr) -> str:
    """Render with minimal parentheses; reparsing gives an equal tree."""
    return _render(expr, _LEVEL_ADD)


# ---------------------------------------------------------------------------
# compilation


def compile_expr(expr: Expr, n_vars: int) -> Callable[[Sequence[float]], float]:
    """Compile to a plain Python callable equivalent to eval_expr.

    Division and power faults raise the same EvalError (with spans) as the
    interpreter; variables beyond n_vars are rejected here, at compile time.
    """

    def emit(e: Expr) -> str:
        if isinstance(e, Num):
            return repr(e.value)
        if isinstance(e, Var):
            if e.index > n_vars:
                raise EvalError(f"unbound variable {e.name}", e.span)
            return f"t[{e.index - 1}]"
        if isinstance(e, Unary):
            return f"(-{emit(e.operand)})"
        if isinstance(e, Bin):
            left, right = emit(e.left), emit(e.right)
            if e.op in "+-*":
                return f"({left}{e.op}{right})"
            helper = "_div" if e.op == "/" else "_pow"
            return f"{helper}({left},{right},{e.span[0]},{e.span[1]})"
        args = ",".join(emit(a) for a in e.args)
        return f"_f_{e.fn}({args})"

    namespace: dict[str, object] = {"_div": _div, "_pow": _pow, "__builtins__": {}}
    for name, (_, fn) in FUNCTIONS.items():
        namespace[f"_f_{name}"] = fn
    source = f"lambda t: {emit(expr)}"
    return eval(compile(source, "<moore-expr>", "eval"), namespace)


def cube_from_exprs(
    dim: int,
    shape: Shape | Sequence[float],
    space: Space,
    exprs: Sequence[str | Expr],
) -> MooreCube:
    """Build a cube whose action components are DSL expressions."""
    if len(exprs) != space.total_dim:
        raise DimensionMismatch(
            f"{len(exprs)} expression(s) for a space of dimension {space.total_dim}"
        )
    sources: list[str] = []
    compiled: list[Callable[[Sequence[float]], float]] = []
    for e in exprs:
        node = parse_expr(e) if isinstance(e, str) else e
        sources.append(e if isinstance(e, str) else to_source(node))
        compiled.append(compile_expr(node, dim))
    fns = tuple(compiled)

    def evaluator(ts: tuple[float, ...]) -> tuple[float, ...]:
        return tuple(fn(ts) for fn in fns)

    return make_cube(dim, shape, space, evaluator, exprs=sources)
