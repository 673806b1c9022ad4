"""Small Boolean functions as explicit truth tables, plus a text expression DSL.

A function of n inputs (1 <= n <= 16) is stored as the full tuple of its
2^n output bits.  Input patterns are identified with integers: bit j of the
pattern index carries the value of the j-th declared input, so pattern 5 of
a 3-input function means input0=1, input1=0, input2=1.  All nine supported
gate families are symmetric functions, so for them the bit convention is
immaterial; it matters when compiling expressions such as ``A & B | C``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

MAX_INPUTS = 16


class GateKind(Enum):
    """The supported gate families, in canonical report order."""

    NOT = "not"
    AND = "and"
    NAND = "nand"
    OR = "or"
    NOR = "nor"
    XOR = "xor"
    XNOR = "xnor"
    MAJORITY = "maj"
    MINORITY = "min"


# Families whose ON-set or OFF-set has exactly one element.
SINGLETON_KINDS = frozenset({GateKind.AND, GateKind.NAND, GateKind.OR, GateKind.NOR})
# Families with |ON| = |OFF| = 2^(n-1).
EQUIVALENT_KINDS = frozenset(
    {GateKind.XOR, GateKind.XNOR, GateKind.MAJORITY, GateKind.MINORITY}
)


def arity_problem(kind: GateKind, arity: int) -> str | None:
    """Return a human-readable reason the (kind, arity) pair is illegal, or None."""
    if arity < 1 or arity > MAX_INPUTS:
        return f"arity must be within 1..{MAX_INPUTS}, got {arity}"
    if kind is GateKind.NOT:
        if arity != 1:
            return f"not gate takes exactly 1 input, got {arity}"
    elif kind in (GateKind.MAJORITY, GateKind.MINORITY):
        if arity < 3 or arity % 2 == 0:
            return f"{kind.value} gate needs an odd number of inputs >= 3, got {arity}"
    elif arity < 2:
        return f"{kind.value} gate needs at least 2 inputs, got {arity}"
    return None


@dataclass(frozen=True)
class GateFamily:
    """A named gate type at a fixed fan-in, e.g. MAJORITY with 5 inputs."""

    kind: GateKind
    arity: int

    def __post_init__(self):
        problem = arity_problem(self.kind, self.arity)
        if problem is not None:
            raise ValueError(problem)

    def describe(self) -> str:
        return f"{self.kind.value}(n={self.arity})"


@dataclass(frozen=True)
class TruthTable:
    """Complete single-output truth table over n inputs.

    ``outputs[i]`` is the function value for the input pattern whose binary
    encoding is i (bit 0 = first input).
    """

    n_inputs: int
    outputs: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n_inputs <= MAX_INPUTS:
            raise ValueError(
                f"n_inputs must be within 1..{MAX_INPUTS}, got {self.n_inputs}"
            )
        outputs = tuple(self.outputs)
        if len(outputs) != 1 << self.n_inputs:
            raise ValueError(
                f"expected {1 << self.n_inputs} outputs for {self.n_inputs} inputs, "
                f"got {len(outputs)}"
            )
        if any(bit not in (0, 1) for bit in outputs):
            raise ValueError("outputs must contain only 0 and 1")
        object.__setattr__(self, "outputs", outputs)

    @property
    def size(self) -> int:
        return 1 << self.n_inputs

    def complement(self) -> "TruthTable":
        """The function with every output bit inverted."""
        return TruthTable(self.n_inputs, tuple(1 - bit for bit in self.outputs))

    def permuted(self, order: Sequence[int]) -> "TruthTable":
        """Relabel inputs: old input i becomes input ``order[i]`` of the result."""
        n = self.n_inputs
        if sorted(order) != list(range(n)):
            raise ValueError(f"order must be a permutation of 0..{n - 1}")
        outs = [0] * self.size
        for p in range(self.size):
            q = 0
            for i in range(n):
                if p >> i & 1:
                    q |= 1 << order[i]
            outs[q] = self.outputs[p]
        return TruthTable(n, tuple(outs))

    def is_constant(self) -> bool:
        return all(bit == self.outputs[0] for bit in self.outputs)


@dataclass(frozen=True)
class OnOffSets:
    """Partition of the input patterns by function value."""

    on_set: frozenset[int]
    off_set: frozenset[int]

    @property
    def on_cardinality(self) -> int:
        return len(self.on_set)

    @property
    def off_cardinality(self) -> int:
        return len(self.off_set)


def hamming(p: int, q: int) -> int:
    """Number of bit positions in which the two patterns differ."""
    if p < 0 or q < 0:
        raise ValueError("patterns must be non-negative")
    return (p ^ q).bit_count()


def make_gate(family: GateFamily) -> TruthTable:
    """Build the full truth table of a gate family instance.

    NAND/NOR/XNOR/MINORITY are constructed as the complements of
    AND/OR/XOR/MAJORITY at the same arity.  XOR of n inputs is odd parity,
    MAJORITY outputs 1 when at least (n+1)/2 inputs are 1.
    """
    kind, n = family.kind, family.arity
    if kind is GateKind.NAND:
        return make_gate(GateFamily(GateKind.AND, n)).complement()
    if kind is GateKind.NOR:
        return make_gate(GateFamily(GateKind.OR, n)).complement()
    if kind is GateKind.XNOR:
        return make_gate(GateFamily(GateKind.XOR, n)).complement()
    if kind is GateKind.MINORITY:
        return make_gate(GateFamily(GateKind.MAJORITY, n)).complement()

    size = 1 << n
    if kind is GateKind.NOT:
        outs = (1, 0)
    elif kind is GateKind.AND:
        outs = tuple(1 if p == size - 1 else 0 for p in range(size))
    elif kind is GateKind.OR:
        outs = tuple(0 if p == 0 else 1 for p in range(size))
    elif kind is GateKind.XOR:
        outs = tuple(p.bit_count() & 1 for p in range(size))
    else:  # MAJORITY
        threshold = (n + 1) // 2
        outs = tuple(1 if p.bit_count() >= threshold else 0 for p in range(size))
    return TruthTable(n, outs)


def on_off_sets(table: TruthTable) -> OnOffSets:
    """Split the pattern indices into the ON-set (output 1) and OFF-set."""
    on = frozenset(p for p, bit in enumerate(table.outputs) if bit)
    off = frozenset(p for p, bit in enumerate(table.outputs) if not bit)
    return OnOffSets(on, off)


# --------------------------------------------------------------------------
# Expression DSL
#
#   expr  := or
#   or    := xor ('|' xor)*
#   xor   := and ('^' and)*
#   and   := unary ('&' unary)*
#   unary := '!' unary | atom
#   atom  := ident | '0' | '1' | '(' expr ')'
#          | ('MAJ' | 'MIN') '(' expr (',' expr)+ ')'
#
# Identifiers are [A-Za-z_][A-Za-z0-9_]*; whitespace is insignificant;
# precedence is NOT > AND > XOR > OR.  MAJ/MIN are treated as calls only
# when immediately followed by '(' and otherwise parse as identifiers.
# --------------------------------------------------------------------------


class BoolExpr:
    """Base class for expression AST nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Var(BoolExpr):
    name: str


@dataclass(frozen=True)
class Const(BoolExpr):
    value: int


@dataclass(frozen=True)
class Not(BoolExpr):
    operand: BoolExpr


@dataclass(frozen=True)
class And(BoolExpr):
    operands: tuple[BoolExpr, ...]


@dataclass(frozen=True)
class Or(BoolExpr):
    operands: tuple[BoolExpr, ...]


@dataclass(frozen=True)
class Xor(BoolExpr):
    operands: tuple[BoolExpr, ...]


@dataclass(frozen=True)
class Maj(BoolExpr):
    operands: tuple[BoolExpr, ...]


@dataclass(frozen=True)
class Min(BoolExpr):
    operands: tuple[BoolExpr, ...]


class ExprSyntaxError(ValueError):
    """Raised on malformed expression text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[01]|[&|^!(),]")
_WS = re.compile(r"\s*")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        self.pos = _WS.match(self.text, self.pos).end()

    def peek(self) -> str | None:
        self._skip_ws()
        if self.pos >= len(self.text):
            return None
        m = _TOKEN.match(self.text, self.pos)
        if m is None:
            raise ExprSyntaxError(
                f"unexpected character {self.text[self.pos]!r}", self.pos
            )
        return m.group()

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", self.pos)
        self.pos += len(tok)
        return tok

    def expect(self, tok: str):
        got = self.peek()
        if got != tok:
            raise ExprSyntaxError(f"expected {tok!r}, found {got!r}", self.pos)
        self.take()

    def parse(self) -> BoolExpr:
        node = self.parse_or()
        leftover = self.peek()
        if leftover is not None:
            raise ExprSyntaxError(f"unexpected token {leftover!r}", self.pos)
        return node

    def _chain(self, sub, op: str, node_type) -> BoolExpr:
        first = sub()
        items = [first]
        while self.peek() == op:
            self.take()
            items.append(sub())
        if len(items) == 1:
            return first
        return node_type(tuple(items))

    def parse_or(self) -> BoolExpr:
        return self._chain(self.parse_xor, "|", Or)

    def parse_xor(self) -> BoolExpr:
        return self._chain(self.parse_and, "^", Xor)

    def parse_and(self) -> BoolExpr:
        return self._chain(self.parse_unary, "&", And)

    def parse_unary(self) -> BoolExpr:
        if self.peek() == "!":
            self.take()
            return Not(self.parse_unary())
        return self.parse_atom()

    def parse_atom(self) -> BoolExpr:
        tok = self.peek()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", self.pos)
        if tok == "(":
            self.take()
            node = self.parse_or()
            self.expect(")")
            return node
        if tok in ("0", "1"):
            self.take()
            return Const(int(tok))
        if tok in ("&", "|", "^", ")", ","):
            raise ExprSyntaxError(f"unexpected token {tok!r}", self.pos)
        call_pos = self.pos
        self.take()
        if tok in ("MAJ", "MIN") and self.peek() == "(":
            self.take()
            args = [self.parse_or()]
            while self.peek() == ",":
                self.take()
                args.append(self.parse_or())
            self.expect(")")
            if len(args) < 3 or len(args) % 2 == 0:
                raise ExprSyntaxError(
                    f"{tok} needs an odd number of arguments >= 3, got {len(args)}",
                    call_pos,
                )
            return Maj(tuple(args)) if tok == "MAJ" else Min(tuple(args))
        return Var(tok)


def parse_expr(text: str) -> BoolExpr:
    """Parse expression text into an AST; raises ExprSyntaxError with position."""
    expr = _Parser(text).parse()
    names = free_vars(expr)
    if len(names) > MAX_INPUTS:
        raise ValueError(
            f"expression uses {len(names)} variables, at most {MAX_INPUTS} supported"
        )
    return expr


def free_vars(expr: BoolExpr) -> tuple[str, ...]:
    """Free variable names in first-occurrence order."""
    seen: dict[str, None] = {}

    def walk(node: BoolExpr):
        if isinstance(node, Var):
            seen.setdefault(node.name)
        elif isinstance(node, Not):
            walk(node.operand)
        elif isinstance(node, (And, Or, Xor, Maj, Min)):
            for child in node.operands:
                walk(child)

    walk(expr)
    return tuple(seen)


def _eval(node: BoolExpr, env: dict[str, int]) -> int:
    if isinstance(node, Var):
        return env[node.name]
    if isinstance(node, Const):
        return node.value
    if isinstance(node, Not):
        return 1 - _eval(node.operand, env)
    values = [_eval(child, env) for child in node.operands]
    if isinstance(node, And):
        return int(all(values))
    if isinstance(node, Or):
        return int(any(values))
    if isinstance(node, Xor):
        return sum(values) & 1
    ones = sum(values)
    if isinstance(node, Maj):
        return int(2 * ones > len(values))
    if isinstance(node, Min):
        return int(2 * ones < len(values))
    raise TypeError(f"unknown expression node {node!r}")


def compile_expr(expr: BoolExpr) -> TruthTable:
    """Evaluate the expression over all assignments of its free variables.

    Variable j of the first-occurrence order is bit j of the pattern index.
    """
    names = free_vars(expr)
    if not names:
        raise ValueError("expression has no variables; nothing to tabulate")
    if len(names) > MAX_INPUTS:
        raise ValueError(
            f"expression uses {len(names)} variables, at most {MAX_INPUTS} supported"
        )
    n = len(names)
    outs = []
    for pattern in range(1 << n):
        env = {name: pattern >> j & 1 for j, name in enumerate(names)}
        outs.append(_eval(expr, env))
    return TruthTable(n, tuple(outs))


_LEVELS = {Or: 1, Xor: 2, And: 3, Not: 4}
_OP_TEXT = {Or: " | ", Xor: " ^ ", And: " & "}


def unparse(expr: BoolExpr) -> str:
    """Render an AST back to parseable text; parse(unparse(e)) == e."""

    def level(node: BoolExpr) -> int:
        return _LEVELS.get(type(node), 5)

    def render(node: BoolExpr, parent_level: int) -> str:
        if isinstance(node, Var):
            return node.name
        if isinstance(node, Const):
            return str(node.value)
        if isinstance(node, Not):
            return "!" + render(node.operand, _LEVELS[Not])
        if isinstance(node, (Maj, Min)):
            name = "MAJ" if isinstance(node, Maj) else "MIN"
            return f"{name}({', '.join(render(a, 0) for a in node.operands)})"
        my_level = _LEVELS[type(node)]
        text = _OP_TEXT[type(node)].join(render(a, my_level) for a in node.operands)
        # Parenthesize when nesting would otherwise flatten on re-parse.
        if my_level <= parent_level:
            return f"({text})"
        return text

    return render(expr, 0)
