"""Combinator terms for the SK and SF calculi.

Terms are immutable binary application trees over operator atoms and
variables.  Every node caches its size, spine-head operator, applied
argument count, closedness, operator bitmask, and hash at construction
time, so head classification and calculus legality checks are O(1) and
structural equality can shortcut on hashes.
"""

from __future__ import annotations

import enum
import zlib
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional

# --- operators and calculi -------------------------------------------------

#: Number of arguments each operator consumes when its rule fires.
ARITY: dict[str, int] = {"S": 3, "K": 2, "F": 3}

_OP_BIT = {"S": 1, "K": 2, "F": 4}
_HASH_MASK = (1 << 61) - 1


class Calculus(enum.Enum):
    """A combinatory calculus: which operator atoms are legal."""

    SK = "sk"
    SF = "sf"

    @property
    def operators(self) -> frozenset[str]:
        return _OPERATORS[self]

    @property
    def op_mask(self) -> int:
        return _OP_MASKS[self]


_OPERATORS = {Calculus.SK: frozenset("SK"), Calculus.SF: frozenset("SF")}
_OP_MASKS = {
    c: sum(_OP_BIT[o] for o in ops) for c, ops in _OPERATORS.items()
}


class CalculusError(ValueError):
    """A term mentions an operator that is illegal in the given calculus."""


# --- term nodes ------------------------------------------------------------


class Term:
    """Base class of Atom, Var, and App.  Instances are immutable.

    Cached fields:
      size    node count (atoms, vars, and applications all count 1)
      head    spine-head operator name, or None for a variable-headed spine
      nargs   number of arguments the spine head has been applied to
      closed  True iff the term contains no Var node
      ops     bitmask of the operator atoms occurring anywhere in the term
      h       structural hash
    """

    __slots__ = ("size", "head", "nargs", "closed", "ops", "h")

    size: int
    head: Optional[str]
    nargs: int
    closed: bool
    ops: int
    h: int

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, Term):
            return NotImplemented
        if self.h != other.h or self.size != other.size:
            return False
        stack = [(self, other)]
        while stack:
            a, b = stack.pop()
            if a is b:
                continue
            ta = type(a)
            if ta is not type(b):
                return False
            if ta is App:
                if a.h != b.h:
                    return False
                stack.append((a.fun, b.fun))
                stack.append((a.arg, b.arg))
            elif a.name != b.name:  # Atom or Var
                return False
        return True

    def __hash__(self) -> int:
        return self.h

    def __repr__(self) -> str:
        from .syntax import render

        return render(self)


class Atom(Term):
    """An operator atom: S, K, or F."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        if name not in ARITY:
            raise ValueError(f"unknown operator {name!r}")
        self.name = name
        self.size = 1
        self.head = name
        self.nargs = 0
        self.closed = True
        self.ops = _OP_BIT[name]
        self.h = zlib.crc32(b"op:" + name.encode()) & _HASH_MASK


class Var(Term):
    """A term variable.

    Legal names: lowercase identifiers (``x``, ``probe2``) or single
    uppercase letters other than operator letters (``M``, ``P``).
    """

    __slots__ = ("name",)

    def __init__(self, name: str):
        if not _is_var_name(name):
            raise ValueError(f"illegal variable name {name!r}")
        self.name = name
        self.size = 1
        self.head = None
        self.nargs = 0
        self.closed = False
        self.ops = 0
        self.h = zlib.crc32(b"var:" + name.encode()) & _HASH_MASK


class App(Term):
    """An application node: fun applied to arg."""

    __slots__ = ("fun", "arg")

    def __init__(self, fun: Term, arg: Term):
        self.fun = fun
        self.arg = arg
        self.size = fun.size + arg.size + 1
        self.head = fun.head
        self.nargs = fun.nargs + 1
        self.closed = fun.closed and arg.closed
        self.ops = fun.ops | arg.ops
        self.h = (fun.h * 2654435761 + arg.h * 40503 + 3) & _HASH_MASK


def _is_var_name(name: str) -> bool:
    if len(name) == 1 and name.isupper():
        return name not in ARITY
    return (
        name[:1].islower()
        and name.isidentifier()
        and name == name.lower()
    )


# --- constructors ----------------------------------------------------------

S = Atom("S")
K = Atom("K")
F = Atom("F")
_ATOMS = {"S": S, "K": K, "F": F}


def atom(name: str) -> Atom:
    try:
        return _ATOMS[name]
    except KeyError:
        raise ValueError(f"unknown operator {name!r}") from None


def var(name: str) -> Var:
    return Var(name)


def app(fun: Term, *args: Term) -> Term:
    """Left-associated application: app(f, x, y) is (f x) y."""
    for a in args:
        fun = App(fun, a)
    return fun


# --- head classification ---------------------------------------------------


class Verdict(enum.Enum):
    ATOM_HEAD = "atom"
    COMPOUND = "compound"
    REDEX = "redex"
    VAR_HEADED = "var-headed"


@dataclass(frozen=True)
class Classification:
    """Head status of a term; compounds carry their two components."""

    verdict: Verdict
    left: Optional[Term] = None
    right: Optional[Term] = None


def check_calculus(t: Term, calc: Calculus) -> None:
    """Raise CalculusError if t mentions an operator illegal in calc."""
    if t.ops & ~calc.op_mask:
        bad = [o for o, bit in _OP_BIT.items() if t.ops & bit & ~calc.op_mask]
        raise CalculusError(
            f"operator {', '.join(sorted(bad))} is illegal in"
            f" {calc.name}-calculus"
        )


def classify(t: Term, calc: Calculus) -> Classification:
    """Head classification: atom, compound, redex, or variable-headed.

    A compound is a partially applied operator (S or F applied to one or
    two arguments, K applied to one); a spine head applied to at least
    its arity makes the term a redex.  Classification is syntactic: the
    components of a compound need not be normal forms.
    """
    check_calculus(t, calc)
    head = t.head
    if head is None:
        return Classification(Verdict.VAR_HEADED)
    if t.nargs == 0:
        return Classification(Verdict.ATOM_HEAD)
    if t.nargs < ARITY[head]:
        return Classification(Verdict.COMPOUND, t.fun, t.arg)
    return Classification(Verdict.REDEX)


def is_factorable(t: Term, calc: Calculus) -> bool:
    """True iff t is an atom or a compound (the F rules can inspect it)."""
    v = classify(t, calc).verdict
    return v is Verdict.ATOM_HEAD or v is Verdict.COMPOUND


# --- structural helpers ----------------------------------------------------


def spine(t: Term) -> tuple[Term, list[Term]]:
    """Unwind applications: returns (spine head, [arg1, ..., argN])."""
    args: list[Term] = []
    while isinstance(t, App):
        args.append(t.arg)
        t = t.fun
    args.reverse()
    return t, args


def subterm_at(t: Term, path: tuple[int, ...]) -> Term:
    """Subterm at a path of 0 (fun) / 1 (arg) choices from the root."""
    for step in path:
        if not isinstance(t, App):
            raise IndexError(f"path {path} leaves the term")
        t = t.arg if step else t.fun
    return t


def replace_at(t: Term, path: tuple[int, ...], new: Term) -> Term:
    """Copy of t with the subterm at path replaced by new."""
    trail: list[App] = []
    node = t
    for step in path:
        if not isinstance(node, App):
            raise IndexError(f"path {path} leaves the term")
        trail.append(node)
        node = node.arg if step else node.fun
    result = new
    for step, parent in zip(reversed(path), reversed(trail)):
        if step:
            result = App(parent.fun, result)
        else:
            result = App(result, parent.arg)
    return result


def free_vars(t: Term) -> frozenset[str]:
    """Names of the variables occurring in t (there are no binders)."""
    if t.closed:
        return frozenset()
    names: set[str] = set()
    stack = [t]
    while stack:
        node = stack.pop()
        if node.closed:
            continue
        if isinstance(node, Var):
            names.add(node.name)
        elif isinstance(node, App):
            stack.append(node.fun)
            stack.append(node.arg)
    return frozenset(names)


def substitute(t: Term, bindings: Mapping[str, Term]) -> Term:
    """Replace every variable named in bindings by its image.

    Closed subterms are returned as-is, preserving sharing.
    """
    if t.closed or not bindings:
        return t
    if isinstance(t, Var):
        return bindings.get(t.name, t)
    assert isinstance(t, App)
    # Iterative two-phase rebuild to survive very deep terms.
    done: dict[int, Term] = {}
    stack: list[tuple[Term, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if node.closed:
            continue
        if isinstance(node, Var):
            done[id(node)] = bindings.get(node.name, node)
            continue
        assert isinstance(node, App)
        if not expanded:
            stack.append((node, True))
            stack.append((node.fun, False))
            stack.append((node.arg, False))
        else:
            fun = done.get(id(node.fun), node.fun)
            arg = done.get(id(node.arg), node.arg)
            if fun is node.fun and arg is node.arg:
                done[id(node)] = node
            else:
                done[id(node)] = App(fun, arg)
    return done.get(id(t), t)


def iter_subterms(t: Term) -> Iterator[tuple[tuple[int, ...], Term]]:
    """Preorder (path, subterm) pairs."""
    stack: list[tuple[tuple[int, ...], Term]] = [((), t)]
    while stack:
        path, node = stack.pop()
        yield path, node
        if isinstance(node, App):
            stack.append((path + (1,), node.arg))
            stack.append((path + (0,), node.fun))
