"""Rewrite rules and reduction strategies for the SK and SF calculi.

Rules:
  S-rule            S x y z  ~>  x z (y z)
  K-rule            K x y    ~>  x
  F-atom-rule       F O M N  ~>  M       when O is a bare operator atom
  F-compound-rule   F (P Q) M N  ~>  N P Q   when P Q is a compound

The F rules fire only when the first argument is factorable (an atom or
a compound).  NormalOrder is leftmost-outermost with the one exception
that forces: at a fully applied F whose first argument is neither
factorable nor variable-headed, reduction happens inside that first
argument first, until its head shape stabilizes.  A fully applied F
whose first argument is variable-headed can never fire; a term is
"stuck" (rather than normal) when such positions remain, which requires
an open term.

Two engines implement the same strategy: a step-at-a-time stepper that
produces Step records for traces, and a stack machine that normalizes
without re-scanning from the root.  They fire identical rules at
identical positions in identical order; the test suite checks this
exhaustively at small sizes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Optional

from .syntax import render
from .terms import (
    ARITY,
    App,
    Calculus,
    F,
    Term,
    check_calculus,
    replace_at,
    subterm_at,
)

RULE_S = "S-rule"
RULE_K = "K-rule"
RULE_F_ATOM = "F-atom-rule"
RULE_F_COMPOUND = "F-compound-rule"

DEFAULT_BUDGET = 100_000

_F_BIT = 4  # terms.ops bit for the F operator


class Strategy(enum.Enum):
    NORMAL = "normal"
    APPLICATIVE = "applicative"


class Status(enum.Enum):
    NORMAL = "normal"
    BUDGET = "budget"
    STUCK = "stuck"


@dataclass(frozen=True)
class Step:
    """One rewrite: the whole term before and after, and where it fired."""

    path: tuple[int, ...]  # 0 = into fun, 1 = into arg
    rule: str
    before: Term
    after: Term


@dataclass(frozen=True)
class ReduceOutcome:
    status: Status
    term: Term  # normal form, partial term, or stuck term
    steps_taken: int
    steps: tuple[Step, ...] = ()  # populated only when tracing
    reason: Optional[str] = None  # "varheaded-f" for stuck outcomes

    @property
    def is_normal(self) -> bool:
        return self.status is Status.NORMAL


# --- firing a single node ----------------------------------------------------


def _fire(u: Term) -> Optional[tuple[str, Term]]:
    """Rule and contractum if u is exactly a fireable rule instance."""
    op = u.head
    if op is None or u.nargs != ARITY[op]:
        return None
    if op == "S":
        f1 = u.fun
        x, y, z = f1.fun.arg, f1.arg, u.arg
        return RULE_S, App(App(x, z), App(y, z))
    if op == "K":
        return RULE_K, u.fun.arg
    a1 = u.fun.fun.arg  # F's first argument
    h = a1.head
    if h is None:
        return None  # variable-headed: permanently blocked here
    if a1.nargs == 0:
        return RULE_F_ATOM, u.fun.arg
    if a1.nargs < ARITY[h]:
        return RULE_F_COMPOUND, App(App(u.arg, a1.fun), a1.arg)
    return None  # first argument must stabilize first


# --- step-at-a-time steppers -------------------------------------------------


def _find_normal(t: Term) -> Optional[tuple[tuple[int, ...], str, Term]]:
    """Leftmost-outermost fireable position, by preorder scan.

    The F exception needs no special casing here: a fully applied F
    whose first argument is not yet factorable simply fails to fire, and
    the preorder continues down the spine into that first argument.
    """
    stack: list[tuple[tuple[int, ...], Term]] = [((), t)]
    while stack:
        path, u = stack.pop()
        hit = _fire(u)
        if hit is not None:
            return path, hit[0], hit[1]
        if isinstance(u, App):
            stack.append((path + (1,), u.arg))
            stack.append((path + (0,), u.fun))
    return None


def _find_applicative(t: Term) -> Optional[tuple[tuple[int, ...], str, Term]]:
    """Rightmost-innermost fireable position: arguments before functions,
    children before their node."""
    stack: list[tuple[tuple[int, ...], Term, bool]] = [((), t, False)]
    while stack:
        path, u, visited = stack.pop()
        if not visited:
            stack.append((path, u, True))
            if isinstance(u, App):
                stack.append((path + (0,), u.fun, False))
                stack.append((path + (1,), u.arg, False))
        else:
            hit = _fire(u)
            if hit is not None:
                return path, hit[0], hit[1]
    return None


def step_once(
    t: Term, calc: Calculus, strategy: Strategy = Strategy.NORMAL
) -> Optional[Step]:
    """The unique strategy-selected step, or None if no step exists."""
    check_calculus(t, calc)
    find = _find_normal if strategy is Strategy.NORMAL else _find_applicative
    hit = find(t)
    if hit is None:
        return None
    path, rule, contractum = hit
    return Step(path, rule, before=t, after=replace_at(t, path, contractum))


# --- stack machine for untraced normal-order runs ----------------------------


def _rebuild(stack: list, w: Term) -> Term:
    """Fold the machine stack around the working term (for budget stops)."""
    for frame in reversed(stack):
        if frame[0] == "f":
            _, a2, a3, extras = frame
            w = App(App(App(F, w), a2), a3)
            for e in extras:
                w = App(w, e)
        else:
            _, headleaf, args, i = frame
            u = headleaf
            for j, a in enumerate(args):
                u = App(u, w if j == i else a)
            w = u
    return w


def _machine_normalize(t: Term, budget: int) -> tuple[Term, int, bool]:
    """Normal-order normalization without root re-scans.

    Returns (term, steps, finished).  The machine alternates between
    stabilizing the head of the working term (firing spine redexes,
    deferring a fully applied F by pushing an "f" frame and descending
    into its first argument) and normalizing the arguments of stabilized
    spines left to right ("a" frames).
    """
    steps = 0
    stack: list = []  # "f" frames: ["f", a2, a3, extras]; "a": ["a", head, args, i]
    w = t
    up = False  # True: w is fully normal, deliver to the top frame
    while True:
        if not up:
            # Stabilize w's spine.
            defer = False
            while True:
                op = w.head
                if op is None or w.nargs < ARITY[op]:
                    break  # leaf, compound, or variable-headed: stable
                extras: list[Term] = []
                r = w
                for _ in range(w.nargs - ARITY[op]):
                    extras.append(r.arg)
                    r = r.fun
                extras.reverse()
                if op == "F":
                    a1 = r.fun.fun.arg
                    h1 = a1.head
                    if h1 is None:
                        break  # blocked: variable-headed first argument
                    if a1.nargs >= ARITY[h1]:
                        # Defer F; stabilize its first argument first.
                        stack.append(["f", r.fun.arg, r.arg, extras])
                        w = a1
                        defer = True
                        break
                hit = _fire(r)
                if hit is None:  # blocked F spine (stable, unfireable)
                    break
                if steps >= budget:
                    return _rebuild(stack, w), steps, False
                steps += 1
                w = hit[1]
                for e in extras:
                    w = App(w, e)
            if defer:
                continue
            # w is head-stable: factorable, variable-headed, or blocked-F.
            if stack and stack[-1][0] == "f":
                up = True  # deliver the stabilized first argument
                continue
            if not isinstance(w, App):
                up = True  # a leaf is already normal
                continue
            # Enter the argument-normalization phase for w's spine.
            args: list[Term] = []
            node = w
            while isinstance(node, App):
                args.append(node.arg)
                node = node.fun
            args.reverse()
            stack.append(["a", node, args, 0])
            w = args[0]
            continue
        # up: w is fully normal (or, under an "f" frame, head-stable).
        if not stack:
            return w, steps, True
        frame = stack[-1]
        if frame[0] == "a":
            _, headleaf, args, i = frame
            args[i] = w
            if i + 1 < len(args):
                frame[3] = i + 1
                w = args[i + 1]
                up = False
            else:
                stack.pop()
                u = headleaf
                for a in args:
                    u = App(u, a)
                w = u  # fully normal: stable spine with normal arguments
        else:
            # "f" frame: w is the stabilized (or normalized) first argument.
            stack.pop()
            _, a2, a3, extras = frame
            r = App(App(App(F, w), a2), a3)
            for e in extras:
                r = App(r, e)
            h1 = w.head
            if h1 is not None and w.nargs < ARITY[h1]:
                w = r  # factorable: re-enter stabilization, F will fire
                up = False
            else:
                # Variable-headed or blocked: the F spine is stable as a
                # whole; go straight to its argument phase (re-entering
                # stabilization would defer the same F forever).
                args = [w, a2, a3] + extras
                stack.append(["a", F, args, 0])
                up = False


# --- normalization -----------------------------------------------------------


def _blocked_f_positions(t: Term) -> bool:
    """True iff t contains a fully applied F with a variable-headed first
    argument (the stuck shape).  Only possible in open terms."""
    if t.closed or not t.ops & _F_BIT:
        return False
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, App):
            if u.head == "F" and u.nargs == 3 and u.fun.fun.arg.head is None:
                return True
            stack.append(u.fun)
            stack.append(u.arg)
    return False


def _finish(t: Term, steps_taken: int, steps: tuple[Step, ...]) -> ReduceOutcome:
    if _blocked_f_positions(t):
        return ReduceOutcome(Status.STUCK, t, steps_taken, steps, "varheaded-f")
    return ReduceOutcome(Status.NORMAL, t, steps_taken, steps)


def normalize(
    t: Term,
    calc: Calculus,
    strategy: Strategy = Strategy.NORMAL,
    budget: int = DEFAULT_BUDGET,
    trace: bool = False,
) -> ReduceOutcome:
    """Iterate the strategy up to budget steps.

    Returns Normal (with the trace when requested), Budget when the step
    budget runs out first, or Stuck when the only non-normal positions
    left are variable-headed fully applied Fs (open terms only).
    """
    check_calculus(t, calc)
    if strategy is Strategy.NORMAL and not trace:
        term, n, finished = _machine_normalize(t, budget)
        if finished:
            return _finish(term, n, ())
        return ReduceOutcome(Status.BUDGET, term, n)
    find = _find_normal if strategy is Strategy.NORMAL else _find_applicative
    trail: list[Step] = []
    current = t
    taken = 0
    while True:
        hit = find(current)
        if hit is None:
            return _finish(current, taken, tuple(trail))
        if taken >= budget:
            return ReduceOutcome(Status.BUDGET, current, taken, tuple(trail))
        path, rule, contractum = hit
        after = replace_at(current, path, contractum)
        if trace:
            trail.append(Step(path, rule, before=current, after=after))
        current = after
        taken += 1


def render_trace(steps: Iterable[Step]) -> str:
    """One line per step: "<n> <rule> @ <path> : <before> => <after>",
    where before/after are the subterms at the rewrite position and the
    path is spelled with L (fun) and R (arg), or ε for the root."""
    lines = []
    for i, s in enumerate(steps, start=1):
        at = "".join("R" if d else "L" for d in s.path) or "ε"
        before = render(subterm_at(s.before, s.path))
        after = render(subterm_at(s.after, s.path))
        lines.append(f"{i} {s.rule} @ {at} : {before} => {after}")
    return "\n".join(lines)


# --- extensional probing ------------------------------------------------------


def extensionally_agree(
    a: Term,
    b: Term,
    calc: Calculus,
    probes: Iterable[Term],
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """True iff a and b behave identically on every probe: a X and b X
    both normalize to the same term, or both exhaust the budget."""
    for probe in probes:
        ra = normalize(App(a, probe), calc, Strategy.NORMAL, budget)
        rb = normalize(App(b, probe), calc, Strategy.NORMAL, budget)
        if ra.status is not rb.status:
            return False
        if ra.status is Status.NORMAL and ra.term != rb.term:
            return False
    return True
