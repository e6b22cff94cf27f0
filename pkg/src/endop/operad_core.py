"""The abstract operad contract, a generic axiom checker, and the built-in
projection (Perm) and one-object scalar operads.

An operad here is a family of elements graded by arity with partial
compositions o_i, a symmetric-group action relabelling inputs, and a unit in
arity one.  Concrete operads plug their operations into an OperadDescriptor;
the axiom checker then tests unit laws, sequential and parallel
associativity, and equivariance exhaustively on enumerated elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import OperadMismatch, PositionOutOfRange
from .perms import all_perms, compose_perms, embed_at, identity_perm, invert_perm, stretch_at


@dataclass(frozen=True)
class PermElement:
    """The i-th projection among n inputs."""

    arity: int
    index: int

    def __post_init__(self):
        if self.arity < 1:
            raise ValueError("projections need at least one input")
        if not 1 <= self.index <= self.arity:
            raise ValueError(f"projection index {self.index} out of 1..{self.arity}")

    def __str__(self):
        return f"pi{self.index}[{self.arity}]"

    def apply(self, args):
        return args[self.index - 1]


def perm_compose(w1: PermElement, k: int, w2: PermElement) -> PermElement:
    """Plug a projection into slot k of another projection.

    The composite of projections is again a projection; its index follows
    from composing the underlying functions.
    """
    if not 1 <= k <= w1.arity:
        raise PositionOutOfRange(f"slot {k} out of 1..{w1.arity}")
    m, n, i, j = w1.arity, w2.arity, w1.index, w2.index
    if i < k:
        idx = i
    elif i == k:
        idx = k + j - 1
    else:
        idx = i + n - 1
    return PermElement(m + n - 1, idx)


def perm_act(sigma, w: PermElement) -> PermElement:
    """Input relabelling: (sigma . pi_i)(a_1..a_n) = pi_i(a_sigma(1)..) = a_sigma(i)."""
    if len(sigma) != w.arity:
        raise OperadMismatch("permutation arity mismatch")
    return PermElement(w.arity, sigma[w.index - 1])


@dataclass(frozen=True)
class OperadDescriptor:
    """Uniform interface over one concrete operad.

    compose(w1, i, w2), act(sigma, w), unit (arity-1 element), arity_of(w),
    and enumerate(arity, size_bound) -> finitely many distinct elements.
    """

    name: str
    compose: Callable
    act: Callable
    unit: object
    arity_of: Callable
    enumerate_arity: Callable
    element_type: type = object

    def owns(self, w) -> bool:
        return isinstance(w, self.element_type)


def compose_at(P: OperadDescriptor, w1, i: int, w2):
    """Partial composition through the descriptor, with validation."""
    if not (P.owns(w1) and P.owns(w2)):
        raise OperadMismatch(f"elements do not belong to operad {P.name}")
    m = P.arity_of(w1)
    if not 1 <= i <= m:
        raise PositionOutOfRange(f"slot {i} out of 1..{m}")
    return P.compose(w1, i, w2)


def perm_operad() -> OperadDescriptor:
    return OperadDescriptor(
        name="perm",
        compose=perm_compose,
        act=perm_act,
        unit=PermElement(1, 1),
        arity_of=lambda w: w.arity,
        enumerate_arity=lambda n, size_bound: (
            [PermElement(n, i) for i in range(1, n + 1)] if n >= 1 else []
        ),
        element_type=PermElement,
    )


@dataclass(frozen=True)
class ScalarOperadElement:
    """Arity-one element of the one-object operad attached to a commutative
    ring: composition is ring multiplication."""

    scalar: object

    @property
    def arity(self):
        return 1

    def __str__(self):
        return str(self.scalar)


def trivial_operad(domain) -> OperadDescriptor:
    """The operad with the ring in arity one and nothing elsewhere."""

    def compose(w1, i, w2):
        return ScalarOperadElement(w1.scalar * w2.scalar)

    def act(sigma, w):
        return w

    def enumerate_arity(n, size_bound):
        if n != 1:
            return []
        return [ScalarOperadElement(domain.scalar(v)) for v in domain.elements()]

    return OperadDescriptor(
        name=f"trivial-{domain}",
        compose=compose,
        act=act,
        unit=ScalarOperadElement(domain.one()),
        arity_of=lambda w: 1,
        enumerate_arity=enumerate_arity,
        element_type=ScalarOperadElement,
    )


@dataclass
class CheckResult:
    name: str
    instances: int
    passed: bool
    witness: str | None = None

    def to_json_dict(self):
        d = {"name": self.name, "instances": self.instances, "pass": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class AxiomReport:
    operad: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def first_failure(self) -> CheckResult | None:
        for c in self.checks:
            if not c.passed:
                return c
        return None

    def to_json_dict(self):
        return {"operad": self.operad, "checks": [c.to_json_dict() for c in self.checks]}


class _Check:
    """Counts instances and keeps the first counterexample found."""

    __slots__ = ("name", "instances", "witness")

    def __init__(self, name):
        self.name = name
        self.instances = 0
        self.witness = None

    def fail(self, witness: str):
        if self.witness is None:
            self.witness = witness

    def result(self):
        return CheckResult(self.name, self.instances, self.witness is None, self.witness)


def _elements_by_arity(P, arity_bound, size_bound):
    table = {}
    for n in range(arity_bound + 1):
        els = list(P.enumerate_arity(n, size_bound))
        if els:
            table[n] = els
    return table


def check_operad_axioms(
    P: OperadDescriptor,
    arity_bound: int,
    size_bound: int,
    triple_size_bound: int | None = None,
) -> AxiomReport:
    """Exhaustive axiom test over the enumerated elements.

    Unit laws and equivariance run over elements of size <= size_bound; the
    three-element axioms (sequential associativity and parallel commutation)
    run over elements of size <= triple_size_bound, which defaults to
    size_bound.  Arities with no elements are skipped.  Failures are report
    content, not exceptions; each failing check carries its first
    counterexample in enumeration order.
    """
    if triple_size_bound is None:
        triple_size_bound = size_bound
    els = _elements_by_arity(P, arity_bound, size_bound)
    small = (
        els
        if triple_size_bound == size_bound
        else _elements_by_arity(P, arity_bound, triple_size_bound)
    )
    compose = P.compose
    act = P.act
    report = AxiomReport(P.name)

    unit_left = _Check("unit-left")
    unit_right = _Check("unit-right")
    for n, ws in els.items():
        for w in ws:
            unit_left.instances += 1
            got = compose(P.unit, 1, w)
            if got != w:
                unit_left.fail(f"1 o_1 {w} = {got}")
            for i in range(1, n + 1):
                unit_right.instances += 1
                got = compose(w, i, P.unit)
                if got != w:
                    unit_right.fail(f"{w} o_{i} 1 = {got}")
    report.checks.append(unit_left.result())
    report.checks.append(unit_right.result())

    seq = _Check("sequential-associativity")
    for n, w2s in small.items():
        if n < 1:
            continue
        for p, w3s in small.items():
            inner = {
                (w2, j, w3): compose(w2, j, w3)
                for w2 in w2s
                for j in range(1, n + 1)
                for w3 in w3s
            }
            for m, w1s in small.items():
                if m < 1:
                    continue
                for w1 in w1s:
                    for i in range(1, m + 1):
                        for w2 in w2s:
                            c12 = compose(w1, i, w2)
                            for j in range(1, n + 1):
                                k = i + j - 1
                                for w3 in w3s:
                                    seq.instances += 1
                                    if compose(c12, k, w3) != compose(
                                        w1, i, inner[(w2, j, w3)]
                                    ):
                                        seq.fail(
                                            f"({w1} o_{i} {w2}) o_{k} {w3} != "
                                            f"{w1} o_{i} ({w2} o_{j} {w3})"
                                        )
    report.checks.append(seq.result())

    par = _Check("parallel-commutation")
    for m, w1s in small.items():
        if m < 2:
            continue
        for p, w3s in small.items():
            right = {
                (w1, j, w3): compose(w1, j, w3)
                for w1 in w1s
                for j in range(2, m + 1)
                for w3 in w3s
            }
            for n, w2s in small.items():
                if n < 1:
                    continue
                for w1 in w1s:
                    for i in range(1, m):
                        for j in range(i + 1, m + 1):
                            for w2 in w2s:
                                left_first = compose(w1, i, w2)
                                for w3 in w3s:
                                    par.instances += 1
                                    lhs = compose(right[(w1, j, w3)], i, w2)
                                    rhs = compose(left_first, j + n - 1, w3)
                                    if lhs != rhs:
                                        par.fail(
                                            f"({w1} o_{j} {w3}) o_{i} {w2} != "
                                            f"({w1} o_{i} {w2}) o_{j + n - 1} {w3}"
                                        )
    report.checks.append(par.result())

    action = _Check("symmetric-action")
    for n, ws in els.items():
        if n < 1:
            continue
        perms = all_perms(n)
        ident = identity_perm(n)
        for w in ws:
            action.instances += 1
            if act(ident, w) != w:
                action.fail(f"id . {w} != {w}")
            for sigma in perms:
                for tau in perms:
                    action.instances += 1
                    if act(sigma, act(tau, w)) != act(compose_perms(sigma, tau), w):
                        action.fail(
                            f"sigma.(tau.{w}) != (sigma tau).{w} for {sigma}, {tau}"
                        )
    report.checks.append(action.result())

    equiv = _Check("equivariance")
    for m, w1s in small.items():
        if m < 1:
            continue
        for n, w2s in small.items():
            if n < 1:
                continue
            perms_m = all_perms(m)
            perms_n = all_perms(n)
            stretches = {
                (sigma, i): stretch_at(sigma, i, n)
                for sigma in perms_m
                for i in range(1, m + 1)
            }
            embeds = {
                (i, rho): embed_at(m, i, rho)
                for i in range(1, m + 1)
                for rho in perms_n
            }
            inverses = {sigma: invert_perm(sigma) for sigma in perms_m}
            for w1 in w1s:
                for w2 in w2s:
                    for sigma in perms_m:
                        sigma_inv = inverses[sigma]
                        acted = act(sigma, w1)
                        for i in range(1, m + 1):
                            equiv.instances += 1
                            lhs = compose(acted, i, w2)
                            rhs = act(
                                stretches[(sigma, i)],
                                compose(w1, sigma_inv[i - 1], w2),
                            )
                            if lhs != rhs:
                                equiv.fail(
                                    f"(sigma.{w1}) o_{i} {w2} fails for sigma={sigma}"
                                )
                    for i in range(1, m + 1):
                        base = compose(w1, i, w2)
                        for rho in perms_n:
                            equiv.instances += 1
                            if compose(w1, i, act(rho, w2)) != act(embeds[(i, rho)], base):
                                equiv.fail(
                                    f"{w1} o_{i} (rho.{w2}) fails for rho={rho}"
                                )
    report.checks.append(equiv.result())
    return report


def check_algebra_action(
    P: OperadDescriptor,
    carrier_size: int,
    evaluator: Callable,
    arity_bound: int,
    size_bound: int,
) -> AxiomReport:
    """Verify that `evaluator(w, args)` defines an action on {0..carrier-1}.

    Checks evaluation of composites against nested evaluation, and
    equivariance of evaluation under input relabelling, on every enumerated
    element and every argument tuple.
    """
    from itertools import product as iproduct

    from .errors import IncompleteEvaluation

    els = _elements_by_arity(P, arity_bound, size_bound)
    carrier = range(carrier_size)
    report = AxiomReport(P.name)

    def ev(w, args):
        try:
            v = evaluator(w, args)
        except (KeyError, IndexError) as exc:
            raise IncompleteEvaluation(f"no value for {w} at {args}") from exc
        if v is None:
            raise IncompleteEvaluation(f"no value for {w} at {args}")
        return v

    unit = _Check("action-unit")
    for a in carrier:
        unit.instances += 1
        got = ev(P.unit, (a,))
        if got != a:
            unit.fail(f"unit({a}) = {got}")
    report.checks.append(unit.result())

    comp = _Check("action-composition")
    for m, w1s in els.items():
        if m < 1:
            continue
        for n, w2s in els.items():
            tuples = list(iproduct(carrier, repeat=m + n - 1))
            for w1 in w1s:
                for i in range(1, m + 1):
                    lo, hi = i - 1, i - 1 + n
                    for w2 in w2s:
                        composite = P.compose(w1, i, w2)
                        for args in tuples:
                            comp.instances += 1
                            inner = ev(w2, args[lo:hi])
                            nested = ev(w1, args[:lo] + (inner,) + args[hi:])
                            direct = ev(composite, args)
                            if direct != nested:
                                comp.fail(
                                    f"eval({w1} o_{i} {w2}){args} = {direct} "
                                    f"but nested evaluation gives {nested}"
                                )
    report.checks.append(comp.result())

    equiv = _Check("action-equivariance")
    for n, ws in els.items():
        if n < 1:
            continue
        tuples = list(iproduct(carrier, repeat=n))
        for w in ws:
            for sigma in all_perms(n):
                acted = P.act(sigma, w)
                for args in tuples:
                    equiv.instances += 1
                    permuted = tuple(args[s - 1] for s in sigma)
                    if ev(acted, args) != ev(w, permuted):
                        equiv.fail(
                            f"eval(sigma.{w}){args} != eval({w}) on permuted "
                            f"args, sigma={sigma}"
                        )
    report.checks.append(equiv.result())
    return report
