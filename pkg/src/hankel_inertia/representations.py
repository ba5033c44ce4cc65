"""Kernel, line symbol, circle symbol and sequence forms of a finite-rank Hankel operator.

Conventions, fixed by the pairs e^{-t} <-> (1 - i lambda)^{-1} <-> 1/2 <-> (1/2) delta_{n,0}:

* line symbol  phi(lambda) = sum_m Q_m(lambda) (alpha_m - i lambda)^{-K_m-1}
* circle symbol omega(mu) = R_1(mu) + sum_m R_m(mu) (mu - gamma_m)^{-K_m-1},
  with phi(lambda) = -mu omega(mu), mu = (lambda - i)/(lambda + i)
* sequence kappa_n = tau_n + sum_m T_m(n) q_m^n, the Taylor coefficients of omega

Symbols are kept canonical: constants on the line side and principal parts
at poles inside the disc on the circle side are dropped, since they do not
change the operator.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .errors import InconsistentCounts, InvalidSymbol, NotSelfAdjoint, PoleOnBoundary
from .inertia import InertiaReport, kernel_inertia, real_term_counts
from .kernel import HankelKernel, KernelTerm, canonicalize
from .scalars import (
    I,
    ONE,
    ZERO,
    ComplexScalar,
    Polynomial,
    as_scalar,
    binomial_polynomial,
    principal_part,
)

X = Polynomial([0, 1])


def _binomial_poly(shift_root, k: int) -> Polynomial:
    """(x - shift_root)^k."""
    return Polynomial([-as_scalar(shift_root), 1]) ** k


# ---------------------------------------------------------------- data types


@dataclass(frozen=True)
class LineTerm:
    """Q(lambda) / (alpha - i lambda)^(K+1)."""

    alpha: ComplexScalar
    Q: Polynomial
    K: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if not isinstance(self.Q, Polynomial):
            object.__setattr__(self, "Q", Polynomial(self.Q))
        if self.alpha.re <= 0:
            raise InvalidSymbol(f"line pole needs Re(alpha) > 0, got {self.alpha}")
        if self.K < 0 or self.Q.degree > self.K:
            raise InvalidSymbol(f"deg Q = {self.Q.degree} exceeds K = {self.K}")
        if self.Q(-I * self.alpha).is_zero():
            raise InvalidSymbol(f"Q vanishes at -i alpha for alpha = {self.alpha}")

    def expansion(self) -> list[ComplexScalar]:
        """c_j with Q(lambda) = sum_j c_j (alpha - i lambda)^j, j = 0..K."""
        # lambda = i (w - alpha) where w = alpha - i lambda
        in_w = self.Q(Polynomial([-I * self.alpha, I]))
        return [in_w[j] for j in range(self.K + 1)]

    @classmethod
    def from_expansion(cls, alpha, c: Sequence[ComplexScalar]) -> "LineTerm":
        alpha = as_scalar(alpha)
        w = Polynomial([alpha, -I])  # alpha - i lambda
        return cls(alpha, Polynomial(c)(w), len(c) - 1)


@dataclass(frozen=True)
class LineSymbol:
    terms: tuple[LineTerm, ...] = ()

    def __call__(self, lam: complex) -> complex:
        return sum(
            (t.Q.eval_float(lam) / (complex(t.alpha) - 1j * lam) ** (t.K + 1) for t in self.terms), 0j
        )


@dataclass(frozen=True)
class CircleTerm:
    """R(mu) / (mu - gamma)^(K+1)."""

    gamma: ComplexScalar
    R: Polynomial
    K: int

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_scalar(self.gamma))
        if not isinstance(self.R, Polynomial):
            object.__setattr__(self, "R", Polynomial(self.R))
        g2 = self.gamma.abs2()
        if g2 == 1:
            raise PoleOnBoundary(f"pole {self.gamma} lies on the unit circle")
        if g2 < 1:
            raise InvalidSymbol(f"pole {self.gamma} lies inside the unit disc")
        if self.K < 0 or self.R.degree > self.K:
            raise InvalidSymbol(f"deg R = {self.R.degree} exceeds K = {self.K}")
        if self.R(self.gamma).is_zero():
            raise InvalidSymbol(f"R vanishes at its pole {self.gamma}")


@dataclass(frozen=True)
class CircleSymbol:
    polynomial_part: Polynomial = Polynomial()
    pole_terms: tuple[CircleTerm, ...] = ()

    def __post_init__(self):
        if not isinstance(self.polynomial_part, Polynomial):
            object.__setattr__(self, "polynomial_part", Polynomial(self.polynomial_part))

    def __call__(self, mu: complex) -> complex:
        total = self.polynomial_part.eval_float(mu)
        for t in self.pole_terms:
            total += t.R.eval_float(mu) / (mu - complex(t.gamma)) ** (t.K + 1)
        return total


@dataclass(frozen=True)
class GeometricTerm:
    """T(n) q^n."""

    q: ComplexScalar
    T: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "q", as_scalar(self.q))
        if not isinstance(self.T, Polynomial):
            object.__setattr__(self, "T", Polynomial(self.T))
        if self.q.is_zero():
            raise InvalidSymbol("q = 0 belongs in tau")
        q2 = self.q.abs2()
        if q2 == 1:
            raise PoleOnBoundary(f"|q| = 1 for q = {self.q}")
        if q2 > 1:
            raise InvalidSymbol(f"|q| > 1 for q = {self.q}")
        if self.T.is_zero():
            raise InvalidSymbol("geometric term with zero polynomial")

    @property
    def K(self) -> int:
        return self.T.degree


@dataclass(frozen=True)
class SequenceRep:
    tau: tuple[ComplexScalar, ...] = ()
    geometric_terms: tuple[GeometricTerm, ...] = ()

    def __post_init__(self):
        tau = [as_scalar(x) for x in self.tau]
        while tau and tau[-1].is_zero():
            tau.pop()
        object.__setattr__(self, "tau", tuple(tau))


Representation = Union[HankelKernel, LineSymbol, CircleSymbol, SequenceRep]


def _merge_sorted(items: dict, key):
    return tuple(items[k] for k in sorted(items, key=key))


# ---------------------------------------------------------------- kernel <-> line


def line_symbol_to_kernel(phi: LineSymbol) -> HankelKernel:
    terms = []
    for t in phi.terms:
        c = t.expansion()
        K = t.K
        # c_j (alpha - i lambda)^(j-K-1)  <->  c_j t^(K-j) e^{-alpha t} / (K-j)!
        coeffs = [ZERO] * (K + 1)
        for j, cj in enumerate(c):
            coeffs[K - j] = coeffs[K - j] + cj / math.factorial(K - j)
        terms.append(KernelTerm(t.alpha, Polynomial(coeffs)))
    return canonicalize(terms)


def kernel_to_line_symbol(k: HankelKernel) -> LineSymbol:
    out = {}
    for term in k.all_terms():
        K = term.K
        c = [term.poly[K - j] * math.factorial(K - j) for j in range(K + 1)]
        out[term.alpha] = LineTerm.from_expansion(term.alpha, c)
    return LineSymbol(_merge_sorted(out, lambda a: a.sort_key()))


def canonical_line_symbol(phi: LineSymbol) -> LineSymbol:
    """Merge repeated poles and order terms."""
    return kernel_to_line_symbol(line_symbol_to_kernel(phi))


# ---------------------------------------------------------------- line <-> circle


def pole_map_alpha_to_gamma(alpha) -> ComplexScalar:
    alpha = as_scalar(alpha)
    return (alpha + 1) / (alpha - 1)


def pole_map_gamma_to_alpha(gamma) -> ComplexScalar:
    gamma = as_scalar(gamma)
    return (gamma + 1) / (gamma - 1)


def _line_term_to_circle(t: LineTerm) -> tuple[Polynomial, CircleTerm | None]:
    """One line term as a polynomial part plus at most one pole term."""
    c = t.expansion()
    K = t.K
    alpha = t.alpha
    one_minus_mu = Polynomial([1, -1])
    if alpha == 1:
        # alpha - i lambda = 2 / (1 - mu); omega = -phi / mu, drop the 1/mu residue
        num = Polynomial()
        for j, cj in enumerate(c):
            num = num + one_minus_mu ** (K + 1 - j) * (-cj * ComplexScalar(2) ** (j - K - 1))
        quotient = Polynomial(num.coeffs[1:])
        return quotient, None
    gamma = pole_map_alpha_to_gamma(alpha)
    # alpha - i lambda = -(alpha - 1)(mu - gamma) / (1 - mu)
    num = Polynomial()
    for j, cj in enumerate(c):
        num = num + (
            _binomial_poly(gamma, j) * one_minus_mu ** (K + 1 - j) * (-cj * (-(alpha - 1)) ** (j - K - 1))
        )
    R = principal_part(num, X, gamma, K + 1)
    return Polynomial(), CircleTerm(gamma, R, K)


def line_to_circle(phi: LineSymbol) -> CircleSymbol:
    poly = Polynomial()
    poles = {}
    for t in phi.terms:
        p, pole = _line_term_to_circle(t)
        poly = poly + p
        if pole is not None:
            if pole.gamma in poles:
                raise InvalidSymbol(f"repeated pole {pole.gamma}; canonicalize the line symbol first")
            poles[pole.gamma] = pole
    return CircleSymbol(poly, _merge_sorted(poles, lambda g: g.sort_key()))


def _circle_pole_to_line(t: CircleTerm) -> LineTerm:
    gamma, K = t.gamma, t.K
    alpha = pole_map_gamma_to_alpha(gamma)
    # mu = (alpha + 1 - w)/(alpha - 1 - w), mu - gamma = 2w / ((alpha - 1 - w)(alpha - 1))
    mu_R = X * t.R
    a_plus = Polynomial([alpha + 1, -1])
    a_minus = Polynomial([alpha - 1, -1])
    N = Polynomial()
    for i, r in enumerate(mu_R.coeffs):
        if not r.is_zero():
            N = N + a_plus ** i * a_minus ** (K + 1 - i) * r
    scale = -((alpha - 1) / 2) ** (K + 1)
    # the w^0 part of N is a constant in phi and is dropped
    c = [N[j] * scale for j in range(K + 1)]
    return LineTerm.from_expansion(alpha, c)


def _circle_polynomial_to_line(R1: Polynomial) -> LineTerm:
    K = R1.degree
    # mu = 1 - 2u with u = 1/(1 - i lambda); phi = -mu R1(mu) = sum_j T_j u^j
    S = -(X * R1)
    T = S(Polynomial([1, -2]))
    c = [T[K + 1 - i] for i in range(K + 1)]
    return LineTerm.from_expansion(ONE, c)


def circle_to_line(omega: CircleSymbol) -> LineSymbol:
    out = {}
    if not omega.polynomial_part.is_zero():
        out[ONE] = _circle_polynomial_to_line(omega.polynomial_part)
    for t in omega.pole_terms:
        lt = _circle_pole_to_line(t)
        if lt.alpha in out:
            raise InvalidSymbol(f"repeated pole {t.gamma}")
        out[lt.alpha] = lt
    return LineSymbol(_merge_sorted(out, lambda a: a.sort_key()))


# ---------------------------------------------------------------- circle <-> sequence


def _pole_to_geometric(t: CircleTerm) -> GeometricTerm:
    K = t.K
    q = t.gamma.inverse()
    # (mu - gamma)^{-K-1} = (-q)^{K+1} sum_n C(n+K, K) q^n mu^n
    T = Polynomial()
    for i, r in enumerate(t.R.coeffs):
        if not r.is_zero():
            T = T + binomial_polynomial(K - i, K) * (r * q ** (-i))
    return GeometricTerm(q, T * (-q) ** (K + 1))


def _geometric_to_pole(g: GeometricTerm) -> CircleTerm:
    K = g.K
    q = g.q
    # (1 - q mu)^{K+1} sum_n T(n) q^n mu^n is a polynomial of degree <= K
    series = [g.T(n) * q ** n for n in range(K + 1)]
    factor = Polynomial([1, -q]) ** (K + 1)
    N = [sum((factor[j] * series[n - j] for j in range(n + 1)), ZERO) for n in range(K + 1)]
    return CircleTerm(q.inverse(), Polynomial(N) / (-q) ** (K + 1), K)


def circle_to_sequence(omega: CircleSymbol) -> SequenceRep:
    geo = {}
    for t in omega.pole_terms:
        g = _pole_to_geometric(t)
        geo[g.q] = g
    return SequenceRep(omega.polynomial_part.coeffs, _merge_sorted(geo, lambda q: q.sort_key()))


def sequence_to_circle(kappa: SequenceRep) -> CircleSymbol:
    poles = {}
    for g in kappa.geometric_terms:
        p = _geometric_to_pole(g)
        if p.gamma in poles:
            raise InvalidSymbol(f"repeated ratio {g.q}")
        poles[p.gamma] = p
    return CircleSymbol(Polynomial(kappa.tau), _merge_sorted(poles, lambda g: g.sort_key()))


def sequence_element(kappa: SequenceRep, n: int) -> ComplexScalar:
    if n < 0:
        raise ValueError("sequence index must be non-negative")
    value = kappa.tau[n] if n < len(kappa.tau) else ZERO
    for g in kappa.geometric_terms:
        value = value + g.T(n) * g.q ** n
    return value


def sequence_elements_float(kappa: SequenceRep, count: int) -> list[complex]:
    """kappa_0 .. kappa_{count-1} in floating point."""
    out = [complex(kappa.tau[n]) if n < len(kappa.tau) else 0j for n in range(count)]
    for g in kappa.geometric_terms:
        q = complex(g.q)
        qn = 1 + 0j
        for n in range(count):
            out[n] += g.T.eval_float(n) * qn
            qn *= q
    return out


# ---------------------------------------------------------------- dispatch


KINDS = ("kernel", "line", "circle", "sequence")


def kind_of(x: Representation) -> str:
    if isinstance(x, HankelKernel):
        return "kernel"
    if isinstance(x, LineSymbol):
        return "line"
    if isinstance(x, CircleSymbol):
        return "circle"
    if isinstance(x, SequenceRep):
        return "sequence"
    raise TypeError(f"not a Hankel representation: {type(x).__name__}")


_STEPS = {
    ("kernel", "line"): kernel_to_line_symbol,
    ("line", "kernel"): line_symbol_to_kernel,
    ("line", "circle"): line_to_circle,
    ("circle", "line"): circle_to_line,
    ("circle", "sequence"): circle_to_sequence,
    ("sequence", "circle"): sequence_to_circle,
}


def convert(x: Representation, to: str) -> Representation:
    """Walk the chain kernel - line - circle - sequence to the requested form."""
    if to not in KINDS:
        raise ValueError(f"unknown representation {to!r}")
    src = KINDS.index(kind_of(x))
    dst = KINDS.index(to)
    step = 1 if dst > src else -1
    for i in range(src, dst, step):
        x = _STEPS[(KINDS[i], KINDS[i + step])](x)
    return x


def to_kernel(x: Representation) -> HankelKernel:
    return convert(x, "kernel")


# ---------------------------------------------------------------- inertia


def _native_entries(x: Representation) -> list[dict]:
    """Per-term data (parameter, K, leading p) by the representation's own formula."""
    if isinstance(x, HankelKernel):
        items = [("alpha", t.alpha, t.K, t.poly.leading() * math.factorial(t.K)) for t in x.all_terms()]
    elif isinstance(x, LineSymbol):
        items = [("alpha", t.alpha, t.K, t.Q(-I * t.alpha)) for t in x.terms]
    elif isinstance(x, CircleSymbol):
        items = []
        R1 = x.polynomial_part
        if not R1.is_zero():
            K1 = R1.degree
            # same sign as p_1 = (-1)^K1 2^(K1+1) R1^(K1) / K1!
            items.append(("gamma", None, K1, R1.leading() * (-1) ** K1))
        for t in x.pole_terms:
            p = -t.R(t.gamma) * t.gamma.sign() if t.gamma.is_real() else t.R(t.gamma)
            items.append(("gamma", t.gamma, t.K, p))
    else:
        items = []
        if x.tau:
            items.append(("q", ZERO, len(x.tau) - 1, x.tau[-1]))
        for g in x.geometric_terms:
            items.append(("q", g.q, g.K, g.T.leading() * math.factorial(g.K)))

    params = {p for _, p, _, _ in items if p is not None}
    entries = []
    for name, param, K, p in items:
        if param is None or param.is_real():
            if not p.is_real():
                raise NotSelfAdjoint(f"non-real leading coefficient at {name}={param}")
            plus, minus = real_term_counts(K, p.sign())
            entries.append({"kind": "real", name: "inf" if param is None else str(param),
                            "K": K, "p": str(p), "n_plus": plus, "n_minus": minus})
        else:
            if param.conjugate() not in params:
                raise NotSelfAdjoint(f"{name}={param} has no conjugate partner")
            if param.im > 0:
                entries.append({"kind": "pair", name: str(param), "K": K,
                                "n_plus": K + 1, "n_minus": K + 1})
    return entries


def inertia_in_representation(x: Representation) -> InertiaReport:
    """Inertia by the native leading-coefficient formula, checked against the kernel route."""
    entries = _native_entries(x)
    plus = sum(e["n_plus"] for e in entries)
    minus = sum(e["n_minus"] for e in entries)
    via_kernel = kernel_inertia(to_kernel(x))
    if (plus, minus) != via_kernel.counts:
        raise InconsistentCounts(
            f"native counts {(plus, minus)} disagree with kernel counts {via_kernel.counts}"
        )
    return InertiaReport(plus, minus, plus + minus, tuple(entries), "closed-form")


__all__ = [
    "CircleSymbol",
    "CircleTerm",
    "GeometricTerm",
    "KINDS",
    "LineSymbol",
    "LineTerm",
    "SequenceRep",
    "canonical_line_symbol",
    "circle_to_line",
    "circle_to_sequence",
    "convert",
    "inertia_in_representation",
    "kernel_to_line_symbol",
    "kind_of",
    "line_symbol_to_kernel",
    "line_to_circle",
    "pole_map_alpha_to_gamma",
    "pole_map_gamma_to_alpha",
    "sequence_element",
    "sequence_elements_float",
    "sequence_to_circle",
    "to_kernel",
]
