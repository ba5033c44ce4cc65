"""Unitary automorphisms of the set of Hankel operators, acting on each representation.

Every map here sends the data of H to the data of c U H U* for a unitary U
and a constant c > 0, so inertia is preserved. Only dilation has c != 1:
h(t / rho) carries no 1/rho normalization, which scales the spectrum by rho.
The scalar normalizations are chosen so that the maps commute with the
conversions in `representations`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSymbol
from .kernel import HankelKernel, KernelTerm, canonicalize
from .representations import (
    CircleSymbol,
    CircleTerm,
    GeometricTerm,
    LineSymbol,
    LineTerm,
    Representation,
    SequenceRep,
    X,
    convert,
    kernel_to_line_symbol,
    kind_of,
    line_symbol_to_kernel,
)
from .scalars import ONE, ZERO, ComplexScalar, Polynomial, as_scalar, principal_part


def _check_rho(rho) -> ComplexScalar:
    rho = as_scalar(rho)
    if not rho.is_real() or rho.re <= 0:
        raise InvalidSymbol(f"dilation factor must be a positive rational, got {rho}")
    return rho


# ---------------------------------------------------------------- dilation


def dilate_kernel(k: HankelKernel, rho) -> HankelKernel:
    """h(t) -> h(t / rho)."""
    rho = _check_rho(rho)
    inv = rho.inverse()
    return canonicalize(KernelTerm(t.alpha * inv, t.poly.scale_variable(inv)) for t in k.all_terms())


def dilate_line_symbol(phi: LineSymbol, rho) -> LineSymbol:
    """phi(lambda) -> rho phi(rho lambda), the symbol of h(t / rho)."""
    rho = _check_rho(rho)
    terms = []
    for t in phi.terms:
        # rho Q(rho l) / (alpha - i rho l)^(K+1) = rho^-K Q(rho l) / (alpha/rho - i l)^(K+1)
        terms.append(LineTerm(t.alpha / rho, t.Q.scale_variable(rho) * rho ** (-t.K), t.K))
    return LineSymbol(tuple(sorted(terms, key=lambda t: t.alpha.sort_key())))


def _mobius_tau(rho: ComplexScalar) -> ComplexScalar:
    return (rho - 1) / (rho + 1)


def circle_dilation(omega: CircleSymbol, rho) -> CircleSymbol:
    """omega(mu) -> rho (M(mu)/mu) omega(M(mu)), M(mu) = (mu + tau)/(tau mu + 1).

    The weight M(mu)/mu is what the relation phi = -mu omega picks up when
    lambda is rescaled; without it the map would not match the line side.
    """
    rho = _check_rho(rho)
    tau = _mobius_tau(rho)
    if tau.is_zero():
        return omega
    mu_plus_tau = Polynomial([tau, 1])
    one_plus_tau_mu = Polynomial([1, tau])
    poly_part = Polynomial()
    poles: dict[ComplexScalar, CircleTerm] = {}

    def transported(R: Polynomial, K: int) -> Polynomial:
        # (1 + tau mu)^K R(M(mu))
        out = Polynomial()
        for i, r in enumerate(R.coeffs):
            if not r.is_zero():
                out = out + mu_plus_tau ** i * one_plus_tau_mu ** (K - i) * r
        return out

    def add_pole(gamma, R, K):
        if gamma in poles:
            raise InvalidSymbol(f"transported poles collide at {gamma}")
        poles[gamma] = CircleTerm(gamma, R, K)

    R1 = omega.polynomial_part
    if not R1.is_zero():
        K1 = R1.degree
        # rho N1 (mu + tau) / (mu tau^(K1+1) (mu + 1/tau)^(K1+1)): a pole at -1/tau
        N = transported(R1, K1) * mu_plus_tau * rho
        gamma = -tau.inverse()
        add_pole(gamma, principal_part(N, X * tau ** (K1 + 1), gamma, K1 + 1), K1)

    for t in omega.pole_terms:
        N = transported(t.R, t.K) * mu_plus_tau * rho
        denom = 1 - t.gamma * tau
        if denom.is_zero():
            # the pole goes to infinity: rho N (mu + tau) / (mu (tau - 1/tau)^(K+1)), drop the 1/mu part
            N = N / (tau - tau.inverse()) ** (t.K + 1)
            poly_part = poly_part + Polynomial(N.coeffs[1:])
            continue
        gamma = (t.gamma - tau) / denom
        add_pole(gamma, principal_part(N / denom ** (t.K + 1), X, gamma, t.K + 1), t.K)

    return CircleSymbol(poly_part, tuple(poles[g] for g in sorted(poles, key=lambda g: g.sort_key())))


def dilate_sequence(kappa: SequenceRep, rho) -> SequenceRep:
    """No closed form on sequences; transported through the circle symbol."""
    return convert(circle_dilation(convert(kappa, "circle"), rho), "sequence")


# ---------------------------------------------------------------- involution


def involute_line_symbol(phi: LineSymbol) -> LineSymbol:
    """phi(lambda) -> -phi(-1/lambda), renormalized to canonical form.

    With w' = 1/alpha - i lambda, the substitution sends alpha - i lambda to
    alpha w' / (w' - 1/alpha). Constant parts are dropped.
    """
    terms = []
    for t in phi.terms:
        alpha, K = t.alpha, t.K
        alpha_inv = alpha.inverse()
        c = t.expansion()
        new = [ZERO] * (K + 1)  # coefficient of w'^(j - K - 1)
        w_minus = Polynomial([-alpha_inv, 1])
        for j, cj in enumerate(c):
            if cj.is_zero():
                continue
            # -c_j alpha^(j-K-1) w'^(j-K-1) (w' - 1/alpha)^(K+1-j)
            expanded = w_minus ** (K + 1 - j) * (-cj * alpha ** (j - K - 1))
            for i, coef in enumerate(expanded.coeffs):
                e = j - K - 1 + i
                if e < 0:
                    new[e + K + 1] = new[e + K + 1] + coef
        terms.append(LineTerm.from_expansion(alpha_inv, new))
    return LineSymbol(tuple(sorted(terms, key=lambda t: t.alpha.sort_key())))


def involute_kernel(k: HankelKernel) -> HankelKernel:
    return line_symbol_to_kernel(involute_line_symbol(kernel_to_line_symbol(k)))


# ---------------------------------------------------------------- parity


def circle_parity(omega: CircleSymbol) -> CircleSymbol:
    """omega(mu) -> omega(-mu); on the line side this is the involution."""
    poles = []
    for t in omega.pole_terms:
        R = t.R.scale_variable(-1) * (-1) ** (t.K + 1)
        poles.append(CircleTerm(-t.gamma, R, t.K))
    poles.sort(key=lambda t: t.gamma.sort_key())
    return CircleSymbol(omega.polynomial_part.scale_variable(-1), tuple(poles))


def sequence_parity(kappa: SequenceRep) -> SequenceRep:
    """kappa_n -> (-1)^n kappa_n."""
    tau = tuple(x * (-1) ** n for n, x in enumerate(kappa.tau))
    geo = sorted((GeometricTerm(-g.q, g.T) for g in kappa.geometric_terms), key=lambda g: g.q.sort_key())
    return SequenceRep(tau, tuple(geo))


def parity_kernel(k: HankelKernel) -> HankelKernel:
    return convert(sequence_parity(convert(k, "sequence")), "kernel")


# ---------------------------------------------------------------- dispatch


def _dilate(x: Representation, rho):
    kind = kind_of(x)
    if kind == "kernel":
        return dilate_kernel(x, rho)
    if kind == "line":
        return dilate_line_symbol(x, rho)
    if kind == "circle":
        return circle_dilation(x, rho)
    return dilate_sequence(x, rho)


def _involute(x: Representation):
    kind = kind_of(x)
    if kind == "kernel":
        return involute_kernel(x)
    if kind == "line":
        return involute_line_symbol(x)
    if kind == "circle":
        return circle_parity(x)
    return sequence_parity(x)


def _parity(x: Representation):
    kind = kind_of(x)
    if kind == "kernel":
        return parity_kernel(x)
    if kind == "line":
        return involute_line_symbol(x)
    if kind == "circle":
        return circle_parity(x)
    return sequence_parity(x)


@dataclass(frozen=True)
class Automorphism:
    """dilation(rho), involution, parity, or phase(theta).

    Involution and parity are the same map seen from the line and from the
    circle. A phase multiplies H by a unimodular constant; only theta = 1
    keeps a self-adjoint operator self-adjoint with the same inertia, so the
    phase is recorded and otherwise acts as the identity.
    """

    kind: str
    rho: ComplexScalar = ONE
    theta: ComplexScalar = ONE

    def __post_init__(self):
        if self.kind not in ("dilation", "involution", "parity", "phase"):
            raise ValueError(f"unknown automorphism {self.kind!r}")
        object.__setattr__(self, "rho", _check_rho(self.rho))
        object.__setattr__(self, "theta", as_scalar(self.theta))
        if self.theta.abs2() != 1:
            raise InvalidSymbol(f"phase must have modulus one, got {self.theta}")

    @classmethod
    def parse(cls, op: str) -> "Automorphism":
        """'dilate:3/2', 'involute' or 'parity'."""
        name, _, arg = op.partition(":")
        if name in ("dilate", "dilation"):
            if not arg:
                raise ValueError("dilation needs a factor, e.g. dilate:3/2")
            return cls("dilation", rho=as_scalar(Fraction(arg)))
        if name in ("involute", "involution"):
            return cls("involution")
        if name == "parity":
            return cls("parity")
        if name == "phase":
            return cls("phase")
        raise ValueError(f"unknown transform {op!r}")

    def apply(self, x: Representation) -> Representation:
        if self.kind == "dilation":
            return _dilate(x, self.rho)
        if self.kind == "involution":
            return _involute(x)
        if self.kind == "parity":
            return _parity(x)
        return x


__all__ = [
    "Automorphism",
    "circle_dilation",
    "circle_parity",
    "dilate_kernel",
    "dilate_line_symbol",
    "dilate_sequence",
    "involute_kernel",
    "involute_line_symbol",
    "parity_kernel",
    "sequence_parity",
]
