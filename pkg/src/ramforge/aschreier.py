"""Artin-Schreier covers y^p - y = f of the punctured formal disk.

The reduction engine repeatedly kills leading pole terms c*x^(-pk) by the
substitution y -> y + pth_root(c)*x^(-k), which changes f by an element of
the image of h -> h^p - h and therefore not the isomorphism class.  The
conductor is the prime-to-p pole order of the reduced right-hand side.

Terms of exponent >= 0 never affect ramification at x = 0 here: over the
algebraically closed field these covers stand in for, every regular part is
in the image of h -> h^p - h.  Conductor extraction therefore reads only the
pole part; the split cover is reported by the distinct UNRAMIFIED marker,
never by 0.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .algebra import INFINITY, FieldSpec, LaurentPoly, artin_schreier
from .errors import (
    FieldMismatch,
    InvalidJump,
    InvariantViolation,
    NotLarger,
    SplitInput,
    ZeroParameter,
)


class _Unramified:
    """Marker for the split (unramified) cover.  Distinct from every integer."""

    __slots__ = ()

    def __eq__(self, other):
        return isinstance(other, _Unramified)

    def __hash__(self):
        return hash("ramforge.UNRAMIFIED")

    def __repr__(self):
        return "unramified"


UNRAMIFIED = _Unramified()


class Connectedness(enum.Enum):
    CONNECTED = "connected"
    POSSIBLY_DISCONNECTED = "possibly-disconnected"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class ASLocal:
    """A cover y^p - y = f at the place x = 0."""

    spec: FieldSpec
    f: LaurentPoly

    def __post_init__(self):
        if self.f.spec != self.spec:
            raise FieldMismatch(f"{self.spec} vs {self.f.spec}")


@dataclass(frozen=True)
class ASReduced:
    """Reduction result: base is in reduced form and differs from the input
    by artin_schreier(substitution) exactly."""

    base: ASLocal
    conductor: "int | _Unramified"
    substitution: LaurentPoly

    @property
    def f_reduced(self) -> LaurentPoly:
        return self.base.f

    @property
    def ramified(self) -> bool:
        return self.conductor is not UNRAMIFIED


def _as_poly(f) -> LaurentPoly:
    return f.f if isinstance(f, ASLocal) else f


def as_reduce(f) -> ASReduced:
    """Reduce f until its valuation is >= 0 or negative and prime to p.

    Total function: each step replaces the leading term c*x^(-pk) by
    pth_root(c)*x^(-k), strictly raising the valuation, so the loop
    terminates.  The accumulated substitution h satisfies
    f - f_reduced = h^p - h, which is checked before returning.
    """
    f = _as_poly(f)
    spec = f.spec
    p = spec.p
    g = f
    h = LaurentPoly.zero(spec)
    while True:
        v = g.valuation
        if v is INFINITY or v >= 0 or v % p != 0:
            break
        step = LaurentPoly.x_pow(spec, v // p, g[v].pth_root())
        g = g - artin_schreier(step)
        h = h + step
        if not g.valuation > v:
            raise InvariantViolation("reduction step failed to raise the valuation")
    if f - g != artin_schreier(h):
        raise InvariantViolation("reduction substitution does not account for the change")
    if v is INFINITY or v >= 0:
        conductor: int | _Unramified = UNRAMIFIED
    else:
        conductor = -v
        if conductor % p == 0:
            raise InvariantViolation(f"reduced conductor {conductor} divisible by {p}")
    return ASReduced(ASLocal(spec, g), conductor, h)


def as_conductor(f):
    """Prime-to-p pole order of the reduced form, or UNRAMIFIED."""
    return as_reduce(f).conductor


def as_genus_affine_line(p: int, j: int) -> int:
    """Genus of the smooth projective model of y^p - y = f(x) with deg f = j."""
    if j < 1 or j % p == 0:
        raise InvalidJump(f"conductor {j} must be positive and prime to {p}")
    num = (p - 1) * (j - 1)
    if num % 2:
        raise InvariantViolation(f"(p-1)(j-1) = {num} is odd")
    return num // 2


def as_deform(f, s: int, t0) -> ASLocal:
    """Add the dominating pole t0*x^(-s); the result has conductor exactly s."""
    f = _as_poly(f)
    spec = f.spec
    if isinstance(t0, int):
        t0 = spec.scalar(t0)
    if s % spec.p == 0 or s < 1:
        raise InvalidJump(f"target conductor {s} must be positive and prime to {spec.p}")
    if t0.is_zero:
        raise ZeroParameter("deformation parameter must be nonzero")
    current = as_conductor(f)
    floor = 0 if current is UNRAMIFIED else current
    if s <= floor:
        raise NotLarger(f"target conductor {s} does not exceed current {current}")
    out = f + LaurentPoly.x_pow(spec, -s, t0)
    if as_conductor(out) != s:
        raise InvariantViolation("deformed cover does not have the target conductor")
    return ASLocal(spec, out)


def action_add(f_phi, f_alpha) -> ASLocal:
    """Group action at equation level: add the right-hand sides."""
    f_phi, f_alpha = _as_poly(f_phi), _as_poly(f_alpha)
    return ASLocal(f_phi.spec, f_phi + f_alpha)


def action_connectedness(f_phi, f_alpha) -> Connectedness:
    """Conservative connectedness check for the acted-on cover.

    Unequal conductors force connectedness.  With equal conductors, losing
    the common leading pole in the reduced sum is necessary (not sufficient)
    for disconnection, so that case is reported as POSSIBLY_DISCONNECTED.
    """
    f_phi, f_alpha = _as_poly(f_phi), _as_poly(f_alpha)
    c1 = as_conductor(f_phi)
    c2 = as_conductor(f_alpha)
    if c1 is UNRAMIFIED or c2 is UNRAMIFIED:
        raise SplitInput("connectedness check requires two ramified covers")
    if c1 != c2:
        return Connectedness.CONNECTED
    c_sum = as_conductor(f_phi + f_alpha)
    if c_sum == c1:
        return Connectedness.CONNECTED
    return Connectedness.POSSIBLY_DISCONNECTED
