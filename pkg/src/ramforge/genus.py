"""Global invariants: ramification divisors, Riemann-Hurwitz genus, genus
increments under conductor deformation, genus spectra, and Kato's
smoothness invariant for families of curve germs.

Genus values are asserted integral at every exit; a non-integral genus is
surfaced as an InvariantViolation naming the data that caused it, since the
formulas assume the branch data comes from an actual cover.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InconsistentInput,
    InvalidJump,
    InvariantViolation,
    NotLarger,
)
from .ramfilt import Filtration, InertiaShape, validate


@dataclass(frozen=True)
class BranchPoint:
    """Inertia shape and upper jumps (listed with multiplicity, ascending)."""

    shape: InertiaShape
    upper_jumps: tuple = ()

    def __post_init__(self):
        jumps = tuple(Fraction(s) for s in self.upper_jumps)
        object.__setattr__(self, "upper_jumps", jumps)
        if len(jumps) != self.shape.e:
            raise ValueError(
                f"{len(jumps)} jumps for wild exponent e = {self.shape.e}"
            )
        if any(s <= 0 for s in jumps):
            raise ValueError("upper jumps must be positive")
        if list(jumps) != sorted(jumps):
            raise ValueError("upper jumps must be ascending")

    def to_filtration(self) -> Filtration:
        breaks = []
        for s in self.upper_jumps:
            if breaks and breaks[-1][0] == s:
                breaks[-1] = (s, breaks[-1][1] + 1)
            else:
                breaks.append((s, 1))
        return Filtration(self.shape, breaks)


@dataclass(frozen=True)
class CoverData:
    """Group order, base genus and branch data of a Galois cover."""

    group_order: int
    g_X: int
    branch: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "branch", tuple(self.branch))
        if self.group_order < 1:
            raise ValueError("group order must be positive")
        if self.g_X < 0:
            raise ValueError("base genus must be >= 0")
        for bp in self.branch:
            if self.group_order % bp.shape.order:
                raise ValueError(
                    f"inertia order {bp.shape.order} does not divide |G| = {self.group_order}"
                )


@dataclass(frozen=True)
class KatoInput:
    """Degrees of the ramification divisors over the generic and special
    fibres, plus the number of points over the singularity in the
    normalization."""

    n: int
    d_K: int
    d_k: int
    m_w: int

    def __post_init__(self):
        if self.n < 1:
            raise InconsistentInput(f"cover degree {self.n} must be >= 1")
        if self.m_w < 1:
            raise InconsistentInput(f"point count {self.m_w} must be >= 1")
        if self.d_K < self.d_k:
            raise InconsistentInput(
                f"generic degree {self.d_K} below special degree {self.d_k}"
            )

    @property
    def delta(self) -> Fraction:
        """Singularity delta-invariant, derived via mu = 2*delta - m_w + 1."""
        return Fraction(self.d_K - self.d_k, 2)


def branch_filtration(bp: BranchPoint) -> Filtration:
    filt = bp.to_filtration()
    problems = validate(filt)
    if problems:
        raise InvariantViolation(
            f"invalid branch point {bp}: " + "; ".join(problems)
        )
    return filt


def ram_divisor_degree(bp: BranchPoint) -> int:
    """Degree of the local ramification divisor:
    |I| - 1 + (p-1) * m * (sigma_1 + p*sigma_2 + ... + p^(e-1)*sigma_e)."""
    branch_filtration(bp)
    shape = bp.shape
    p = shape.p
    acc = Fraction(0)
    for i, sigma in enumerate(bp.upper_jumps):
        acc += p**i * sigma
    deg = shape.order - 1 + (p - 1) * shape.m * acc
    if deg.denominator != 1 or deg < 0:
        raise InvariantViolation(f"ramification degree {deg} at {bp} is not a natural number")
    return int(deg)


def rh_genus(cd: CoverData) -> int:
    """Riemann-Hurwitz genus of the cover, exact."""
    G = cd.group_order
    total = Fraction(2 * cd.g_X - 2) * G
    contributions = []
    for bp in cd.branch:
        deg = ram_divisor_degree(bp)
        contrib = Fraction(G * deg, bp.shape.order)
        contributions.append((bp, contrib))
        total += contrib
    g = (total + 2) / 2
    if g.denominator != 1:
        bad = [bp for bp, c in contributions if c.denominator != 1]
        where = f" (offending branch point: {bad[0]})" if bad else ""
        raise InvariantViolation(f"genus {g} is not an integer{where}")
    if g < 0:
        raise InvariantViolation(f"genus {g} is negative; no such cover exists")
    return int(g)


def genus_increment(group_order: int, p: int, a: int, m: int, sigma, s: int) -> int:
    """Genus gained by moving an a-fold top break from sigma out to s/m:
    |G| * (s/m - sigma) * (1 - p^-a) / 2."""
    sigma = Fraction(sigma)
    if a < 1:
        raise ValueError(f"subgroup exponent {a} must be >= 1")
    if s % p == 0 or s < 1:
        raise InvalidJump(f"conductor {s} must be positive and prime to {p}")
    if s <= m * sigma:
        raise NotLarger(f"conductor {s} does not exceed m*sigma = {m * sigma}")
    delta = group_order * (Fraction(s, m) - sigma) * (1 - Fraction(1, p**a)) / 2
    if delta.denominator != 1 or delta < 0:
        raise InvariantViolation(f"genus increment {delta} is not a natural number")
    return int(delta)


def last_lower_jump_increment(
    p: int, j_e: int, e: int, a: int, m: int, sigma, s: int
) -> int:
    """New last lower jump j_e + p^(e-a) * m * (s/m - sigma); always an
    integer prime to p for data coming from a valid filtration."""
    sigma = Fraction(sigma)
    if not 1 <= a <= e:
        raise ValueError(f"subgroup exponent {a} outside [1, {e}]")
    if s % p == 0 or s < 1:
        raise InvalidJump(f"conductor {s} must be positive and prime to {p}")
    if s <= m * sigma:
        raise NotLarger(f"conductor {s} does not exceed m*sigma = {m * sigma}")
    j = j_e + p ** (e - a) * m * (Fraction(s, m) - sigma)
    if j.denominator != 1:
        raise InvariantViolation(f"new last lower jump {j} is not an integer")
    j = int(j)
    if j % p == 0:
        raise InvariantViolation(f"new last lower jump {j} is divisible by {p}")
    return j


@dataclass(frozen=True)
class SpectrumResult:
    """Achieved genera plus the arithmetic-progression structure.

    `genera` holds everything achieved including the base genus; `deformed`
    only the genera reached by an actual deformation.  The progression
    metadata describes the deformed family (the base genus may sit outside
    those progressions).
    """

    genera: tuple[int, ...]
    deformed: tuple[int, ...]
    increment: int
    residues: tuple[int, ...]


def genus_spectrum(
    group_order: int,
    p: int,
    a: int,
    m: int,
    sigma0,
    g0: int,
    s_iota: int,
    limit: int,
) -> SpectrumResult:
    """All genera achievable from a base cover of genus g0 and conductor
    sigma0 by conductor deformations, up to `limit`.

    Deformed genera are g0 + genus_increment(s) over conductors s congruent
    to s_iota mod m, prime to p and larger than m*sigma0; the base genus
    itself is included since the undeformed cover exists.  The deformed
    values fall into p - 1 arithmetic progressions with the returned
    increment.
    """
    sigma0 = Fraction(sigma0)
    if not 1 <= s_iota <= m:
        raise ValueError(f"s_iota must lie in [1, {m}], got {s_iota}")
    inc = Fraction(p * group_order, 2) * (1 - Fraction(1, p**a))
    if inc.denominator != 1 or inc < 1:
        raise InvariantViolation(
            f"progression increment {inc} is not a positive integer"
        )
    inc = int(inc)
    genera = set()
    deformed = set()
    if 0 <= g0 <= limit:
        genera.add(g0)
    s = s_iota
    while s <= m * sigma0:
        s += m
    while True:
        if s % p != 0:
            g = g0 + genus_increment(group_order, p, a, m, sigma0, s)
            if g > limit:
                break
            deformed.add(g)
        else:
            # the skipped multiple of p still tells us whether to stop
            probe = g0 + group_order * (Fraction(s, m) - sigma0) * (
                1 - Fraction(1, p**a)
            ) / 2
            if probe > limit:
                break
        s += m
    genera |= deformed
    residues = tuple(sorted({g % inc for g in deformed}))
    if len(residues) > p - 1:
        raise InvariantViolation(
            f"deformed genera occupy {len(residues)} residue classes, expected at most {p - 1}"
        )
    return SpectrumResult(
        tuple(sorted(genera)), tuple(sorted(deformed)), inc, residues
    )


def contains_progressions(result: SpectrumResult, p: int) -> bool:
    """Check the deformed family really forms p - 1 gapless arithmetic
    progressions of the stated increment inside the computed window."""
    if len(result.residues) != p - 1:
        return False
    inc = result.increment
    for r in result.residues:
        members = [g for g in result.deformed if g % inc == r]
        if any(y - x != inc for x, y in zip(members, members[1:])):
            return False
    return True


def spectrum_density(group_order: int, p: int, a: int) -> Fraction:
    """Lower bound 2*(p^a - p^(a-1)) / (|G| * (p^a - 1)) on the natural
    density of achieved genera."""
    if a < 1:
        raise ValueError(f"subgroup exponent {a} must be >= 1")
    return Fraction(2 * (p**a - p ** (a - 1)), group_order * (p**a - 1))


def kato_mu(k: KatoInput) -> tuple[int, bool]:
    """Kato's smoothness invariant mu = 1 - m_w + d_K - d_k.

    The special fibre is smooth at the point exactly when the two
    ramification degrees agree and the normalization has a single point
    there; that conjunction is equivalent to mu = 0 for data coming from an
    actual family.  Inputs with mu < 0 cannot occur and are rejected.
    """
    mu = 1 - k.m_w + k.d_K - k.d_k
    if mu < 0:
        raise InconsistentInput(
            f"mu = {mu} < 0; no degeneration has these invariants"
        )
    smooth = k.d_K == k.d_k and k.m_w == 1
    return mu, smooth
