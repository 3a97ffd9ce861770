"""Ramification filtrations as first-class values.

A Filtration stores the breaks of the upper-numbering filtration of an
inertia group P semidirect mu_m with |P| = p^e: a strictly increasing list
of rational break indices, each with a multiplicity saying how many factors
of p the group order drops just above it.  The Herbrand functions psi/phi
convert between upper and lower numbering; everything is exact rational
arithmetic via fractions.Fraction, never floats.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import _is_prime
from .errors import (
    CongruenceViolation,
    InvalidJump,
    InvalidSubgroup,
    InvariantViolation,
    LengthMismatch,
    NotAdmissible,
    NotComparable,
)


@dataclass(frozen=True)
class InertiaShape:
    """Group-order data of an inertia group: wild part p^e, tame part m.

    The optional a records the order p^a of a central elementary abelian
    subgroup sitting inside the top ramification group; it is caller-chosen
    data, not derived.
    """

    p: int
    e: int
    m: int = 1
    a: int | None = None

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p}")
        if self.e < 0:
            raise ValueError(f"wild exponent must be >= 0, got {self.e}")
        if self.m < 1 or math.gcd(self.m, self.p) != 1:
            raise ValueError(f"tame order {self.m} must be positive and prime to {self.p}")
        if self.a is not None and not 1 <= self.a <= self.e:
            raise ValueError(f"subgroup exponent {self.a} outside [1, {self.e}]")

    @property
    def order(self) -> int:
        return self.m * self.p**self.e

    @property
    def wild_order(self) -> int:
        return self.p**self.e


class Filtration:
    """Upper-numbering break list (sigma_i, l_i) over an InertiaShape."""

    __slots__ = ("shape", "breaks")

    def __init__(self, shape: InertiaShape, breaks):
        bs = tuple((Fraction(c), int(l)) for c, l in breaks)
        prev = Fraction(0)
        for c, l in bs:
            if c <= prev:
                raise ValueError(f"break indices must be positive and strictly increasing")
            if l < 1:
                raise ValueError(f"break multiplicity must be >= 1, got {l}")
            prev = c
        self.shape = shape
        self.breaks = bs

    @property
    def conductor(self) -> Fraction | None:
        """Largest break index, or None for a tame filtration."""
        return self.breaks[-1][0] if self.breaks else None

    def __eq__(self, other):
        if not isinstance(other, Filtration):
            return NotImplemented
        return self.shape == other.shape and self.breaks == other.breaks

    def __hash__(self):
        return hash((self.shape, self.breaks))

    def __repr__(self):
        bs = ", ".join(f"({c}, {l})" for c, l in self.breaks)
        return f"Filtration(p={self.shape.p}, e={self.shape.e}, m={self.shape.m}, breaks=[{bs}])"


def psi(filt: Filtration, c) -> Fraction:
    """Piecewise-linear transition to lower numbering.

    The slope on the segment ending at the i-th break is m times the p-power
    dropped so far, i.e. the index of the break's group in the inertia group.
    """
    c = Fraction(c)
    if c < 0:
        raise ValueError(f"psi argument must be >= 0, got {c}")
    p = filt.shape.p
    total = Fraction(0)
    prev = Fraction(0)
    slope = filt.shape.m
    for sigma, mult in filt.breaks:
        if c <= sigma:
            return total + slope * (c - prev)
        total += slope * (sigma - prev)
        prev = sigma
        slope *= p**mult
    return total + slope * (c - prev)


def phi(filt: Filtration, cprime) -> Fraction:
    """Exact inverse of psi."""
    cprime = Fraction(cprime)
    if cprime < 0:
        raise ValueError(f"phi argument must be >= 0, got {cprime}")
    p = filt.shape.p
    total = Fraction(0)
    prev = Fraction(0)
    slope = filt.shape.m
    for sigma, mult in filt.breaks:
        knot = total + slope * (sigma - prev)
        if cprime <= knot:
            return prev + (cprime - total) / slope
        total = knot
        prev = sigma
        slope *= p**mult
    return prev + (cprime - total) / slope


def upper_to_lower(filt: Filtration) -> list[tuple[int, int]]:
    """Lower jumps (j_i, l_i): j_i = psi(sigma_i), integral and prime to p."""
    p = filt.shape.p
    out = []
    for sigma, mult in filt.breaks:
        j = psi(filt, sigma)
        if j.denominator != 1:
            raise InvariantViolation(f"lower jump {j} at break {sigma} is not integral")
        j = int(j)
        if j % p == 0:
            raise InvariantViolation(f"lower jump {j} at break {sigma} is divisible by {p}")
        out.append((j, mult))
    return out


def lower_to_upper(shape: InertiaShape, lower_breaks) -> Filtration:
    """Rebuild the upper-numbering filtration from lower jumps (j_i, l_i)."""
    p, m = shape.p, shape.m
    sigma = Fraction(0)
    j_prev = 0
    slope = m
    breaks = []
    for j, mult in lower_breaks:
        sigma = sigma + Fraction(j - j_prev, slope)
        breaks.append((sigma, mult))
        j_prev = j
        slope *= p**mult
    return Filtration(shape, breaks)


def validate(filt: Filtration) -> list[str]:
    """Check every filtration invariant; an empty list means valid."""
    violations = []
    shape = filt.shape
    p = shape.p
    mults = sum(l for _, l in filt.breaks)
    if mults != shape.e:
        violations.append(
            f"break multiplicities sum to {mults}, expected e = {shape.e}"
        )
    dropped = 0
    for sigma, mult in filt.breaks:
        # sigma * |I| / |I^sigma| with |I^sigma| = p^(e - dropped so far)
        ratio = sigma * shape.m * p**dropped
        if ratio.denominator != 1:
            violations.append(f"break {sigma}: sigma*|I|/|I^sigma| = {ratio} not an integer")
        j = psi(filt, sigma)
        if j.denominator != 1:
            violations.append(f"break {sigma}: lower jump {j} not an integer")
        elif int(j) % p == 0:
            violations.append(f"break {sigma}: lower jump {j} divisible by {p}")
        dropped += mult
    return violations


def conductor_congruence(p: int, j_e: int, d: int, m: int) -> int:
    """Residue class s_iota in [1, m] that any compatible conductor must hit.

    s_iota is j_e / p^d taken mod m; the division is modular, so p^d need
    not literally divide j_e.
    """
    if m < 1:
        raise ValueError(f"tame order must be positive, got {m}")
    if d < 0:
        raise ValueError(f"exponent d must be >= 0, got {d}")
    if math.gcd(p, m) != 1:
        raise ValueError(f"gcd({p}, {m}) != 1")
    if m == 1:
        return 1
    r = (j_e * pow(pow(p, d, m), -1, m)) % m
    return r if r else m


def action_transform(filt: Filtration, a: int, s: int, s_iota: int | None = None) -> Filtration:
    """Shift the top a-fold piece of the filtration out to the break s/m.

    If s/m does not exceed the conductor the filtration is returned
    unchanged.  Otherwise the top break loses multiplicity a (dropping out
    entirely at zero) and a new break (s/m, a) is appended; the result is
    validated before it is returned.
    """
    shape = filt.shape
    p, m = shape.p, shape.m
    if not filt.breaks:
        raise InvalidSubgroup("tame filtration has no wild part to act on")
    if s < 1 or s % p == 0:
        raise InvalidJump(f"conductor candidate {s} must be positive and prime to {p}")
    top_sigma, top_mult = filt.breaks[-1]
    if a < 1 or a > top_mult:
        raise InvalidSubgroup(
            f"subgroup exponent {a} exceeds the top break multiplicity {top_mult}"
        )
    if m > 1:
        if s_iota is None:
            j_e = upper_to_lower(filt)[-1][0]
            s_iota = conductor_congruence(p, j_e, shape.e - a, m)
        if s % m != s_iota % m:
            raise CongruenceViolation(
                f"conductor {s} is not congruent to {s_iota} mod {m}"
            )
    new_sigma = Fraction(s, m)
    if new_sigma <= top_sigma:
        return filt
    breaks = list(filt.breaks[:-1])
    if top_mult - a > 0:
        breaks.append((top_sigma, top_mult - a))
    breaks.append((new_sigma, a))
    out = Filtration(shape, breaks)
    problems = validate(out)
    if problems:
        raise InvariantViolation("transformed filtration is invalid: " + "; ".join(problems))
    return out


def admissible_check(seq, p: int) -> bool:
    """True iff seq is an admissible upper-jump sequence for a cyclic p-power group.

    Requires p not dividing the first entry, and each next entry either
    exactly p times the previous or larger and prime to p.
    """
    seq = list(seq)
    if any(not isinstance(s, int) or s < 1 for s in seq):
        return False
    if not seq:
        return True
    if seq[0] % p == 0:
        return False
    for prev, nxt in zip(seq, seq[1:]):
        if nxt == p * prev:
            continue
        if nxt > p * prev and nxt % p != 0:
            continue
        return False
    return True


def admissible_enumerate(p: int, e: int, bound: int) -> list[tuple[int, ...]]:
    """All admissible sequences of length e with last entry <= bound, in
    lexicographic order."""
    if e < 1:
        raise ValueError(f"length must be >= 1, got {e}")
    if bound < p ** (e - 1):
        raise ValueError(
            f"bound {bound} is below the minimal final jump {p ** (e - 1)}"
        )
    out: list[tuple[int, ...]] = []

    def extend(prefix: list[int]):
        i = len(prefix)
        if i == e:
            out.append(tuple(prefix))
            return
        room = p ** (e - 1 - i)  # minimal factor still to come after this entry
        if i == 0:
            lo = 1
        else:
            lo = p * prefix[-1]
        for sigma in range(lo, bound + 1):
            if sigma * room > bound:
                break
            if i > 0 and sigma == lo:
                pass  # exact multiple p*prev is always allowed
            elif sigma % p == 0:
                continue
            prefix.append(sigma)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def seq_less(first, second) -> bool:
    """Strict componentwise comparison: first < second in every coordinate."""
    first, second = tuple(first), tuple(second)
    if len(first) != len(second):
        raise LengthMismatch(f"lengths {len(first)} and {len(second)} differ")
    return all(a < b for a, b in zip(first, second))


@dataclass(frozen=True)
class LevelStep:
    """One level of a tower deformation plan.

    `start` is the conductor the level begins with (for level 1 the base
    sequence's first jump, above that the minimal conductor p*sigma'_{i-1}
    of a dominating layer) and `target` the jump it is deformed to.  Equal
    start and target means the minimal layer already realises the target.
    """

    level: int
    start: int
    target: int

    @property
    def deforms(self) -> bool:
        return self.target != self.start


def tower_plan(start_seq, target_seq, p: int) -> list[LevelStep]:
    """Level-by-level deformation plan from one admissible sequence to a
    strictly larger one, following the inductive minimal-dominating-layer
    construction."""
    start_seq, target_seq = tuple(start_seq), tuple(target_seq)
    if not admissible_check(start_seq, p):
        raise NotAdmissible(f"{start_seq} is not admissible for p = {p}")
    if not admissible_check(target_seq, p):
        raise NotAdmissible(f"{target_seq} is not admissible for p = {p}")
    if not seq_less(start_seq, target_seq):
        raise NotComparable(
            f"{target_seq} is not strictly larger than {start_seq} componentwise"
        )
    steps = [LevelStep(1, start_seq[0], target_seq[0])]
    for i in range(1, len(target_seq)):
        minimal = p * target_seq[i - 1]
        target = target_seq[i]
        if minimal > target:
            raise InvariantViolation(
                f"minimal dominating conductor {minimal} exceeds target {target}"
            )
        if minimal < target and target % p == 0:
            raise InvariantViolation(f"strict target {target} divisible by {p}")
        steps.append(LevelStep(i + 1, minimal, target))
    return steps


def random_filtration(
    rng: random.Random,
    p: int | None = None,
    e_max: int = 4,
    m_max: int = 6,
) -> Filtration:
    """Deterministic-in-rng generator of valid filtrations (for sweeps).

    Builds ascending prime-to-p lower jumps with random multiplicities and
    converts them to upper numbering, which makes every invariant hold by
    construction.
    """
    if p is None:
        p = rng.choice([2, 3, 5, 7])
    e = rng.randint(1, e_max)
    m = rng.choice([m for m in range(1, m_max + 1) if math.gcd(m, p) == 1])
    r = rng.randint(1, e)
    cuts = sorted(rng.sample(range(1, e), r - 1)) if r > 1 else []
    bounds = [0] + cuts + [e]
    mults = [b - a for a, b in zip(bounds, bounds[1:])]
    jumps = []
    j = 0
    for _ in range(r):
        j += rng.randint(1, 9)
        while j % p == 0:
            j += 1
        jumps.append(j)
    shape = InertiaShape(p, e, m)
    return lower_to_upper(shape, list(zip(jumps, mults)))


def filtration_to_dict(filt: Filtration) -> dict:
    """JSON-friendly form with rationals as num/den strings."""
    d = {
        "p": filt.shape.p,
        "e": filt.shape.e,
        "m": filt.shape.m,
        "breaks": [{"c": str(c), "mult": l} for c, l in filt.breaks],
    }
    if filt.shape.a is not None:
        d["a"] = filt.shape.a
    return d


def filtration_from_dict(d: dict) -> Filtration:
    try:
        shape = InertiaShape(int(d["p"]), int(d["e"]), int(d.get("m", 1)), d.get("a"))
        breaks = [(Fraction(b["c"]), int(b["mult"])) for b in d["breaks"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"bad filtration object: {exc}") from exc
    return Filtration(shape, breaks)
