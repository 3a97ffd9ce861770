"""Named parameter grids with computed-vs-predicted columns.

Each runner is a pure library call returning a GridResult; the CLI only
renders them.  The grids double as the machinery behind the acceptance
checks, so every row carries an explicit pass flag.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .algebra import FieldSpec
from .asext import ExtElement, ExtFieldSpec, ext_as_reduce, minimal_tower_element, tower_jumps
from .genus import BranchPoint, CoverData, contains_progressions, genus_spectrum, rh_genus
from .ramfilt import (
    InertiaShape,
    admissible_check,
    admissible_enumerate,
    lower_to_upper,
    phi,
    psi,
    random_filtration,
    upper_to_lower,
)


@dataclass
class GridResult:
    name: str
    columns: list[str]
    rows: list[dict]
    passed: bool
    summary: str


def _finish(name: str, columns: list[str], rows: list[dict]) -> GridResult:
    ok = sum(1 for r in rows if r["pass"])
    passed = ok == len(rows)
    verdict = "PASS" if passed else "FAIL"
    return GridResult(name, columns, rows, passed, f"{verdict} {ok}/{len(rows)}")


def genus_grid(p: int, jmax: int) -> GridResult:
    """Riemann-Hurwitz pipeline vs the closed form (p-1)(j-1)/2 for one
    wildly ramified point on the line."""
    rows = []
    for j in range(1, jmax + 1):
        if j % p == 0:
            continue
        bp = BranchPoint(InertiaShape(p, 1, 1), (Fraction(j),))
        computed = rh_genus(CoverData(p, 0, (bp,)))
        predicted = (p - 1) * (j - 1) // 2
        rows.append(
            {"p": p, "j": j, "computed": computed, "predicted": predicted,
             "pass": computed == predicted}
        )
    return _finish("genus-grid", ["p", "j", "computed", "predicted", "pass"], rows)


def econd_grid(p: int, jmax: int, smax: int) -> GridResult:
    """Tower jump engine vs the closed forms J = max(ps - j(p-1), (p^2-p+1)j)
    and conductor = max(s, pj)."""
    field = FieldSpec(p)
    rows = []
    for j in range(1, jmax + 1):
        if j % p == 0:
            continue
        ext = ExtFieldSpec(field, j)
        f_min = minimal_tower_element(ext)
        for s in range(j + 1, smax + 1):
            if s % p == 0:
                continue
            F = f_min + ExtElement.x_pow(ext, -s)
            J = ext_as_reduce(F).jump
            J_pred = max(p * s - j * (p - 1), (p * p - p + 1) * j)
            cond = tower_jumps(F)[1]
            cond_pred = max(s, p * j)
            rows.append(
                {"p": p, "j": j, "s": s,
                 "J": J, "J_predicted": J_pred,
                 "conductor": cond, "conductor_predicted": cond_pred,
                 "pass": J == J_pred and cond == cond_pred}
            )
    return _finish(
        "econd-grid",
        ["p", "j", "s", "J", "J_predicted", "conductor", "conductor_predicted", "pass"],
        rows,
    )


def _random_rational(rng: random.Random, lo: int = 0, hi: int = 40) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 12))


def herbrand_roundtrip(count: int = 1000, seed: int = 1, points: int = 10) -> GridResult:
    """phi(psi(c)) = c at random rational points, plus exact inversion of the
    upper/lower jump conversion, on random valid filtrations."""
    rng = random.Random(seed)
    rows = []
    for idx in range(count):
        filt = random_filtration(rng)
        ok = True
        for _ in range(points):
            c = _random_rational(rng)
            if phi(filt, psi(filt, c)) != c or psi(filt, phi(filt, c)) != c:
                ok = False
        lower = upper_to_lower(filt)
        if lower_to_upper(filt.shape, lower) != filt:
            ok = False
        if any(j % filt.shape.p == 0 for j, _ in lower):
            ok = False
        rows.append(
            {"index": idx, "p": filt.shape.p, "e": filt.shape.e, "m": filt.shape.m,
             "breaks": "|".join(str(c) for c, _ in filt.breaks), "pass": ok}
        )
    return _finish(
        "herbrand-roundtrip", ["index", "p", "e", "m", "breaks", "pass"], rows
    )


def brute_force_admissible(p: int, e: int, bound: int) -> list[tuple[int, ...]]:
    """Filter every integer tuple up to the bound with the definition."""
    out = []
    for seq in itertools.product(range(1, bound + 1), repeat=e):
        if admissible_check(list(seq), p):
            out.append(seq)
    return sorted(out)


def admissible_count(p: int, e: int, bound: int) -> GridResult:
    """Recursive enumeration vs the brute-force filter, for every length up
    to e."""
    rows = []
    for length in range(1, e + 1):
        fast = admissible_enumerate(p, length, bound)
        brute = brute_force_admissible(p, length, bound)
        rows.append(
            {"p": p, "e": length, "bound": bound,
             "enumerated": len(fast), "bruteforce": len(brute),
             "pass": list(fast) == list(brute)}
        )
    return _finish(
        "admissible-count", ["p", "e", "bound", "enumerated", "bruteforce", "pass"], rows
    )


def predicted_line_genera(p: int, limit: int) -> set[int]:
    """Enumeration oracle: genera (p-1)(j-1)/2 over conductors prime to p."""
    out = set()
    j = 0
    while True:
        j += 1
        if j % p == 0:
            continue
        g = (p - 1) * (j - 1) // 2
        if g > limit:
            return out
        out.add(g)


def density_check(p: int, gmax: int) -> GridResult:
    """Achieved genus set for a cyclic-p cover of the line vs the predicted
    congruence classes, with the density ratio on an increment-aligned range."""
    spectrum = genus_spectrum(p, p, 1, 1, Fraction(1), 0, 1, gmax)
    achieved = set(spectrum.genera)
    predicted = predicted_line_genera(p, gmax)
    inc = spectrum.increment
    aligned = (gmax // inc) * inc
    count = sum(1 for g in achieved if g < aligned)
    density = Fraction(count, aligned)
    rows = []
    for g in range(0, gmax + 1):
        rows.append(
            {"p": p, "g": g, "achieved": g in achieved, "predicted": g in predicted,
             "pass": (g in achieved) == (g in predicted)}
        )
    rows.append(
        {"p": p, "g": f"density[0,{aligned})", "achieved": str(density),
         "predicted": str(Fraction(2, p)),
         "pass": density == Fraction(2, p) and contains_progressions(spectrum, p)}
    )
    return _finish("density-check", ["p", "g", "achieved", "predicted", "pass"], rows)


GRID_PARAMS = {
    "genus-grid": ("p", "jmax"),
    "econd-grid": ("p", "jmax", "smax"),
    "herbrand-roundtrip": ("count", "seed"),
    "admissible-count": ("p", "e", "bound"),
    "density-check": ("p", "gmax"),
}

GRID_RUNNERS = {
    "genus-grid": genus_grid,
    "econd-grid": econd_grid,
    "herbrand-roundtrip": herbrand_roundtrip,
    "admissible-count": admissible_count,
    "density-check": density_check,
}
