"""Exact arithmetic in F_{p^n} and in sparse Laurent polynomials over it.

Field elements are coefficient vectors over F_p in the polynomial basis of a
canonical irreducible modulus, so p-th roots (inverse Frobenius) are exact.
Laurent polynomials are finite maps from integer exponents to nonzero field
elements.  Nothing here touches floating point.

All values are immutable after construction and every operation is a pure
function, so they are safe to share across threads.
"""

from __future__ import annotations

import itertools
import re
from functools import lru_cache

from .errors import FieldMismatch, ParseError


class _Infinity:
    """Valuation of the zero polynomial.  Compares above every integer."""

    __slots__ = ()

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return isinstance(other, _Infinity)

    def __gt__(self, other):
        return not isinstance(other, _Infinity)

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return isinstance(other, _Infinity)

    def __hash__(self):
        return hash("ramforge.INFINITY")

    def __repr__(self):
        return "+inf"


INFINITY = _Infinity()


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mod(num: list[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of num by the monic polynomial den over F_p.

    Coefficients are listed lowest degree first.
    """
    num = [c % p for c in num]
    dn = len(den) - 1
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            for i, d in enumerate(den):
                num[k - dn + i] = (num[k - dn + i] - c * d) % p
    rem = num[:dn]
    rem += [0] * (dn - len(rem))
    return rem


def _is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree up to deg/2."""
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(list(poly), tail + (1,), p)):
                return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree n over F_p.

    Coefficient tuples are compared constant term first, which makes the
    field construction deterministic without external tables.
    """
    for tail in itertools.product(range(p), repeat=n):
        cand = tail + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {n} over F_{p}")


class FieldSpec:
    """The coefficient field F_q with q = p^n, p prime."""

    __slots__ = ("p", "n", "modulus")

    def __init__(self, p: int, n: int = 1):
        if not _is_prime(p):
            raise ValueError(f"characteristic must be prime, got {p}")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        self.p = p
        self.n = n
        self.modulus = canonical_modulus(p, n)

    @property
    def q(self) -> int:
        return self.p**self.n

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.n)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    def scalar(self, c: int) -> "FieldElement":
        """Image of the integer c under Z -> F_p inside F_q."""
        return FieldElement(self, (c % self.p,) + (0,) * (self.n - 1))

    def element(self, coords) -> "FieldElement":
        coords = tuple(int(c) % self.p for c in coords)
        if len(coords) > self.n:
            raise ParseError(
                f"coefficient vector of length {len(coords)} in a degree-{self.n} field"
            )
        return FieldElement(self, coords + (0,) * (self.n - len(coords)))

    def elements(self):
        """Iterate over all q elements (intended for small fields)."""
        for coords in itertools.product(range(self.p), repeat=self.n):
            yield FieldElement(self, coords)

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec) and self.p == other.p and self.n == other.n
        )

    def __hash__(self):
        return hash((self.p, self.n))

    def __repr__(self):
        return f"F_{self.p}" if self.n == 1 else f"F_{self.p}^{self.n}"


class FieldElement:
    """Element of F_{p^n} in the polynomial basis of the canonical modulus."""

    __slots__ = ("spec", "coords")

    def __init__(self, spec: FieldSpec, coords: tuple[int, ...]):
        self.spec = spec
        self.coords = coords

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __bool__(self) -> bool:
        return not self.is_zero

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, int):
            return self.spec.scalar(other)
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"{self.spec} vs {other.spec}")
            return other
        raise TypeError(f"cannot interpret {other!r} as a field element")

    def __add__(self, other):
        other = self._coerce(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a + b) % p for a, b in zip(self.coords, other.coords))
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        p = self.spec.p
        return FieldElement(
            self.spec, tuple((a - b) % p for a, b in zip(self.coords, other.coords))
        )

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.spec.p
        return FieldElement(self.spec, tuple(-a % p for a in self.coords))

    def __mul__(self, other):
        other = self._coerce(other)
        n, p = self.spec.n, self.spec.p
        conv = [0] * (2 * n - 1)
        for i, a in enumerate(self.coords):
            if a:
                for k, b in enumerate(other.coords):
                    conv[i + k] += a * b
        return FieldElement(self.spec, tuple(_poly_mod(conv, self.spec.modulus, p)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        acc = self.spec.one
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def inverse(self) -> "FieldElement":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        return self ** (self.spec.q - 2)

    def frobenius(self) -> "FieldElement":
        return self ** self.spec.p

    def pth_root(self) -> "FieldElement":
        """Inverse Frobenius; exact since x -> x^p is bijective on F_q."""
        return self ** (self.spec.p ** (self.spec.n - 1))

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.spec.scalar(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.coords == other.coords

    def __hash__(self):
        return hash((self.spec.p, self.spec.n, self.coords))

    def __str__(self):
        if self.spec.n == 1:
            return str(self.coords[0])
        return "[" + ",".join(str(c) for c in self.coords) + "]"

    def __repr__(self):
        return f"{self} in {self.spec}"


def pth_root(a: FieldElement) -> FieldElement:
    """Unique b with b^p = a."""
    return a.pth_root()


class LaurentPoly:
    """Finite Laurent polynomial over F_{p^n}, stored sparsely.

    Only the pole part ever matters for ramification, so finite supports
    lose nothing and keep every operation exact.
    """

    __slots__ = ("spec", "terms")

    def __init__(self, spec: FieldSpec, terms=None):
        clean: dict[int, FieldElement] = {}
        for e, c in (terms or {}).items():
            if isinstance(c, int):
                c = spec.scalar(c)
            elif c.spec != spec:
                raise FieldMismatch(f"{spec} vs {c.spec}")
            if not c.is_zero:
                clean[int(e)] = c
        self.spec = spec
        self.terms = clean

    @classmethod
    def zero(cls, spec: FieldSpec) -> "LaurentPoly":
        return cls(spec, {})

    @classmethod
    def x_pow(cls, spec: FieldSpec, e: int, coeff=1) -> "LaurentPoly":
        return cls(spec, {e: coeff})

    @property
    def valuation(self):
        """Minimum exponent with nonzero coefficient; INFINITY for zero."""
        if not self.terms:
            return INFINITY
        return min(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return not self.is_zero

    def __getitem__(self, e: int) -> FieldElement:
        return self.terms.get(e, self.spec.zero)

    def _check(self, other: "LaurentPoly"):
        if not isinstance(other, LaurentPoly):
            raise TypeError(f"expected LaurentPoly, got {other!r}")
        if other.spec != self.spec:
            raise FieldMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return LaurentPoly(self.spec, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LaurentPoly(self.spec, {e: -c for e, c in self.terms.items()})

    def scale(self, c) -> "LaurentPoly":
        if isinstance(c, int):
            c = self.spec.scalar(c)
        return LaurentPoly(self.spec, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        self._check(other)
        out: dict[int, FieldElement] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                prod = c1 * c2
                s = out.get(e)
                out[e] = prod if s is None else s + prod
        return LaurentPoly(self.spec, out)

    def __rmul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of Laurent polynomials are not defined")
        acc = LaurentPoly.x_pow(self.spec, 0)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def frobenius(self) -> "LaurentPoly":
        """p-th power: coefficients to the p, exponents times p."""
        p = self.spec.p
        return LaurentPoly(self.spec, {p * e: c**p for e, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.spec == other.spec and self.terms == other.terms

    def __str__(self):
        return format_laurent(self)

    def __repr__(self):
        return f"<{self} over {self.spec}>"


def valuation(f: LaurentPoly):
    """Minimum stored exponent, or INFINITY for the zero element."""
    return f.valuation


def artin_schreier(h: LaurentPoly) -> LaurentPoly:
    """The additive operator h -> h^p - h."""
    return h.frobenius() - h


_TERM_RE = re.compile(
    r"^(?P<coeff>\[[^\[\]]*\]|\d+)?(?:\*?(?P<x>x)(?:\^(?P<exp>[+-]?\d+))?)?$"
)


def _signed_chunks(s: str):
    chunks = []
    cur: list[str] = []
    depth = 0
    sign = 1
    prev = ""
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced ']' in {s!r}")
        if ch in "+-" and depth == 0:
            if prev.isalnum() or prev == "]":
                chunks.append((sign, "".join(cur)))
                cur = []
                sign = 1 if ch == "+" else -1
                prev = ch
                continue
            if not cur and prev in ("", "+", "-"):
                if ch == "-":
                    sign = -sign
                prev = ch
                continue
        cur.append(ch)
        prev = ch
    if depth:
        raise ParseError(f"unbalanced '[' in {s!r}")
    chunks.append((sign, "".join(cur)))
    return chunks


def _parse_coeff(spec: FieldSpec, text: str) -> FieldElement:
    if text.startswith("["):
        inner = text[1:-1]
        parts = [p for p in inner.split(",") if p != ""]
        try:
            coords = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"bad coefficient vector {text!r}") from None
        return spec.element(coords)
    return spec.scalar(int(text))


def parse_laurent(spec: FieldSpec, text: str) -> LaurentPoly:
    """Parse the `c*x^e` sum grammar, e.g. ``x^-7 + 2*x^-3 + x^2``.

    Whitespace is ignored.  Coefficients over extensions are written as
    polynomial-basis vectors ``[c0,c1,...]``.  Exponents are signed decimal
    integers.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty Laurent polynomial")
    terms: dict[int, FieldElement] = {}
    for sign, chunk in _signed_chunks(s):
        if not chunk:
            raise ParseError(f"empty term in {text!r}")
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and m.group("x") is None):
            raise ParseError(f"bad term {chunk!r} in {text!r}")
        coeff = (
            spec.one if m.group("coeff") is None else _parse_coeff(spec, m.group("coeff"))
        )
        if sign < 0:
            coeff = -coeff
        if m.group("x") is None:
            e = 0
        elif m.group("exp") is None:
            e = 1
        else:
            e = int(m.group("exp"))
        prev = terms.get(e)
        terms[e] = coeff if prev is None else prev + coeff
    return LaurentPoly(spec, terms)


def format_laurent(f: LaurentPoly) -> str:
    """Canonical text form, terms in increasing exponent order."""
    if f.is_zero:
        return "0"
    parts = []
    one = f.spec.one
    for e in sorted(f.terms):
        c = f.terms[e]
        if e == 0:
            parts.append(str(c))
            continue
        xs = "x" if e == 1 else f"x^{e}"
        parts.append(xs if c == one else f"{c}*{xs}")
    return " + ".join(parts)
