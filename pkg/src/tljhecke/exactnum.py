"""Exact arithmetic kernel: rationals, Laurent polynomials in the formal
variable A, their fraction field, and cyclotomic fields Q(zeta_N).

Everything here is exact; floats appear only in the embedding helpers.
All values are immutable after construction and all operations are pure,
so the module is safe for unrestricted data-parallel use.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import mpmath

# Rational numbers are the stdlib Fraction: reduced, positive denominator,
# arbitrary precision.
Rational = Fraction


class PoleAtRoot(ArithmeticError):
    """A Laurent fraction genuinely has a pole at the requested root of unity."""


class NonMonic(ValueError):
    """Operation requires a monic integer polynomial."""


# --------------------------------------------------------------------------
# integer polynomials (dense, constant term first)

def euler_phi(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


class IntPolynomial:
    """Polynomial with integer coefficients, constant term first.

    Canonical form: no trailing zero coefficients (the zero polynomial has
    an empty coefficient tuple).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, *a):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return IntPolynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return IntPolynomial(out)

    def divmod_monic(self, d: "IntPolynomial") -> tuple["IntPolynomial", "IntPolynomial"]:
        """Quotient and remainder by a monic divisor (stays in Z[x])."""
        if not d.is_monic():
            raise NonMonic("divisor must be monic")
        r = list(self.coeffs)
        dd = d.degree
        q = [0] * max(len(r) - dd, 0)
        for i in range(len(r) - dd - 1, -1, -1):
            c = r[i + dd]
            if c:
                q[i] = c
                for j, dc in enumerate(d.coeffs):
                    r[i + j] -= c * dc
        return IntPolynomial(q), IntPolynomial(r)

    def evaluate(self, x):
        v = 0
        for c in reversed(self.coeffs):
            v = v * x + c
        return v

    def __repr__(self):
        if self.is_zero():
            return "IntPolynomial([0])"
        return f"IntPolynomial({list(self.coeffs)})"


@lru_cache(maxsize=None)
def cyclotomic_poly(N: int) -> IntPolynomial:
    """The N-th cyclotomic polynomial Phi_N, monic of degree phi(N).

    Computed by dividing x^N - 1 by Phi_d for every proper divisor d | N.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    poly = IntPolynomial([-1] + [0] * (N - 1) + [1])
    for d in range(1, N):
        if N % d == 0:
            poly, rem = poly.divmod_monic(cyclotomic_poly(d))
            assert rem.is_zero()
    return poly


def is_cyclotomic(p: IntPolynomial) -> bool:
    """True iff p equals Phi_n for some n.

    Since phi(n) >= sqrt(n/2), only n <= 2 * deg(p)^2 need checking.
    """
    if not p.is_monic():
        raise NonMonic("is_cyclotomic expects a monic polynomial")
    d = p.degree
    if d < 1:
        raise NonMonic("is_cyclotomic expects degree >= 1")
    for n in range(1, 2 * d * d + 1):
        if euler_phi(n) == d and cyclotomic_poly(n) == p:
            return True
    return False


# --------------------------------------------------------------------------
# Laurent polynomials over Q

class LaurentPoly:
    """Laurent polynomial over Q in the variable A.

    ``coeffs[k]`` is the coefficient of A**(low + k).  Canonical form: the
    first and last stored coefficients are nonzero (zero polynomial stores
    an empty tuple with low = 0).
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, low: int, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            object.__setattr__(self, "low", 0)
            object.__setattr__(self, "coeffs", ())
        else:
            object.__setattr__(self, "low", low + start)
            object.__setattr__(self, "coeffs", tuple(cs[start:end]))

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors
    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly(0, ())

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(0, (1,))

    @staticmethod
    def constant(c) -> "LaurentPoly":
        return LaurentPoly(0, (c,))

    @staticmethod
    def monomial(e: int, c=1) -> "LaurentPoly":
        return LaurentPoly(e, (c,))

    @staticmethod
    def from_int_poly(p: IntPolynomial) -> "LaurentPoly":
        return LaurentPoly(0, p.coeffs)

    # -- structure
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def coefficient(self, e: int) -> Fraction:
        if self.is_zero() or not self.low <= e <= self.high:
            return Fraction(0)
        return self.coeffs[e - self.low]

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        return (isinstance(other, LaurentPoly)
                and self.low == other.low and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.low, self.coeffs))

    # -- arithmetic
    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [Fraction(0)] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return LaurentPoly(low, out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.low, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if self.is_zero() or other.is_zero():
            return LaurentPoly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c:
                for j, d in enumerate(other.coeffs):
                    out[i + j] += c * d
        return LaurentPoly(self.low + other.low, out)

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if c == 0:
            return LaurentPoly.zero()
        return LaurentPoly(self.low, tuple(x * c for x in self.coeffs))

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by A**e."""
        return LaurentPoly(self.low + e, self.coeffs)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        result = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under A -> A**-1."""
        return LaurentPoly(-self.high, tuple(reversed(self.coeffs)))

    def divmod(self, d: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Division as ordinary polynomials (after clearing the lows)."""
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        dc = d.coeffs
        dd = len(dc) - 1
        lead = dc[-1]
        q = [Fraction(0)] * max(len(r) - dd, 0)
        for i in range(len(r) - dd - 1, -1, -1):
            c = r[i + dd]
            if c:
                c = c / lead
                q[i] = c
                for j, x in enumerate(dc):
                    r[i + j] -= c * x
        return (LaurentPoly(self.low - d.low, q), LaurentPoly(self.low, r))

    def exact_div(self, d: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod(d)
        if not r.is_zero():
            raise ValueError("polynomial division is not exact")
        return q

    def content(self) -> Fraction:
        """Positive rational content (gcd of numerators / lcm of denominators)."""
        if self.is_zero():
            return Fraction(0)
        num = 0
        den = 1
        for c in self.coeffs:
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive_int_coeffs(self) -> tuple[int, ...]:
        c = self.content()
        return tuple(int(x / c) for x in self.coeffs)

    def evaluate_complex(self, z: complex) -> complex:
        v = 0j
        for c in reversed(self.coeffs):
            v = v * z + c.numerator / c.denominator
        return v * z ** self.low

    def __repr__(self):
        if self.is_zero():
            return "LaurentPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*A^{self.low + i}")
        return "LaurentPoly(" + " + ".join(terms) + ")"


def _int_poly_gcd(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Primitive-PRS gcd of two primitive integer polynomials (dense lists)."""

    def prim(p):
        g = 0
        for c in p:
            g = math.gcd(g, c)
        if g in (0, 1):
            return list(p)
        return [c // g for c in p]

    def trim(p):
        p = list(p)
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(a), trim(b)
    if not a:
        return prim(b)
    if not b:
        return prim(a)
    if len(a) < len(b):
        a, b = b, a
    a, b = prim(a), prim(b)
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lead = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            if r[-1] == 0:
                r.pop()
                continue
            shift_e = len(r) - 1 - db
            c = r[-1]
            r = [x * lead for x in r]
            for j, bc in enumerate(b):
                r[shift_e + j] -= c * bc
            r = trim(r)
        a, b = b, prim(r)
    g = prim(a)
    if g and g[-1] < 0:
        g = [-c for c in g]
    return g


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts (the unit A**k is discarded)."""
    if a.is_zero():
        g = b
    elif b.is_zero():
        g = a
    else:
        g_int = _int_poly_gcd(a.primitive_int_coeffs(), b.primitive_int_coeffs())
        g = LaurentPoly(0, g_int)
    if g.is_zero():
        return g
    return g.shift(-g.low).scale(Fraction(1, 1) / g.coeffs[-1])


class LaurentFraction:
    """Ratio of two Laurent polynomials over Q.

    Canonical form: den is nonzero, monic, has lowest exponent 0, and shares
    no content or polynomial factor with num.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one()
        if den.is_zero():
            raise ZeroDivisionError("LaurentFraction with zero denominator")
        num, den = self._reduce(num, den)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("LaurentFraction is immutable")

    @staticmethod
    def _reduce(num: LaurentPoly, den: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        if num.is_zero():
            return LaurentPoly.zero(), LaurentPoly.one()
        num = num.shift(-den.low)
        den = den.shift(-den.low)
        g = laurent_gcd(num, den)
        if not g.is_zero() and len(g.coeffs) > 1:
            num = num.exact_div(g)
            den = den.exact_div(g)
            num = num.shift(-den.low)
            den = den.shift(-den.low)
        lead = den.coeffs[-1]
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        return num, den

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "LaurentFraction":
        """Trusted constructor: caller guarantees the canonical invariants."""
        self = object.__new__(cls)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        return self

    @staticmethod
    def zero() -> "LaurentFraction":
        return LaurentFraction._raw(LaurentPoly.zero(), LaurentPoly.one())

    @staticmethod
    def one() -> "LaurentFraction":
        return LaurentFraction._raw(LaurentPoly.one(), LaurentPoly.one())

    @staticmethod
    def constant(c) -> "LaurentFraction":
        return LaurentFraction(LaurentPoly.constant(c))

    @staticmethod
    def from_poly(p: LaurentPoly) -> "LaurentFraction":
        return LaurentFraction._raw(p, LaurentPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den == LaurentPoly.one()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentFraction.constant(other)
        elif isinstance(other, LaurentPoly):
            other = LaurentFraction.from_poly(other)
        if not isinstance(other, LaurentFraction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other: "LaurentFraction") -> "LaurentFraction":
        return LaurentFraction(self.num * other.den + other.num * self.den,
                               self.den * other.den)

    def __neg__(self) -> "LaurentFraction":
        return LaurentFraction._raw(-self.num, self.den)

    def __sub__(self, other: "LaurentFraction") -> "LaurentFraction":
        return self + (-other)

    def __mul__(self, other: "LaurentFraction") -> "LaurentFraction":
        return LaurentFraction(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "LaurentFraction") -> "LaurentFraction":
        if other.is_zero():
            raise ZeroDivisionError("division by zero LaurentFraction")
        return LaurentFraction(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int) -> "LaurentFraction":
        if n < 0:
            return LaurentFraction.one() / self ** (-n)
        return LaurentFraction(self.num ** n, self.den ** n)

    def bar(self) -> "LaurentFraction":
        """The image under A -> A**-1."""
        return LaurentFraction(self.num.substitute_inverse(),
                               self.den.substitute_inverse())

    def evaluate_complex(self, z: complex) -> complex:
        return self.num.evaluate_complex(z) / self.den.evaluate_complex(z)

    def __repr__(self):
        if self.is_poly():
            return f"LaurentFraction({self.num!r})"
        return f"LaurentFraction({self.num!r} / {self.den!r})"


# --------------------------------------------------------------------------
# cyclotomic numbers

@lru_cache(maxsize=None)
def _phi_fold_rows(N: int) -> tuple[tuple[int, ...], ...]:
    """Integer vectors of x^t mod Phi_N in the power basis, t = phi..2*phi-2."""
    phi = euler_phi(N)
    base = cyclotomic_poly(N).coeffs
    rows = []
    cur = [-c for c in base[:phi]]
    rows.append(tuple(cur))
    for _ in range(phi - 2):
        nxt = [0] + cur[:-1]
        top = cur[-1]
        if top:
            first = rows[0]
            for i in range(phi):
                nxt[i] += top * first[i]
        rows.append(tuple(nxt))
        cur = nxt
    return tuple(rows)


@lru_cache(maxsize=None)
def _zeta_powers(N: int) -> tuple[tuple[int, ...], ...]:
    """Integer vectors of zeta_N^t in the power basis, t = 0..N-1."""
    phi = euler_phi(N)
    rows = _phi_fold_rows(N)
    out = []
    for t in range(N):
        if t < phi:
            v = [0] * phi
            v[t] = 1
            out.append(tuple(v))
        else:
            # reduce x * previous
            prev = out[-1]
            v = [0] + list(prev[:-1])
            top = prev[-1]
            if top:
                r0 = rows[0]
                for i in range(phi):
                    v[i] += top * r0[i]
            out.append(tuple(v))
    return tuple(out)


def _fold_int_vec(N: int, vec: list[int]) -> list[int]:
    """Reduce an integer coefficient vector of length <= 2*phi-1 mod Phi_N."""
    phi = euler_phi(N)
    if len(vec) <= phi:
        return vec + [0] * (phi - len(vec))
    rows = _phi_fold_rows(N)
    out = list(vec[:phi])
    for t in range(len(vec) - 1, phi - 1, -1):
        c = vec[t]
        if c:
            row = rows[t - phi]
            for i in range(phi):
                out[i] += c * row[i]
    return out


def _vec_content(vec: Iterable[int]) -> int:
    g = 0
    for c in vec:
        g = math.gcd(g, c)
        if g == 1:
            return 1
    return g


class CycNumber:
    """Element of Q(zeta_N) as a rational vector in the power basis mod Phi_N.

    Internally stored as an integer vector over a single positive denominator
    with the content reduced; equality is therefore plain tuple equality.
    """

    __slots__ = ("order", "den", "vec")

    def __init__(self, order: int, coeffs: Iterable, den: int | None = None):
        phi = euler_phi(order)
        if den is None:
            fracs = [Fraction(c) for c in coeffs]
            if len(fracs) != phi:
                raise ValueError(f"need {phi} coefficients for Q(zeta_{order})")
            d = 1
            for f in fracs:
                d = d * f.denominator // math.gcd(d, f.denominator)
            vec = [int(f * d) for f in fracs]
        else:
            vec = [int(c) for c in coeffs]
            if len(vec) != phi:
                raise ValueError(f"need {phi} coefficients for Q(zeta_{order})")
            d = int(den)
        vec, d = self._normalize(vec, d)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "den", d)
        object.__setattr__(self, "vec", tuple(vec))

    def __setattr__(self, *a):
        raise AttributeError("CycNumber is immutable")

    @staticmethod
    def _normalize(vec: list[int], den: int) -> tuple[list[int], int]:
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den, vec = -den, [-c for c in vec]
        if all(c == 0 for c in vec):
            return [0] * len(vec), 1
        g = math.gcd(_vec_content(vec), den)
        if g > 1:
            vec = [c // g for c in vec]
            den //= g
        return vec, den

    @classmethod
    def _raw(cls, order: int, vec: list[int], den: int) -> "CycNumber":
        vec, den = cls._normalize(vec, den)
        self = object.__new__(cls)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "vec", tuple(vec))
        return self

    # -- constructors
    @staticmethod
    def zero(order: int) -> "CycNumber":
        return CycNumber._raw(order, [0] * euler_phi(order), 1)

    @staticmethod
    def one(order: int) -> "CycNumber":
        v = [0] * euler_phi(order)
        v[0] = 1
        return CycNumber._raw(order, v, 1)

    @staticmethod
    def from_rational(order: int, c) -> "CycNumber":
        c = Fraction(c)
        v = [0] * euler_phi(order)
        v[0] = c.numerator
        return CycNumber._raw(order, v, c.denominator)

    @staticmethod
    def zeta(order: int, e: int = 1) -> "CycNumber":
        """zeta_N ** e, reduced into the power basis."""
        return CycNumber._raw(order, list(_zeta_powers(order)[e % order]), 1)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.vec)

    # -- predicates
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.vec)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.vec[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return Fraction(self.vec[0], self.den)

    def is_real(self) -> bool:
        return self == self.conj()

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            if not self.is_rational():
                return False
            return Fraction(self.vec[0], self.den) == other
        if not isinstance(other, CycNumber):
            return NotImplemented
        if self.order != other.order:
            raise ValueError("comparing CycNumbers of different orders")
        return self.den == other.den and self.vec == other.vec

    def __hash__(self):
        return hash((self.order, self.den, self.vec))

    # -- ring operations
    def _coerce(self, other) -> "CycNumber":
        if isinstance(other, CycNumber):
            if other.order != self.order:
                raise ValueError("mixing CycNumbers of different orders")
            return other
        return CycNumber.from_rational(self.order, other)

    def __add__(self, other) -> "CycNumber":
        other = self._coerce(other)
        d1, d2 = self.den, other.den
        g = math.gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        vec = [a * m1 + b * m2 for a, b in zip(self.vec, other.vec)]
        return CycNumber._raw(self.order, vec, d1 * m1)

    __radd__ = __add__

    def __neg__(self) -> "CycNumber":
        return CycNumber._raw(self.order, [-c for c in self.vec], self.den)

    def __sub__(self, other) -> "CycNumber":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycNumber":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycNumber":
        other = self._coerce(other)
        n = len(self.vec)
        conv = [0] * (2 * n - 1)
        for i, a in enumerate(self.vec):
            if a:
                for j, b in enumerate(other.vec):
                    conv[i + j] += a * b
        vec = _fold_int_vec(self.order, conv)
        return CycNumber._raw(self.order, vec, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNumber":
        """Field inverse via the extended Euclidean algorithm mod Phi_N."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero CycNumber")
        if self.is_rational():
            return CycNumber.from_rational(self.order, 1 / self.as_fraction())
        phi_n = cyclotomic_poly(self.order)
        b = [Fraction(c) for c in phi_n.coeffs]
        a = [Fraction(c, self.den) for c in self.vec]
        # extended gcd: find u with u*a == gcd (mod Phi_N)
        r0, r1 = b, a
        s0, s1 = [Fraction(0)], [Fraction(1)]

        def deg(p):
            d = len(p) - 1
            while d >= 0 and p[d] == 0:
                d -= 1
            return d

        def sub_scaled(p, q, c, shift):
            out = list(p) + [Fraction(0)] * max(0, deg(q) + shift + 1 - len(p))
            for i in range(deg(q) + 1):
                out[i + shift] -= c * q[i]
            return out

        while deg(r1) > 0:
            # one full division step r0 = q*r1 + r
            r = list(r0)
            s = list(s0)
            while deg(r) >= deg(r1):
                c = r[deg(r)] / r1[deg(r1)]
                sh = deg(r) - deg(r1)
                r = sub_scaled(r, r1, c, sh)
                s = sub_scaled(s, s1, c, sh)
            r0, r1 = r1, r
            s0, s1 = s1, s
        if deg(r1) < 0:
            raise ZeroDivisionError("element is a zero divisor (not coprime to Phi_N)")
        c = r1[0]
        inv = [x / c for x in s1]
        inv += [Fraction(0)] * (euler_phi(self.order) - len(inv))
        return CycNumber(self.order, inv[:euler_phi(self.order)])

    def __truediv__(self, other) -> "CycNumber":
        other = self._coerce(other)
        if other.is_rational():
            f = other.as_fraction()
            return CycNumber._raw(self.order,
                                  [c * f.denominator for c in self.vec],
                                  self.den * f.numerator)
        return self * other.inverse()

    def __rtruediv__(self, other) -> "CycNumber":
        return self._coerce(other) / self

    def __pow__(self, n: int) -> "CycNumber":
        if n < 0:
            return self.inverse() ** (-n)
        result = CycNumber.one(self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- Galois action
    def galois(self, m: int) -> "CycNumber":
        """Apply the automorphism zeta -> zeta**m (m coprime to the order)."""
        N = self.order
        if math.gcd(m, N) != 1:
            raise ValueError(f"{m} is not coprime to {N}")
        powers = _zeta_powers(N)
        phi = len(self.vec)
        out = [0] * phi
        for j, c in enumerate(self.vec):
            if c:
                row = powers[(j * m) % N]
                for i in range(phi):
                    out[i] += c * row[i]
        return CycNumber._raw(N, out, self.den)

    def conj(self) -> "CycNumber":
        """zeta -> zeta**-1; complex conjugation on the unit circle."""
        return self.galois(self.order - 1)

    def lift(self, order: int) -> "CycNumber":
        """Reinterpret in Q(zeta_order) for a multiple of the current order."""
        if order % self.order != 0:
            raise ValueError("target order must be a multiple")
        step = order // self.order
        powers = _zeta_powers(order)
        phi = euler_phi(order)
        out = [0] * phi
        for j, c in enumerate(self.vec):
            if c:
                row = powers[(j * step) % order]
                for i in range(phi):
                    out[i] += c * row[i]
        return CycNumber._raw(order, out, self.den)

    # -- embeddings
    def embed(self, precision: int = 15) -> complex:
        """Numerical value with zeta_N = exp(2*pi*i/N), error < 10**-precision."""
        if precision <= 15 and abs(self.den) < 2 ** 52 and all(
                abs(c) < 2 ** 52 for c in self.vec):
            N = self.order
            re = im = 0.0
            for j, c in enumerate(self.vec):
                if c:
                    ang = 2.0 * math.pi * j / N
                    re += c * math.cos(ang)
                    im += c * math.sin(ang)
            return complex(re / self.den, im / self.den)
        with mpmath.workdps(precision + 10):
            z = mpmath.mpc(0)
            for j, c in enumerate(self.vec):
                if c:
                    z += c * mpmath.expjpi(mpmath.mpf(2 * j) / self.order)
            z = z / self.den
            return complex(z)

    def embed_mp(self, dps: int) -> "mpmath.mpc":
        with mpmath.workdps(dps):
            z = mpmath.mpc(0)
            for j, c in enumerate(self.vec):
                if c:
                    z += c * mpmath.expjpi(mpmath.mpf(2 * j) / self.order)
            return z / self.den

    def real_sign(self) -> int:
        """Exact sign of the real part of the embedding.

        Fast path: double-precision evaluation with a conservative error
        bound; near-zero cases escalate to rigorous interval arithmetic.
        """
        if self.is_zero():
            return 0
        if self.is_rational():
            f = self.as_fraction()
            return 0 if f == 0 else (1 if f > 0 else -1)
        x = self + self.conj()  # 2*Re(self), real and exact
        if x.is_zero():
            return 0
        if x.is_rational():
            f = x.as_fraction()
            return 1 if f > 0 else -1
        try:
            total = 0.0
            scale = 0.0
            for j, c in enumerate(x.vec):
                if c:
                    cf = float(c)
                    total += cf * math.cos(2.0 * math.pi * j / x.order)
                    scale += abs(cf)
            # per-term error is a few ulp; 1e-12 * scale is a generous bound
            if abs(total) > 1e-12 * scale:
                return 1 if total > 0 else -1
        except OverflowError:
            pass
        for dps in (30, 60, 120, 300):
            with mpmath.workdps(dps):
                iv = mpmath.iv.mpf(0)
                for j, c in enumerate(x.vec):
                    if c:
                        ang = 2 * mpmath.iv.pi * j / x.order
                        iv += c * mpmath.iv.cos(ang)
                if iv > 0:
                    return 1
                if iv < 0:
                    return -1
        raise ArithmeticError("could not certify sign; increase precision ladder")

    def __repr__(self):
        return f"CycNumber(order={self.order}, coeffs={[str(c) for c in self.coeffs]})"


# --------------------------------------------------------------------------
# specialization A -> zeta_N^k

def _laurent_as_fraction_list(p: LaurentPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _phi_multiplicity(coeffs: list[Fraction], N: int) -> tuple[int, list[Fraction]]:
    """Largest t with Phi_N**t dividing the polynomial; returns (t, quotient)."""
    phi_n = cyclotomic_poly(N)
    t = 0
    cur = coeffs
    while True:
        if len(cur) - 1 < phi_n.degree or all(c == 0 for c in cur):
            return t, cur
        q, ok = _divide_by_int_poly(cur, phi_n)
        if not ok:
            return t, cur
        cur = q
        t += 1


def _divide_by_int_poly(coeffs: list[Fraction], d: IntPolynomial) -> tuple[list[Fraction], bool]:
    r = list(coeffs)
    dd = d.degree
    dc = d.coeffs
    n = len(r) - dd
    if n <= 0:
        return [], False
    q = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        c = r[i + dd]
        if c:
            q[i] = c  # monic divisor
            for j, x in enumerate(dc):
                r[i + j] -= c * x
    if any(c != 0 for c in r[:dd]):
        return [], False
    return q, True


def _eval_at_zeta(coeffs: Sequence[Fraction], N: int, k: int, shift: int) -> CycNumber:
    """Evaluate sum coeffs[t] * zeta^(k*(t+shift)) as a CycNumber."""
    powers = _zeta_powers(N)
    phi = euler_phi(N)
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    out = [0] * phi
    for t, c in enumerate(coeffs):
        if c:
            ci = int(c * den)
            row = powers[(k * (t + shift)) % N]
            for i in range(phi):
                out[i] += ci * row[i]
    return CycNumber._raw(N, out, den)


def specialize(f: LaurentFraction, N: int, k: int) -> CycNumber:
    """Substitute A = zeta_N**k into a Laurent fraction.

    Contract: cancel the maximal common power of Phi_N dividing numerator and
    denominator (as ordinary polynomials, before any reduction), then reduce
    both modulo Phi_N and divide in the field.  Raises PoleAtRoot when the
    reduced denominator vanishes.
    """
    if math.gcd(k, N) != 1:
        raise ValueError(f"root exponent {k} not coprime to {N}")
    if f.is_zero():
        return CycNumber.zero(N)
    tn, num_c = _phi_multiplicity(_laurent_as_fraction_list(f.num), N)
    td, den_c = _phi_multiplicity(_laurent_as_fraction_list(f.den), N)
    if td > tn:
        raise PoleAtRoot(f"pole of order {td - tn} at zeta_{N}^{k}")
    if tn > td:
        # the cancelled fraction still carries Phi_N^(tn - td) in the numerator
        return CycNumber.zero(N)
    num_val = _eval_at_zeta(num_c, N, k, f.num.low)
    den_val = _eval_at_zeta(den_c, N, k, f.den.low)
    if den_val.is_zero():
        raise PoleAtRoot(f"denominator vanishes at zeta_{N}^{k}")
    return num_val / den_val


def galois_conj_inv(x: CycNumber) -> CycNumber:
    """The field automorphism zeta -> zeta**-1 (complex conjugation)."""
    return x.conj()


def embed(x: CycNumber, precision: int = 15) -> tuple[float, float]:
    """Real/imaginary pair of the embedding at zeta_N = exp(2*pi*i/N)."""
    z = x.embed(precision)
    return (z.real, z.imag)


# --------------------------------------------------------------------------
# square roots inside the field

def sqrt_in_field(x: CycNumber, max_den: int = 10 ** 12) -> CycNumber | None:
    """A y in Q(zeta_N) with y*y == x and nonnegative real embedding, or None.

    Search is numeric (over the finitely many Galois sign patterns), but any
    candidate is verified exactly, so a returned value is always correct.
    """
    if x.is_zero():
        return CycNumber.zero(x.order)
    N = x.order
    phi = euler_phi(N)
    units = [k for k in range(1, N) if math.gcd(k, N) == 1]
    # representatives of conjugate pairs {k, N-k}
    reps = [k for k in units if k <= N - k]
    import numpy as np

    A = np.zeros((phi, phi), dtype=complex)
    targets = {}
    for row, k in enumerate(units):
        for j in range(phi):
            A[row, j] = cmath.exp(2j * cmath.pi * k * j / N)
    vals = {k: complex(sum((c / x.den) * cmath.exp(2j * cmath.pi * k * j / N)
                           for j, c in enumerate(x.vec))) for k in units}
    roots = {k: cmath.sqrt(vals[k]) for k in reps}
    n_pat = 1 << len(reps)
    for pat in range(n_pat):
        b = np.zeros(phi, dtype=complex)
        for idx, k in enumerate(reps):
            s = roots[k] if not (pat >> idx) & 1 else -roots[k]
            b[units.index(k)] = s
            if N - k != k:
                b[units.index(N - k)] = s.conjugate()
        try:
            sol = np.linalg.solve(A, b)
        except np.linalg.LinAlgError:
            continue
        if np.abs(sol.imag).max() > 1e-6:
            continue
        cand = [Fraction(v).limit_denominator(max_den) for v in sol.real]
        y = CycNumber(N, cand)
        if y * y == x:
            if y.real_sign() < 0:
                y = -y
            return y
    return None


# --------------------------------------------------------------------------
# serialization

def cyc_to_json(x: CycNumber) -> dict:
    z = x.embed()
    return {
        "order": x.order,
        "coeffs": [[c.numerator, c.denominator] for c in x.coeffs],
        "approx": [z.real, z.imag],
    }


def cyc_from_json(d: dict) -> CycNumber:
    return CycNumber(d["order"], [Fraction(n, m) for n, m in d["coeffs"]])


def intpoly_to_json(p: IntPolynomial) -> list[int]:
    return list(p.coeffs)


def intpoly_from_json(coeffs: list[int]) -> IntPolynomial:
    return IntPolynomial(coeffs)
