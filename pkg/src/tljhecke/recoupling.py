"""Temperley-Lieb-Jones recoupling coefficients at level r.

Every recoupling quantity is computed first in the fraction field of
Q[A, A^-1] (quantum factorials cancel at the polynomial level) and only
then specialized to a root of unity; the specialized values are memoized
per TheoryParams.  Caches are write-once per key and idempotent, so
concurrent fills are safe.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .exactnum import (
    CycNumber,
    LaurentFraction,
    LaurentPoly,
    PoleAtRoot,
    cyclotomic_poly,
    specialize,
    sqrt_in_field,
)

Color = int


class NotAdmissible(ValueError):
    """A colored vertex violates the parity/triangle/level constraints."""


class NotInteger(ArithmeticError):
    """An exact evaluation that must be integral failed to be (bug signal)."""


def _cache_size() -> int | None:
    raw = os.environ.get("TLJHECKE_CACHE")
    if raw:
        try:
            return int(raw)
        except ValueError:
            pass
    return None


# --------------------------------------------------------------------------
# theory parameters

def unitary_root_exponent(r: int) -> int:
    """Exponent k with zeta_N^k = +-i * exp(+-i*pi/(2p)), a primitive N-th root.

    The sign pattern depends on p mod 4; every choice gives the same positive
    loop values, and the chosen one matches the golden matrices.
    """
    p = r + 2
    if r % 2 == 0:
        return p + 1  # zeta_{4p}^{p+1} = i*exp(i*pi/(2p))
    if p % 4 == 1:
        return (p + 1) // 2  # zeta_{2p}^{(p+1)/2} = i*exp(i*pi/(2p))
    return 2 * p - (p - 1) // 2  # zeta_{2p}^{-(p-1)/2} = -i*exp(i*pi/(2p))


@dataclass(frozen=True)
class TheoryParams:
    """Level r, the root order N, and the exponent selecting A = zeta_N^k.

    The acceptance suite exercises r = 1 (the one-color theory), so levels
    down to 1 are accepted.  twist_exponent selects the implemented twist
    theta_i = (-1)^i A^(i(i+2)) ("plus", default, pinned by the golden
    matrices) or the variant with exponent i(i-2) ("minus").
    """

    level: int
    root_exponent: int = 0  # 0 means: use the unitary default
    twist_exponent: str = "plus"

    def __post_init__(self):
        if self.level < 1:
            raise ValueError("level must be >= 1")
        if self.twist_exponent not in ("plus", "minus"):
            raise ValueError("twist_exponent must be 'plus' or 'minus'")
        if self.root_exponent == 0:
            object.__setattr__(self, "root_exponent", unitary_root_exponent(self.level))
        if math.gcd(self.root_exponent, self.root_order) != 1:
            raise ValueError(
                f"root exponent {self.root_exponent} not coprime to {self.root_order}")

    @property
    def p(self) -> int:
        return self.level + 2

    @property
    def parity(self) -> str:
        return "even" if self.level % 2 == 0 else "odd"

    @property
    def root_order(self) -> int:
        return 4 * self.p if self.level % 2 == 0 else 2 * self.p

    @property
    def is_unitary_root(self) -> bool:
        return self.root_exponent == unitary_root_exponent(self.level)

    def with_root(self, k: int) -> "TheoryParams":
        return replace(self, root_exponent=k % self.root_order)

    def zeta(self, e: int = 1) -> CycNumber:
        return CycNumber.zeta(self.root_order, e)

    def a_value(self) -> CycNumber:
        """The chosen root A = zeta_N^k as a field element."""
        return self.zeta(self.root_exponent)


def color_set(params_or_level) -> tuple[Color, ...]:
    """I_r = {0..r} for even r, {0, 2, .., r-1} for odd r, ascending."""
    r = params_or_level.level if isinstance(params_or_level, TheoryParams) else params_or_level
    if r % 2 == 0:
        return tuple(range(r + 1))
    return tuple(range(0, r, 2))


def admissible(r: int, a: Color, b: Color, c: Color) -> bool:
    """Parity, triangle, and level constraints for a trivalent vertex."""
    return ((a + b + c) % 2 == 0
            and abs(a - b) <= c <= a + b
            and a + b + c <= 2 * r)


def check_admissible(r: int, a: Color, b: Color, c: Color) -> None:
    if not admissible(r, a, b, c):
        raise NotAdmissible(f"vertex ({a},{b},{c}) is not admissible at level {r}")


# --------------------------------------------------------------------------
# quantum integers in factored form
#
# [n] = A^(2-2n) * prod Phi_m(A) over a fixed multiset of m's, so every
# factorial ratio reduces to cyclotomic exponent bookkeeping and no
# polynomial gcd is ever required on recoupling quantities.

@lru_cache(maxsize=None)
def _qint_phi_factors(n: int) -> tuple[int, ...]:
    """Orders m with [n] = A^(2-2n) * prod_m Phi_m(A)."""
    ms: list[int] = []
    for d in range(3, 2 * n + 1):
        if (2 * n) % d == 0:
            if d % 2 == 1:
                ms.extend((d, 2 * d))
            else:
                ms.append(2 * d)
    return tuple(sorted(ms))


@lru_cache(maxsize=None)
def _qfact_factored(n: int) -> tuple[int, dict]:
    """(A-power, {m: exponent}) for [n]! in fully factored form."""
    if n == 0:
        return 0, {}
    apow, phis = _qfact_factored(n - 1)
    phis = dict(phis)
    for m in _qint_phi_factors(n):
        phis[m] = phis.get(m, 0) + 1
    return apow + 2 - 2 * n, phis


class _Factored:
    """sign * A^apow * prod Phi_m(A)^e, the working form of factorial ratios."""

    __slots__ = ("sign", "apow", "phis")

    def __init__(self, sign=1, apow=0, phis=None):
        self.sign = sign
        self.apow = apow
        self.phis = dict(phis or {})

    @staticmethod
    def qfact(n: int) -> "_Factored":
        apow, phis = _qfact_factored(n)
        return _Factored(1, apow, phis)

    def __mul__(self, other: "_Factored") -> "_Factored":
        phis = dict(self.phis)
        for m, e in other.phis.items():
            phis[m] = phis.get(m, 0) + e
            if phis[m] == 0:
                del phis[m]
        return _Factored(self.sign * other.sign, self.apow + other.apow, phis)

    def __truediv__(self, other: "_Factored") -> "_Factored":
        phis = dict(self.phis)
        for m, e in other.phis.items():
            phis[m] = phis.get(m, 0) - e
            if phis[m] == 0:
                del phis[m]
        return _Factored(self.sign * other.sign, self.apow - other.apow, phis)

    def negate(self) -> "_Factored":
        return _Factored(-self.sign, self.apow, self.phis)


@lru_cache(maxsize=None)
def _phi_poly(m: int) -> LaurentPoly:
    return LaurentPoly.from_int_poly(cyclotomic_poly(m))


def _materialize(f: _Factored, extra_num: LaurentPoly | None = None) -> LaurentFraction:
    """Build the canonical LaurentFraction sign*A^apow*extra*prod Phi^e."""
    num = LaurentPoly.constant(f.sign).shift(f.apow)
    if extra_num is not None:
        num = num * extra_num
    den = LaurentPoly.one()
    den_ms: list[tuple[int, int]] = []
    for m, e in sorted(f.phis.items()):
        if e > 0:
            num = num * _phi_poly(m) ** e
        else:
            den_ms.append((m, -e))
    # cancel known cyclotomic factors of the denominator against the numerator
    reduced = []
    for m, e in den_ms:
        pm = _phi_poly(m)
        while e > 0:
            q, rem = num.divmod(pm)
            if not rem.is_zero():
                break
            num = q
            e -= 1
        if e:
            reduced.append((m, e))
            den = den * pm ** e
    # den is monic with nonzero constant term, and shares no factor with num
    return LaurentFraction._raw(num.shift(-den.low), den.shift(-den.low))


# --------------------------------------------------------------------------
# generic-ring recoupling quantities

@lru_cache(maxsize=_cache_size())
def qint(n: int) -> LaurentFraction:
    """The quantum integer [n] = (A^2n - A^-2n)/(A^2 - A^-2)."""
    if n == 0:
        return LaurentFraction.zero()
    if n < 0:
        f = qint(-n)
        return LaurentFraction._raw(-f.num, f.den)
    return _materialize(_Factored.qfact(n) / _Factored.qfact(n - 1))


@lru_cache(maxsize=_cache_size())
def qfact(n: int) -> LaurentFraction:
    """The quantum factorial [n]! = [1][2]..[n]."""
    if n < 0:
        raise ValueError("quantum factorial of a negative integer")
    return _materialize(_Factored.qfact(n))


def delta(i: Color) -> LaurentFraction:
    """Loop value Delta_i = (-1)^i [i+1]."""
    f = qint(i + 1)
    return LaurentFraction._raw(-f.num, f.den) if i % 2 else f


def twist(i: Color, convention: str = "plus") -> LaurentFraction:
    """Twist coefficient theta_i = (-1)^i A^(i(i+2)).

    The golden matrices pin the exponent i(i+2); passing convention="minus"
    selects the variant i(i-2).
    """
    e = i * (i + 2) if convention == "plus" else i * (i - 2)
    sign = -1 if i % 2 else 1
    return LaurentFraction.from_poly(LaurentPoly.monomial(e, sign))


def _theta_factored(a: Color, b: Color, c: Color) -> _Factored:
    x = (a + b - c) // 2
    y = (b + c - a) // 2
    z = (c + a - b) // 2
    f = (_Factored.qfact(x + y + z + 1) * _Factored.qfact(x) * _Factored.qfact(y)
         * _Factored.qfact(z) / (_Factored.qfact(x + y) * _Factored.qfact(y + z)
                                 * _Factored.qfact(z + x)))
    return f.negate() if (x + y + z) % 2 else f


@lru_cache(maxsize=_cache_size())
def _theta_net_cached(a: Color, b: Color, c: Color) -> LaurentFraction:
    return _materialize(_theta_factored(a, b, c))


def theta_net(r: int, a: Color, b: Color, c: Color) -> LaurentFraction:
    """Evaluation of the theta graph with edge colors a, b, c."""
    check_admissible(r, a, b, c)
    return _theta_net_cached(a, b, c)


def _tet_data(A: Color, B: Color, E: Color, C: Color, D: Color, F: Color):
    """Vertex half-sums and square half-sums of the labeled tetrahedron.

    Vertices: (A,B,E), (B,C,F), (C,D,E), (A,D,F); opposite edge pairs
    (A,C), (B,D), (E,F).
    """
    av = ((A + B + E) // 2, (B + C + F) // 2, (C + D + E) // 2, (A + D + F) // 2)
    bv = ((B + D + E + F) // 2, (A + C + E + F) // 2, (A + B + C + D) // 2)
    return av, bv


def tet_vertices(A, B, E, C, D, F):
    return ((A, B, E), (B, C, F), (C, D, E), (A, D, F))


@lru_cache(maxsize=_cache_size())
def _tet_cached(A, B, E, C, D, F) -> LaurentFraction:
    av, bv = _tet_data(A, B, E, C, D, F)
    pref = _Factored()
    for bj in bv:
        for ai in av:
            pref = pref * _Factored.qfact(bj - ai)
    for x in (A, B, E, C, D, F):
        pref = pref / _Factored.qfact(x)
    terms = []
    for s in range(max(av), min(bv) + 1):
        t = _Factored.qfact(s + 1)
        if s % 2:
            t = t.negate()
        for ai in av:
            t = t / _Factored.qfact(s - ai)
        for bj in bv:
            t = t / _Factored.qfact(bj - s)
        terms.append(pref * t)
    # factor out the exponent-wise minimum so each term materializes as a
    # polynomial and the sum collapses into a single numerator
    all_ms = set()
    for t in terms:
        all_ms.update(t.phis)
    common = _Factored(1, min(t.apow for t in terms),
                       {m: e for m, e in
                        ((m, min(t.phis.get(m, 0) for t in terms)) for m in all_ms)
                        if e != 0})
    sum_poly = LaurentPoly.zero()
    for t in terms:
        rest = t / common
        assert all(e >= 0 for e in rest.phis.values())
        poly = LaurentPoly.constant(rest.sign).shift(rest.apow)
        for m, e in rest.phis.items():
            poly = poly * _phi_poly(m) ** e
        sum_poly = sum_poly + poly
    return _materialize(common, sum_poly)


def tet(r: int, A: Color, B: Color, E: Color, C: Color, D: Color, F: Color) -> LaurentFraction:
    """Tetrahedral net with vertices (A,B,E), (B,C,F), (C,D,E), (A,D,F)."""
    for v in tet_vertices(A, B, E, C, D, F):
        check_admissible(r, *v)
    return _tet_cached(A, B, E, C, D, F)


def sixj(r: int, i: Color, j: Color, k: Color, l: Color, m: Color, n: Color) -> LaurentFraction:
    """The 6j symbol {i j k; l m n} in the Kauffman-Lins normalization.

    This is the F-move coefficient taking the tree with internal edge n and
    external legs (i, j, l, m) to the tree with internal edge k:

        {i j k; l m n} = Delta_k Tet(i,j,n,l,m,k) / (Theta(i,m,k) Theta(j,l,k))
    """
    for v in ((i, j, n), (l, m, n), (i, m, k), (j, l, k)):
        check_admissible(r, *v)
    num = delta(k) * tet(r, i, j, n, l, m, k)
    return num / (theta_net(r, i, m, k) * theta_net(r, j, l, k))


# --------------------------------------------------------------------------
# specialized values (memoized per TheoryParams)

@lru_cache(maxsize=_cache_size())
def _phi_value(params: TheoryParams, m: int) -> CycNumber:
    N, k = params.root_order, params.root_exponent
    out = CycNumber.zero(N)
    for t, c in enumerate(cyclotomic_poly(m).coeffs):
        if c:
            out = out + CycNumber.zeta(N, (k * t) % N) * c
    return out


def _factored_value(params: TheoryParams, f: _Factored,
                    extra: LaurentPoly | None = None) -> CycNumber:
    """Specialize a factored quantity at A = zeta_N^k, with Phi_N bookkeeping."""
    N, k = params.root_order, params.root_exponent
    net = f.phis.get(N, 0)
    extra_red = extra
    if extra is not None and net < 0:
        phi_n = LaurentPoly.from_int_poly(cyclotomic_poly(N))
        while net < 0:
            q, rem = extra_red.divmod(phi_n)
            if not rem.is_zero():
                break
            extra_red = q
            net += 1
    if net < 0:
        raise PoleAtRoot(f"pole at zeta_{N}^{k}")
    if net > 0:
        return CycNumber.zero(N)
    val = CycNumber.from_rational(N, f.sign) * CycNumber.zeta(N, (k * f.apow) % N)
    for m, e in f.phis.items():
        if m == N:
            continue
        pv = _phi_value(params, m)
        val = val * (pv ** e if e > 0 else pv.inverse() ** (-e))
    if extra_red is not None:
        acc = CycNumber.zero(N)
        den = 1
        for c in extra_red.coeffs:
            den = den * c.denominator // math.gcd(den, c.denominator)
        for t, c in enumerate(extra_red.coeffs):
            if c:
                acc = acc + CycNumber.zeta(N, (k * (extra_red.low + t)) % N) * int(c * den)
        val = val * acc / den
    return val


@lru_cache(maxsize=_cache_size())
def qint_at(params: TheoryParams, n: int) -> CycNumber:
    return specialize(qint(n), params.root_order, params.root_exponent)


@lru_cache(maxsize=_cache_size())
def delta_at(params: TheoryParams, i: Color) -> CycNumber:
    v = qint_at(params, i + 1)
    return -v if i % 2 else v


@lru_cache(maxsize=_cache_size())
def delta_inv_at(params: TheoryParams, i: Color) -> CycNumber:
    return delta_at(params, i).inverse()


@lru_cache(maxsize=_cache_size())
def twist_at(params: TheoryParams, i: Color) -> CycNumber:
    e = i * (i + 2) if params.twist_exponent == "plus" else i * (i - 2)
    v = params.zeta((params.root_exponent * e) % params.root_order)
    return -v if i % 2 else v


@lru_cache(maxsize=_cache_size())
def theta_at(params: TheoryParams, a: Color, b: Color, c: Color) -> CycNumber:
    check_admissible(params.level, a, b, c)
    return _factored_value(params, _theta_factored(a, b, c))


@lru_cache(maxsize=_cache_size())
def theta_inv_at(params: TheoryParams, a: Color, b: Color, c: Color) -> CycNumber:
    return theta_at(params, a, b, c).inverse()


@lru_cache(maxsize=_cache_size())
def tet_at(params: TheoryParams, A, B, E, C, D, F) -> CycNumber:
    for v in tet_vertices(A, B, E, C, D, F):
        check_admissible(params.level, *v)
    N = params.root_order
    av, bv = _tet_data(A, B, E, C, D, F)
    pref = _Factored()
    for bj in bv:
        for ai in av:
            pref = pref * _Factored.qfact(bj - ai)
    for x in (A, B, E, C, D, F):
        pref = pref / _Factored.qfact(x)
    total = CycNumber.zero(N)
    for s in range(max(av), min(bv) + 1):
        t = _Factored.qfact(s + 1)
        if s % 2:
            t = t.negate()
        for ai in av:
            t = t / _Factored.qfact(s - ai)
        for bj in bv:
            t = t / _Factored.qfact(bj - s)
        total = total + _factored_value(params, pref * t)
    return total


@lru_cache(maxsize=_cache_size())
def sixj_at(params: TheoryParams, i, j, k, l, m, n) -> CycNumber:
    r = params.level
    for v in ((i, j, n), (l, m, n), (i, m, k), (j, l, k)):
        check_admissible(r, *v)
    return (delta_at(params, k) * tet_at(params, i, j, n, l, m, k)
            * theta_inv_at(params, i, m, k) * theta_inv_at(params, j, l, k))


# --------------------------------------------------------------------------
# global constants

@dataclass(frozen=True)
class GlobalConstants:
    """P+, P-, D^2 and derived quantities; D and kappa only when they exist
    in Q(zeta_N) (all downstream formulas consume only the squares)."""

    params: TheoryParams
    p_plus: CycNumber
    p_minus: CycNumber
    d_squared: CycNumber
    d: CycNumber | None
    kappa: CycNumber | None
    kappa_squared: CycNumber


@lru_cache(maxsize=_cache_size())
def global_constants(params: TheoryParams) -> GlobalConstants:
    """P+- = sum theta_i^{+-1} Delta_i^2, D^2 = sum Delta_i^2, kappa^2 = P+/P-."""
    N = params.root_order
    p_plus = CycNumber.zero(N)
    p_minus = CycNumber.zero(N)
    d_squared = CycNumber.zero(N)
    for i in color_set(params.level):
        d2 = delta_at(params, i) ** 2
        th = twist_at(params, i)
        p_plus = p_plus + th * d2
        p_minus = p_minus + d2 / th
        d_squared = d_squared + d2
    d = sqrt_in_field(d_squared)
    kappa = (p_plus / d) if d is not None else None
    return GlobalConstants(params, p_plus, p_minus, d_squared, d,
                           kappa, p_plus / p_minus)


# --------------------------------------------------------------------------
# dimensions of the TQFT spaces

@lru_cache(maxsize=None)
def verlinde_dim(r: int, g: int) -> int:
    """dim V_r(Sigma_g), evaluated exactly in Q(zeta_2p).

    Even r: (p/2)^(g-1) * sum_{j=1}^{p-1} (sin(pi j/p))^(2-2g);
    odd r:  (p/4)^(g-1) * sum_{j=1}^{(p-1)/2} (sin(2 pi j/p))^(2-2g).
    """
    if r < 1 or g < 1:
        raise ValueError("need level >= 1 and genus >= 1")
    p = r + 2
    N = 2 * p
    total = CycNumber.zero(N)
    if r % 2 == 0:
        js = [(j, j) for j in range(1, p)]          # sin(pi j / p) -> zeta_2p^j
        scale = Fraction(p, 2) ** (g - 1)
    else:
        js = [(j, 2 * j) for j in range(1, (p - 1) // 2 + 1)]  # sin(2 pi j / p)
        scale = Fraction(p, 4) ** (g - 1)
    for _, e in js:
        z = CycNumber.zeta(N, e)
        sin2 = -((z - z.conj()) ** 2) / 4
        total = total + (sin2.inverse() ** (g - 1) if g > 1 else CycNumber.one(N))
    total = total * CycNumber.from_rational(N, scale)
    if not total.is_rational():
        raise NotInteger(f"verlinde dimension not rational at r={r}, g={g}")
    f = total.as_fraction()
    if f.denominator != 1 or f < 0:
        raise NotInteger(f"verlinde dimension {f} not a nonnegative integer")
    return int(f)
