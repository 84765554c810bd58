"""Z/2 spin structures as quadratic forms on H_1(Sigma_g; Z/2), Arf
invariants, orbit counts, the spin dimension formula, flat-structure spin
parity, and the reducibility decomposition at levels r = 4l + 2.

All dimension bookkeeping consumes the exact Verlinde dimensions; there is
no floating point anywhere in this module.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Mapping, Sequence

from .recoupling import NotInteger, verlinde_dim


class NotApplicable(ValueError):
    """The requested level/genus lies outside the formula's regime."""


@dataclass(frozen=True)
class QuadraticForm:
    """Quadratic refinement of the mod-2 intersection form, stored by its
    values on the symplectic basis x_1..x_g, y_1..y_g."""

    g: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != 2 * self.g:
            raise ValueError("need 2g basis values")
        if any(v not in (0, 1) for v in self.values):
            raise ValueError("basis values are bits")

    def q_x(self, i: int) -> int:
        return self.values[i]

    def q_y(self, i: int) -> int:
        return self.values[self.g + i]

    def evaluate(self, vec: Sequence[int]) -> int:
        """q on an arbitrary vector via q(a+b) = q(a) + q(b) + a.b."""
        if len(vec) != 2 * self.g:
            raise ValueError("vector length must be 2g")
        acc = 0
        partial = [0] * (2 * self.g)
        for idx, bit in enumerate(vec):
            if bit % 2 == 0:
                continue
            acc = (acc + self.values[idx] + _pairing(partial, _basis_vec(self.g, idx))) % 2
            partial[idx] ^= 1
        return acc


def _basis_vec(g: int, idx: int) -> list[int]:
    v = [0] * (2 * g)
    v[idx] = 1
    return v


def _pairing(u: Sequence[int], v: Sequence[int]) -> int:
    """Standard symplectic pairing: x_i . y_i = 1."""
    g = len(u) // 2
    return sum(u[i] * v[g + i] + u[g + i] * v[i] for i in range(g)) % 2


def arf(q: QuadraticForm) -> int:
    """Arf(q) = sum q(x_i) q(y_i) mod 2."""
    return sum(q.q_x(i) * q.q_y(i) for i in range(q.g)) % 2


def all_forms(g: int) -> Iterable[QuadraticForm]:
    for values in product((0, 1), repeat=2 * g):
        yield QuadraticForm(g, values)


def orbit_counts(g: int) -> tuple[int, int]:
    """(even, odd) counts of spin structures: 2^(g-1)(2^g +- 1)."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    return (2 ** (g - 1) * (2 ** g + 1), 2 ** (g - 1) * (2 ** g - 1))


def spin_dims(r: int, g: int, eps: int) -> int:
    """d_r^eps(g) = 2^(-2g) (d_r(g) + ((r+2)/2)^(g-1) ((-1)^eps 2^g - 1)).

    Defined when 4 divides r + 2; the result must be a nonnegative integer.
    """
    if eps not in (0, 1):
        raise ValueError("parity bit must be 0 or 1")
    p = r + 2
    if p % 4 != 0:
        raise NotApplicable(f"spin decomposition needs 4 | r+2, got r={r}")
    d = verlinde_dim(r, g)
    val = Fraction(d + Fraction(p, 2) ** (g - 1)
                   * ((-1) ** eps * 2 ** g - 1), 4 ** g)
    if val.denominator != 1 or val < 0:
        raise NotInteger(f"spin dimension {val} not a nonnegative integer")
    return int(val)


# --------------------------------------------------------------------------
# the flat structure's spin parity

def flat_spin_parity(index_assignments: Mapping[str, int], g: int) -> int:
    """Arf invariant of the quadratic form q(gamma) = (ind_gamma + 1) mod 2.

    index_assignments maps the symplectic basis curve names "x1".."xg",
    "y1".."yg" to their indices in the flat structure.
    """
    values = []
    for prefix in ("x", "y"):
        for i in range(1, g + 1):
            key = f"{prefix}{i}"
            if key not in index_assignments:
                raise ValueError(f"missing index for basis curve {key}")
            values.append((index_assignments[key] + 1) % 2)
    return arf(QuadraticForm(g, tuple(values)))


def flat_structure_indices(g: int) -> dict[str, int]:
    """Curve indices of the square-tiled flat structure fixed by the two
    multitwists: the x-basis curves are regular (index 0) and the i-th
    y-basis curve has index i - 1."""
    out = {}
    for i in range(1, g + 1):
        out[f"x{i}"] = 0
        out[f"y{i}"] = i - 1
    return out


def flat_parity(g: int) -> int:
    """Spin parity of the invariant flat structure; equals g(g+1)/2 mod 2."""
    return flat_spin_parity(flat_structure_indices(g), g)


# --------------------------------------------------------------------------
# reducibility decomposition

@dataclass(frozen=True)
class ReducibilityReport:
    level: int
    genus: int
    flat_parity: int
    dim_fixed: int       # dim V(Sigma_g, q_omega)
    dim_even_rest: int   # dim (V^0 cap V(q_omega)^perp)
    dim_odd_rest: int    # dim (V^1 cap V(q_omega)^perp)
    total: int

    @property
    def summands(self) -> tuple[int, int, int]:
        return (self.dim_fixed, self.dim_even_rest, self.dim_odd_rest)

    @property
    def reducible_with_three_summands(self) -> bool:
        return all(s > 0 for s in self.summands)

    def to_json(self) -> dict:
        return {"level": self.level, "genus": self.genus,
                "flat_parity": self.flat_parity,
                "summands": list(self.summands), "total": self.total}


def reducibility_report(r: int, g: int) -> ReducibilityReport:
    """Dimensions of the three invariant summands for r = 4l+2, g >= 2:

    the line of the flat structure's spin form q_omega, the rest of the
    even-parity block, and the rest of the odd-parity block.
    """
    if g < 2:
        raise NotApplicable("reducibility statement needs genus >= 2")
    if r % 4 != 2 or r < 6:
        raise NotApplicable(f"reducibility statement needs r = 4l+2 with l >= 1, got r={r}")
    eps = flat_parity(g)
    d0 = spin_dims(r, g, 0)
    d1 = spin_dims(r, g, 1)
    n_even, n_odd = orbit_counts(g)
    dim_fixed = d1 if eps else d0
    dim_even_rest = n_even * d0 - (d0 if eps == 0 else 0)
    dim_odd_rest = n_odd * d1 - (d1 if eps == 1 else 0)
    total = dim_fixed + dim_even_rest + dim_odd_rest
    if total != verlinde_dim(r, g):
        raise NotInteger("summands do not add up to the total dimension (bug)")
    return ReducibilityReport(r, g, eps, dim_fixed, dim_even_rest, dim_odd_rest, total)
