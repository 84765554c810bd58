"""Spin structures as quadratic forms: Arf invariants and orbit counts,
the spin dimension formula, and the three-summand decomposition at levels
r = 4l + 2.

Run:  python demos/06_spin_decomposition.py
"""
from tljhecke import arf, orbit_counts, reducibility_report, spin_dims, verlinde_dim
from tljhecke.spin import all_forms, flat_parity, flat_structure_indices

print("== Arf invariant orbit counts ==")
print("  g   even  odd   (enumerated over all 4^g forms)")
for g in range(1, 6):
    even, odd = orbit_counts(g)
    n0 = sum(1 for q in all_forms(g) if arf(q) == 0)
    n1 = sum(1 for q in all_forms(g) if arf(q) == 1)
    mark = "ok" if (n0, n1) == (even, odd) else "MISMATCH"
    print(f"  {g}   {even:4d} {odd:4d}   enumeration ({n0}, {n1}) {mark}")

print("\n== spin dimensions, levels with 4 | r+2 ==")
print("  r    g   d^0  d^1   weighted total = dim V")
for r in (2, 6, 10, 14):
    for g in (2, 3):
        d0, d1 = spin_dims(r, g, 0), spin_dims(r, g, 1)
        even, odd = orbit_counts(g)
        total = even * d0 + odd * d1
        print(f"  {r:2d}   {g}   {d0:3d}  {d1:3d}   {total:6d} = {verlinde_dim(r, g)}")

print("\n== the flat structure's spin parity ==")
for g in range(1, 7):
    idx = flat_structure_indices(g)
    print(f"  g = {g}: curve indices {idx} -> parity {flat_parity(g)} "
          f"(= g(g+1)/2 mod 2 = {(g * (g + 1) // 2) % 2})")

print("\n== three invariant summands at r = 4l + 2 ==")
for r in (6, 10):
    for g in (2, 3):
        rep = reducibility_report(r, g)
        print(f"  r = {r:2d}, g = {g}: summands {rep.summands}, "
              f"total {rep.total}, all positive: {rep.reducible_with_three_summands}")
