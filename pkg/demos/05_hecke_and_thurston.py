"""Hecke groups as exact matrix groups and Thurston's construction:
presentation identities, word evaluation with trace classification, and
Perron-Frobenius data of binding multicurves.

Run:  python demos/05_hecke_and_thurston.py
"""
from tljhecke import MulticurveData, classify, eval_word, thurston_rep
from tljhecke.sl2_hecke import (
    hecke_lambda,
    hyperelliptic_image_check,
    verify_presentation,
)

print("== presentation identities ==")
for q in (3, 5, 7):
    rpt = verify_presentation(q)
    status = "all pass" if rpt.all_pass else "FAILED"
    print(f"  q = {q:2d} (lambda = {hecke_lambda(q).embed().real:.6f}): {status}")

print("\n== word evaluation at q = 5 ==")
for word in ("J", "A", "A B^-1", "A B A^-1 J"):
    M = eval_word(word, 5)
    tr = M.trace().embed().real
    print(f"  {word!r:14s} -> trace {tr:+9.6f}  {classify(M)}")

print("\n== the hyperelliptic relation (AB)^(2g+1) = -I ==")
for g in range(1, 8):
    rpt = hyperelliptic_image_check(g)
    print(f"  g = {g}: {'pass' if rpt.all_pass else 'FAIL'}")

print("\n== Thurston's construction ==")
print("type-A paths (unit multiplicities) give exact mu = 2 cos(pi/(2g+1)):")
for g in (1, 2, 3):
    rep = thurston_rep(MulticurveData.path(2 * g))
    print(f"  g = {g}: mu = {rep.mu_float:.12f}  exact in Q(zeta_{rep.mu_exact.order})")

print("\nmultiplicity two on an endpoint reproduces the type-B graph norm:")
base = MulticurveData.path(3)
data = MulticurveData(base.intersections, (2, 1), base.q_mult)
rep = thurston_rep(data)
print(f"  3-vertex path, p = (2,1): mu = {rep.mu_float:.10f} "
      f"(= 2 cos(pi/6)), residual {rep.residual:.1e}")

print("\na generic binding configuration (certified float):")
data = MulticurveData(((1, 1, 0), (0, 1, 2), (2, 0, 1)), (1, 2, 1), (2, 1, 1))
rep = thurston_rep(data)
print(f"  mu = {rep.mu_float:.10f}, residual {rep.residual:.1e} "
      f"({'free regime' if rep.mu_float >= 2 else 'finite-order regime'})")
