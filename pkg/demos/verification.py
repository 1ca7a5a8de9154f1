"""A small verification campaign over every inequality.

Each case is checked on seeded random instances that satisfy its hypothesis
exactly (to roundoff).  Run:  python demos/verification.py
"""

from collections import defaultdict

from schatten_lab import Case, Sign, Verdict, run_case, verify
from schatten_lab.campaign import make_instance

reports = verify(trials=20, seed=5)
print(f"{len(reports)} reports")

# Tightest relative slack seen per case among strict inequalities.
tightest = defaultdict(lambda: float("inf"))
counts = defaultdict(lambda: defaultdict(int))
for r in reports:
    counts[r.case][r.verdict] += 1
    if r.verdict is Verdict.HOLDS:
        tightest[r.case] = min(tightest[r.case], r.rel_slack)

print(f"\n{'case':26s} {'holds':>6s} {'equal':>6s} {'viol.':>6s} {'n/a':>6s}  min rel slack")
for case in Case:
    c = counts[case]
    slack = tightest[case]
    shown = f"{slack:.3e}" if slack != float("inf") else "-"
    print(f"{case.value:26s} {c[Verdict.HOLDS]:6d} {c[Verdict.EQUALITY_HOLDS]:6d} "
          f"{c[Verdict.VIOLATED]:6d} {c[Verdict.INAPPLICABLE]:6d}  {shown}")

# At p = 2 the signed statements become identities.  Reports are oriented,
# so lhs is always the claimed-smaller side; which expression that is
# switches at p = 2.
t = make_instance(Case.COR2, 3, 4, seed=17)
print("\nCor2 on one sum-zero triple (sign minus):")
for p in (1.0, 2.0, 4.0):
    (r,) = run_case(Case.COR2, t, p, sign=Sign.MINUS)
    print(f"  p = {p}: {r.lhs:10.5f} <= {r.rhs:10.5f}  {r.verdict.value}")
