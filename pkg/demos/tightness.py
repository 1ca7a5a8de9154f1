"""How close do random instances get to the constants of the bounds?

Hill climbing maximizes (claimed-smaller side) / (claimed-larger side).  A
value near 1 means the constant is nearly attained; anything above 1 would
be a counterexample, and the search stops with an error if it finds one.

Run:  python demos/tightness.py     (a few seconds)
"""

from schatten_lab import Case, SearchConfig, Sign, optimize_ratio, sweep

for case in (Case.COR1, Case.COR2):
    for sign in Sign:
        cfg = SearchConfig(case=case, p=4.0, sign=sign, restarts=8, steps=300)
        res = optimize_ratio(cfg)
        print(f"{case.value} p=4 {sign.value:5s}: best ratio {res.best_ratio:.6f} "
              f"(restart {res.best_restart}, {len(res.trace)} improvements)")

# The ratio as a function of p.  At p = 2 the statement is an identity, so
# that point is evaluated once instead of searched.
base = SearchConfig(case=Case.COR2, p=1.0, sign=Sign.PLUS, restarts=4, steps=200)
result = sweep(Case.COR2, [0.5, 1.0, 1.5, 2.0, 3.0, 4.0], base)
print("\nCor2 (plus) across p:")
for row in result.rows:
    note = f"  [{row.note}]" if row.note else ""
    print(f"  p = {row.config.p:<4g} ratio {row.best_ratio:.6f}{note}")
