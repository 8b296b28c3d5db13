"""Sweeping every small Nakayama algebra through the theorem checks.

Run: python3 demos/04_survey.py
The CLI equivalent is `nakayama survey --kind cyclic --n 1..4 --max-loewy 12`.
"""
# %%
from collections import Counter

from nakayama.kupisch import validate
from nakayama.theorems import (CHECKS, check_nonrigidity_criterion, reproduce_example_223,
                               summarize, survey)

records = list(survey("cyclic", range(1, 5), 12))
summary = summarize(records)
print(summary["algebras"], "algebras,", summary["counts"])
for name in CHECKS:
    print(f"  {name:28s} {summary['per_check'][name]}")

# %% Skips are explained, e.g. the finite-global-dimension check on a selfinjective algebra.
print(Counter(r["reason"] for r in records if r["check"] == "finite_gldim_rigid" and r["status"] == "skipped"))

# %% The harness does catch a wrong statement: shift the criterion's upper bound by one.
bad = check_nonrigidity_criterion(validate("cyclic", [4, 4]),
                                  criterion=lambda A, M: A.n <= M.k <= A.c[M.i] - A.n + 1)
print(bad.status, bad.witness, "\n  replay:", bad.replay)

# %% The family with global dimension n.
for n in (2, 3, 6):
    v = reproduce_example_223(n, use_oracle=n < 6)
    print(n, v.status, v.witness["gldim"])
