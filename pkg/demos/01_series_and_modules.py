"""Kupisch series, indecomposable modules and their syzygies.

Run: python3 demos/01_series_and_modules.py
"""
# %% A Nakayama algebra is pinned down by its Kupisch series.
from nakayama.errors import InvalidSeries
from nakayama.kupisch import enumerate_series, loewy_length, opposite, validate
from nakayama.modrep import (all_modules, dimension_vector, global_dimension, gorenstein,
                             projective_dimension, syzygy, syzygy_orbit)

A = validate("cyclic", [2, 3])
print(A, "Loewy length", loewy_length(A), "opposite", opposite(A))

try:
    validate("cyclic", [4, 2])
except InvalidSeries as exc:
    print("rejected:", exc)

# %% Every indecomposable is uniserial, written M(i, k) = top S_i, length k.
for M in all_modules(A):
    print(f"M({M})  dims={dimension_vector(A, M)}  Omega={syzygy(A, M)}  pd={projective_dimension(A, M)}")

# %% Syzygy orbits either hit a projective or settle into a cycle.
B = validate("cyclic", [3, 3])
orb = syzygy_orbit(B, all_modules(B)[0])
print(B, "orbit", [str(s) for s in orb.states], "preperiod", orb.preperiod, "period", orb.period)

# %% Global dimension and Gorenstein data.
for c in ([2, 3], [2, 2, 3], [2, 3, 3], [4, 4]):
    C = validate("cyclic", c)
    print(C, "gldim", global_dimension(C), gorenstein(C))

# %% How many cyclic series with three vertices and Loewy length at most 5, up to rotation?
print(sum(1 for _ in enumerate_series("cyclic", 3, 5, dedupe_rotations=True)))
