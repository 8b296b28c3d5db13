"""Ext dimensions from path counting, and which modules have self-extensions.

Run: python3 demos/02_ext_and_rigidity.py
"""
# %%
from nakayama.homext import (ext1_via_lemma, ext_dims, has_infinitely_many_selfext,
                             hom_syzygy_dim, is_rigid, nonrigidity_criterion)
from nakayama.kupisch import validate
from nakayama.modrep import Indecomposable, all_modules

# K[x]/(x^3): Ext between M(0,2) and itself is nonzero in every positive degree.
A = validate("cyclic", [3])
M = Indecomposable(0, 2)
prof = ext_dims(A, M, M, 6)
print("Ext^l(M, M), l = 0..6:", prof.dims, "periodic", (prof.preperiod, prof.period))
print("Ext^2 =", prof.dims[2], " Hom(Omega^2 M, M) =", hom_syzygy_dim(A, M, 2))

# %% Ext^1 has a closed form when the source is at least as long as the target.
B = validate("cyclic", [4, 4])
N, X = Indecomposable(0, 3), Indecomposable(0, 2)
print("closed form", ext1_via_lemma(B, N, X), "resolution", ext_dims(B, N, X, 1).dims[1])

# %% Rigidity is decided by the length alone: n <= k <= c_i - n means non-rigid.
for X in all_modules(B):
    print(f"M({X})  rigid={is_rigid(B, X)}  criterion_nonrigid={nonrigidity_criterion(B, X)}")

# %% A non-rigid module over a selfinjective algebra has self-extensions in every degree.
cert = has_infinitely_many_selfext(B, Indecomposable(0, 2))
print(bool(cert), cert.to_json())
