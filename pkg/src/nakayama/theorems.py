"""Executable statements about self-extensions, and a sweep over many algebras.

Each check takes one algebra and returns a :class:`Verdict`.  A check
whose hypothesis does not apply (not selfinjective, not Gorenstein,
infinite global dimension, ...) is reported as skipped rather than as a
vacuous pass.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable, Iterator

from . import oracle
from .homext import (ext1_via_lemma, ext_dim, ext_dims, has_infinitely_many_selfext,
                     hom_syzygy_dim, is_rigid, nonrigidity_criterion)
from .kupisch import (CYCLIC, KupischSeries, enumerate_series, format_series,
                      is_selfinjective, loewy_length, validate)
from .modrep import (INF, Indecomposable, all_modules, dimension_vector, find_nonrigid_witness,
                     global_dimension, gorenstein, injective_dimension, is_projective,
                     projective_dimension, simple, syzygy, syzygy_orbit)

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
SKIPPED = "skipped"

CLI_NAME = "nakayama"


def _plain(x):
    if isinstance(x, float) and math.isinf(x):
        return "inf"
    if isinstance(x, Indecomposable):
        return str(x)
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    return x


@dataclass(frozen=True)
class Verdict:
    check: str
    algebra: str
    status: str
    reason: str | None = None
    witness: dict | None = None
    replay: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "algebra": self.algebra,
            "status": self.status,
            "reason": self.reason,
            "witness": _plain(self.witness),
            "replay": self.replay,
        }


def _verdict(check, A, status, reason=None, witness=None):
    alg = format_series(A)
    replay = f"{CLI_NAME} check --series {alg} --check {check}"
    return Verdict(check, alg, status, reason, witness, replay)


def check_nonrigidity_criterion(A: KupischSeries,
                                criterion: Callable = nonrigidity_criterion) -> Verdict:
    name = "nonrigidity_criterion"
    mods = all_modules(A)
    for M in mods:
        rigid = is_rigid(A, M)
        if rigid == bool(criterion(A, M)):
            return _verdict(name, A, COUNTEREXAMPLE, "rigidity disagrees with the length criterion",
                            {"module": M, "ext1": ext_dim(A, M, M, 1), "criterion": bool(criterion(A, M))})
    return _verdict(name, A, HOLDS, witness={"modules": len(mods)})


def check_ext1_lemma(A: KupischSeries, use_oracle: bool = False) -> Verdict:
    name = "ext1_lemma"
    mods = all_modules(A)
    pairs = 0
    for N in mods:
        if is_projective(A, N):
            continue
        for M in mods:
            if N.k < M.k:
                continue
            pairs += 1
            via = ext1_via_lemma(A, N, M)
            e1 = ext_dim(A, N, M, 1)
            o1 = oracle.ext_dim_oracle(A, N, M, 1) if use_oracle else e1
            if not via == e1 == o1:
                w = {"source": N, "target": M, "hom_syzygy": via, "ext1": e1}
                if use_oracle:
                    w["oracle_ext1"] = o1
                return _verdict(name, A, COUNTEREXAMPLE, "Ext^1 differs from Hom(Omega N, M)", w)
    return _verdict(name, A, HOLDS, witness={"pairs": pairs, "oracle": use_oracle})


def _nonrigid(A):
    return [M for M in all_modules(A) if not is_rigid(A, M)]


def check_syzygy_preserves_nonrigid(A: KupischSeries) -> Verdict:
    name = "syzygy_preserves_nonrigid"
    bad = _nonrigid(A)
    for M in bad:
        # a non-rigid module is never projective
        W = syzygy(A, M)
        if W is None or is_rigid(A, W):
            return _verdict(name, A, COUNTEREXAMPLE, "syzygy of a non-rigid module is rigid",
                            {"module": M, "syzygy": W})
    return _verdict(name, A, HOLDS, witness={"nonrigid": len(bad)})


def check_nonrigid_infinite_dims(A: KupischSeries) -> Verdict:
    name = "nonrigid_infinite_dims"
    bad = _nonrigid(A)
    for M in bad:
        pd, idim = projective_dimension(A, M), injective_dimension(A, M)
        if pd != INF or idim != INF:
            return _verdict(name, A, COUNTEREXAMPLE, "non-rigid module with finite pd or injdim",
                            {"module": M, "pd": pd, "injdim": idim})
    return _verdict(name, A, HOLDS, witness={"nonrigid": len(bad)})


def check_finite_gldim_rigid(A: KupischSeries) -> Verdict:
    name = "finite_gldim_rigid"
    g = global_dimension(A)
    if g == INF:
        return _verdict(name, A, SKIPPED, "infinite global dimension")
    bad = _nonrigid(A)
    if bad:
        return _verdict(name, A, COUNTEREXAMPLE, "non-rigid module over finite global dimension",
                        {"gldim": g, "module": bad[0]})
    return _verdict(name, A, HOLDS, witness={"gldim": g})


def check_loewy_bounds(A: KupischSeries) -> Verdict:
    name = "loewy_bounds"
    n, L, g = A.n, loewy_length(A), global_dimension(A)
    w = {"n": n, "loewy_length": L, "gldim": g}
    if L < 2 * n and g == INF:
        return _verdict(name, A, SKIPPED, "Loewy length below 2n and infinite global dimension", w)
    if L >= 2 * n:
        M = find_nonrigid_witness(A)
        w["witness_module"] = M
        if M is None or is_rigid(A, M):
            return _verdict(name, A, COUNTEREXAMPLE, "witness M(i, n) is rigid", w)
    if g != INF and L > 2 * n - 1:
        return _verdict(name, A, COUNTEREXAMPLE, "finite global dimension with Loewy length >= 2n", w)
    return _verdict(name, A, HOLDS, witness=w)


def check_selfinjective_all_degrees(A: KupischSeries, horizon: int = 50) -> Verdict:
    name = "selfinjective_all_degrees"
    if not is_selfinjective(A):
        return _verdict(name, A, SKIPPED, "not selfinjective")
    n, w = A.n, A.c[0]
    first = None
    nonrigid = 0
    for M in all_modules(A):
        if is_projective(A, M):
            continue
        if 2 * M.k <= w:
            for l in range(1, 2 * n * w + 1):
                e, h = ext_dim(A, M, M, l), hom_syzygy_dim(A, M, l)
                if e != h:
                    return _verdict(name, A, COUNTEREXAMPLE, "Ext^l differs from Hom(Omega^l M, M)",
                                    {"module": M, "degree": l, "ext": e, "hom_syzygy": h})
        if is_rigid(A, M):
            continue
        nonrigid += 1
        prof = ext_dims(A, M, M, horizon)
        zero = [l for l in range(1, horizon + 1) if prof.dims[l] == 0]
        cert = has_infinitely_many_selfext(A, M)
        if zero or not cert:
            return _verdict(name, A, COUNTEREXAMPLE, "non-rigid module with vanishing self-extension",
                            {"module": M, "zero_degrees": zero[:10], "certificate": cert.to_json()})
        if first is None:
            first = {"module": M, "certificate": cert.to_json()}
    return _verdict(name, A, HOLDS, witness={"horizon": horizon, "nonrigid": nonrigid, "first": first})


def check_gorenstein_infinitely_many(A: KupischSeries) -> Verdict:
    name = "gorenstein_infinitely_many"
    gor = gorenstein(A)
    if not gor.is_gorenstein:
        return _verdict(name, A, SKIPPED, "not Gorenstein",
                        {"right_injdim": gor.right_injdim, "left_injdim": gor.left_injdim})
    bad = _nonrigid(A)
    for M in bad:
        cert = has_infinitely_many_selfext(A, M)
        prof = ext_dims(A, M, M)
        late = [l for l in prof.support if cert.preperiod is not None and l > cert.preperiod]
        if not cert or not late:
            return _verdict(name, A, COUNTEREXAMPLE, "self-extensions vanish eventually",
                            {"module": M, "certificate": cert.to_json(), "support": prof.support})
    return _verdict(name, A, HOLDS, witness={"injdim": gor.right_injdim, "nonrigid": len(bad)})


CHECKS: dict[str, Callable[[KupischSeries], Verdict]] = {
    "nonrigidity_criterion": check_nonrigidity_criterion,
    "ext1_lemma": check_ext1_lemma,
    "syzygy_preserves_nonrigid": check_syzygy_preserves_nonrigid,
    "nonrigid_infinite_dims": check_nonrigid_infinite_dims,
    "finite_gldim_rigid": check_finite_gldim_rigid,
    "loewy_bounds": check_loewy_bounds,
    "selfinjective_all_degrees": check_selfinjective_all_degrees,
    "gorenstein_infinitely_many": check_gorenstein_infinitely_many,
}


def run_check(name: str, A: KupischSeries) -> Verdict:
    return CHECKS[name](A)


def kupisch_223(n: int) -> KupischSeries:
    return validate(CYCLIC, [2] * (n - 1) + [3])


def reproduce_example_223(n: int, use_oracle: bool = True) -> Verdict:
    """Series (2, ..., 2, 3): finite global dimension n, yet Ext^n(S_0, S_0) != 0,
    and a module M(n-1, 2) with Ext^n(M, M) = 0 but Hom(Omega^n M, M) != 0."""
    name = "example_223"
    if n < 2:
        raise ValueError("n must be at least 2")
    A = kupisch_223(n)
    g = global_dimension(A)
    top_pd = [S for S in (simple(A, i) for i in A.vertices()) if projective_dimension(A, S) == n]
    w = {"n": n, "gldim": g, "simples_with_pd_n": top_pd}
    problems = []
    if g != n:
        problems.append("gldim != n")
    if len(top_pd) != 1:
        problems.append("no unique simple of projective dimension n")
    else:
        S = top_pd[0]
        w["ext_n_simple"] = ext_dim(A, S, S, n)
        if w["ext_n_simple"] <= 0:
            problems.append("Ext^n(S, S) = 0")
    M = Indecomposable(n - 1, 2)
    w["module"] = M
    w["dimension_vector"] = dimension_vector(A, M)
    w["ext_n_module"] = ext_dim(A, M, M, n)
    w["hom_syzygy_n_module"] = hom_syzygy_dim(A, M, n)
    if w["dimension_vector"] != [1] + [0] * (n - 2) + [1]:
        problems.append("unexpected dimension vector")
    if w["ext_n_module"] != 0 or w["hom_syzygy_n_module"] != 1:
        problems.append("Ext^n(M, M) / Hom(Omega^n M, M) mismatch")
    if use_oracle:
        o_s = oracle.ext_dim_oracle(A, top_pd[0], top_pd[0], n) if len(top_pd) == 1 else None
        o_m = oracle.ext_dim_oracle(A, M, M, n)
        w["oracle"] = {"ext_n_simple": o_s, "ext_n_module": o_m}
        if o_s != w.get("ext_n_simple") or o_m != w["ext_n_module"]:
            problems.append("oracle disagrees")
    v = _verdict(name, A, COUNTEREXAMPLE if problems else HOLDS, "; ".join(problems) or None, w)
    return Verdict(v.check, v.algebra, v.status, v.reason, v.witness,
                   f"{CLI_NAME} paper --example 1.6 --n {n}")


def reproduce_example_kx3(use_oracle: bool = True) -> Verdict:
    """K[x]/(x^3) with M = A/J^2: Ext^2(M, M) is 1-dimensional, Hom(Omega^2 M, M) is 2-dimensional."""
    name = "example_kx3"
    A = validate(CYCLIC, [3])
    M = Indecomposable(0, 2)
    w = {
        "module": M,
        "ext2": ext_dim(A, M, M, 2),
        "hom_syzygy_2": hom_syzygy_dim(A, M, 2),
        "omega2": syzygy_orbit(A, M).state(2),
    }
    ok = w["ext2"] == 1 and w["hom_syzygy_2"] == 2 and w["omega2"] == M
    if use_oracle:
        o_ext = oracle.ext_dim_oracle(A, M, M, 2)
        o_hom = oracle.hom_dim_oracle(A, M, M)
        w["oracle"] = {"ext2": o_ext, "hom_syzygy_2": o_hom}
        ok = ok and o_ext == 1 and o_hom == 2
    v = _verdict(name, A, HOLDS if ok else COUNTEREXAMPLE, None if ok else "values differ", w)
    return Verdict(v.check, v.algebra, v.status, v.reason, v.witness, f"{CLI_NAME} paper --example 2.2")


# -- survey -----------------------------------------------------------------

def survey_algebras(kind: str, n_range: Iterable[int], L_max: int,
                    dedupe: bool = True) -> list[KupischSeries]:
    return [A for n in n_range for A in enumerate_series(kind, n, L_max, dedupe)]


def _run_all(args) -> list[dict]:
    A, checks, horizon = args
    out = []
    for name in checks:
        if name == "selfinjective_all_degrees":
            v = check_selfinjective_all_degrees(A, horizon)
        else:
            v = CHECKS[name](A)
        out.append(v.to_json())
    return out


def survey(kind: str, n_range: Iterable[int], L_max: int, checks: Iterable[str] | None = None,
           jobs: int = 1, dedupe: bool = True, horizon: int = 50, offset: int = 0) -> Iterator[dict]:
    """Yield verdict records in canonical algebra order, independent of ``jobs``.

    ``offset`` skips that many algebras from the start of the sweep.
    """
    checks = list(CHECKS) if checks is None else list(checks)
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise ValueError(f"unknown checks: {', '.join(unknown)}")
    tasks = [(A, checks, horizon) for A in survey_algebras(kind, n_range, L_max, dedupe)[offset:]]
    if jobs <= 1:
        for t in tasks:
            yield from _run_all(t)
        return
    with Pool(jobs) as pool:
        for chunk in pool.imap(_run_all, tasks, chunksize=4):
            yield from chunk


def summarize(records: Iterable[dict]) -> dict:
    counts = {HOLDS: 0, COUNTEREXAMPLE: 0, SKIPPED: 0}
    per_check: dict[str, dict[str, int]] = {}
    algebras = set()
    total = 0
    for r in records:
        total += 1
        algebras.add(r["algebra"])
        counts[r["status"]] += 1
        pc = per_check.setdefault(r["check"], {HOLDS: 0, COUNTEREXAMPLE: 0, SKIPPED: 0})
        pc[r["status"]] += 1
    return {"summary": True, "algebras": len(algebras), "verdicts": total,
            "counts": counts, "per_check": per_check}
