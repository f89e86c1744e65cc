"""Coset structure of a linear code.

Per-syndrome weight distributions feed everything here: the covering radius
is the largest coset leader weight, complete regularity asks whether cosets
with equal leader weight share one distribution, and uniform packing in the
wide sense asks for rational coefficients beta with
``sum_i beta_i * B_x(i) = 1`` across all cosets, decided by exact rational
elimination.

Two independent engines produce the same table:

* ``primal`` sweeps all q^n vectors, bucketing weights by syndrome;
* ``dual_character`` (characteristic 2 only) expands each coset's spectrum
  from the dual code through an additive-character sum, where every character
  value is exactly +-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional

import numpy as np

from . import _kernels
from .caps import (
    DEFAULT_DUAL_CHAR_CAP,
    DEFAULT_ENUM_CAP,
    DEFAULT_SYNDROME_CAP,
    CapExceeded,
    default_primal_cap,
)
from .code import CodeProfile, LinearCode, bounds_flags, krawtchouk_matrix, _digits_of
from .gf import FieldError
from .linalg import Matrix


class RegularityContradiction(AssertionError):
    """A proven implication between rho, s, CR and UPWS failed: engine bug."""


# ---------------------------------------------------------------------------
# Syndrome plumbing
# ---------------------------------------------------------------------------

def _syndrome_tables(C: LinearCode):
    """(H, syndelta, pow_q): syndelta[i, c, j] = c * H[j, i], base-q weights."""
    H = C.parity_check()
    F = C.field
    q = F.q
    m = H.rows
    syndelta = F.MUL[np.arange(q, dtype=np.int64)[None, :, None], H.array.T[:, None, :]]
    pow_q = q ** np.arange(m, dtype=np.int64)
    return H, syndelta, pow_q


def _vector_state(C: LinearCode, index: int):
    """Digits, syndrome digits, syndrome index and weight of vector #index."""
    F, q, n = C.field, C.q, C.n
    H = C.parity_check()
    digits = _digits_of(index, q, n)
    synd = np.array(H.apply(digits.tolist()), dtype=np.int64)
    sidx = int(synd @ (q ** np.arange(H.rows, dtype=np.int64)))
    return digits, synd, sidx, int((digits != 0).sum())


def syndrome_index(C: LinearCode, v) -> int:
    """Base-q encoded syndrome of a vector."""
    H = C.parity_check()
    synd = H.apply(list(v))
    return int(sum(s * C.q ** j for j, s in enumerate(synd)))


def _representative_solver(C: LinearCode):
    """Returns sidx -> coset representative, via RREF of [H | I]."""
    F = C.field
    H = C.parity_check()
    m, n = H.rows, H.cols
    aug = Matrix(F, np.hstack([H.array, np.eye(m, dtype=np.int64)]))
    R, rank, pivots = aug.rref()
    if rank != m or any(p >= n for p in pivots[:m]):
        raise AssertionError("parity-check matrix is rank deficient")
    E = Matrix(F, R.array[:, n:])

    def rep(sidx: int) -> list[int]:
        svec = _digits_of(sidx, C.q, m).tolist()
        y = E.apply(svec)
        x = [0] * n
        for j, p in enumerate(pivots):
            x[p] = y[j]
        return x

    return rep


def coset_representative(C: LinearCode, sidx: int) -> list[int]:
    return _representative_solver(C)(sidx)


def coset_distribution(C: LinearCode, v, cap: int = DEFAULT_ENUM_CAP) -> tuple[int, ...]:
    """Weight distribution (B_0, ..., B_n) of the coset v + C, by enumeration."""
    from . import _kernels as K

    q, n, k = C.q, C.n, C.k
    total = q ** k
    if total > cap:
        raise CapExceeded(f"coset enumeration of {C.params()}", total, cap)
    F = C.field
    v = np.array(list(v), dtype=np.int64)
    if v.shape != (n,):
        raise ValueError(f"vector length must be {n}")
    rowmult = F.MUL[np.arange(q, dtype=np.int64)[None, :, None], C.G.array[:, None, :]]
    counts = np.zeros(n + 1, dtype=np.int64)
    K.spectrum_sweep(
        q, n, k, F.ADD, F.SUB, rowmult,
        np.zeros(k, dtype=np.int64), v.copy(), int((v != 0).sum()), total, counts,
    )
    assert counts.sum() == total
    return tuple(int(x) for x in counts)


# ---------------------------------------------------------------------------
# Covering radius
# ---------------------------------------------------------------------------

def covering_radius(C: LinearCode, syndrome_cap: int = DEFAULT_SYNDROME_CAP) -> int:
    """Max distance from the ambient space to C.

    Sweeps vectors in nondecreasing weight order, marking first-seen
    syndromes; the weight at which the last syndrome appears is rho.  Also
    caches the full coset-leader-weight array as a side effect.
    """
    if "rho" in C._cache:
        return C._cache["rho"]
    q, n, k = C.q, C.n, C.k
    S = q ** (n - k)
    if S > syndrome_cap:
        raise CapExceeded(f"syndrome coverage of {C.params()}", S, syndrome_cap)
    F = C.field
    H, syndelta, pow_q = _syndrome_tables(C)
    leaders = np.full(S, -1, dtype=np.int64)
    rho = int(_kernels.coverage_sweep(q, n, H.rows, F.ADD, F.SUB, syndelta, pow_q, leaders))
    if rho < 0:
        raise AssertionError("coverage sweep did not reach every syndrome")
    C._cache["rho"] = rho
    C._cache["leaders"] = leaders
    return rho


def coset_leader_weights(C: LinearCode, syndrome_cap: int = DEFAULT_SYNDROME_CAP) -> np.ndarray:
    covering_radius(C, syndrome_cap)
    return C._cache["leaders"]


# ---------------------------------------------------------------------------
# Coset weight distribution engines
# ---------------------------------------------------------------------------

class CosetTable:
    """Per-syndrome weight distributions of all q^(n-k) cosets.

    ``hist[s, i]`` counts the weight-i vectors whose base-q encoded syndrome
    is s; row 0 is the code's own weight distribution.
    """

    def __init__(self, code: LinearCode, H: Matrix, hist: np.ndarray, engine: str,
                 complete: bool = True):
        self.code = code
        self.H = H
        self.hist = hist
        self.engine = engine
        self.complete = complete
        self._leaders: Optional[np.ndarray] = None
        self._groups: Optional[list] = None
        S = code.q ** (code.n - code.k)
        if hist.shape != (S, code.n + 1):
            raise ValueError("histogram shape mismatch")
        if tuple(int(x) for x in hist[0]) != code.weight_distribution():
            raise AssertionError("zero-syndrome row differs from the code spectrum")

    @property
    def leader_weights(self) -> np.ndarray:
        if self._leaders is None:
            self._leaders = np.argmax(self.hist != 0, axis=1).astype(np.int64)
        return self._leaders

    @property
    def rho(self) -> int:
        return int(self.leader_weights.max())

    def groups(self) -> list:
        """(leader_weight, unique_rows, multiplicities, witness_syndromes) per weight."""
        if self._groups is None:
            out = []
            leaders = self.leader_weights
            for w in sorted(set(leaders.tolist())):
                idx = np.flatnonzero(leaders == w)
                rows, first, counts = np.unique(
                    self.hist[idx], axis=0, return_index=True, return_counts=True
                )
                out.append((w, rows, counts, idx[first]))
            self._groups = out
        return self._groups

    def column_sums_ok(self) -> bool:
        """Total weight-i vectors across cosets must be C(n,i)(q-1)^i."""
        n, q = self.code.n, self.code.q
        sums = self.hist.sum(axis=0)
        return all(int(sums[i]) == comb(n, i) * (q - 1) ** i for i in range(n + 1))

    def distinct_truncated(self, upto: int) -> np.ndarray:
        distinct_full = np.vstack([rows for _, rows, _, _ in self.groups()])
        return np.unique(distinct_full[:, : upto + 1], axis=0)

    def summary(self) -> list[dict]:
        return [
            {
                "leader_weight": int(w),
                "cosets": int(counts.sum()),
                "distinct_distributions": len(rows),
            }
            for w, rows, counts, _ in self.groups()
        ]

    def to_json_dict(self) -> dict:
        groups = []
        for w, rows, counts, witnesses in self.groups():
            groups.append({
                "leader_weight": int(w),
                "cosets": int(counts.sum()),
                "distributions": [
                    {
                        "counts": [int(x) for x in row],
                        "multiplicity": int(mult),
                        "witness_syndrome": int(syn),
                    }
                    for row, mult, syn in zip(rows, counts, witnesses)
                ],
            })
        return {
            "engine": self.engine,
            "complete": self.complete,
            "syndromes": int(self.hist.shape[0]),
            "groups": groups,
        }


def _primal_table(C: LinearCode, primal_cap: int, workers: int = 1) -> CosetTable:
    q, n, k = C.q, C.n, C.k
    total = q ** n
    if total > primal_cap:
        raise CapExceeded(f"primal sweep of {C.params()}", total, primal_cap)
    F = C.field
    H, syndelta, pow_q = _syndrome_tables(C)
    m = H.rows
    S = q ** m
    nw = n + 1
    use_xor = F.p == 2
    enc = (syndelta @ pow_q).astype(np.int64) if use_xor else None

    def sweep(start, count, acc):
        digits, synd, sidx, w = _vector_state(C, start)
        if use_xor:
            _kernels.coset_sweep_xor(q, n, nw, enc, digits, sidx, w, count, acc)
        else:
            _kernels.coset_sweep(
                q, n, m, nw, F.ADD, F.SUB, syndelta, pow_q, digits, synd, sidx, w, count, acc
            )

    flat = _kernels.run_partitioned(
        total, q, workers, lambda: np.zeros(S * nw, dtype=np.int64), sweep,
        acc_nbytes=S * nw * 8,
    )
    return CosetTable(C, H, flat.reshape(S, nw), "primal")


def _fold_dot(F, words: np.ndarray, reps: np.ndarray) -> np.ndarray:
    """Field inner products of every rep with every word: (reps, words)."""
    acc = np.zeros((reps.shape[0], words.shape[0]), dtype=np.int64)
    for pos in range(words.shape[1]):
        acc = F.ADD[acc, F.MUL[reps[:, pos][:, None], words[:, pos][None, :]]]
    return acc


def _dual_character_table(C: LinearCode, dual_char_cap: int) -> CosetTable:
    F = C.field
    if F.p != 2:
        raise FieldError("dual-character engine requires characteristic 2")
    q, n, k = C.q, C.n, C.k
    S = q ** (n - k)
    if S * S > dual_char_cap:
        raise CapExceeded(f"dual-character sweep of {C.params()}", S * S, dual_char_cap)
    H = C.parity_check()

    # All dual codewords, spanned row by row.
    words = np.zeros((1, n), dtype=np.int64)
    scalars = np.arange(q, dtype=np.int64)
    for row in H.array:
        multiples = F.MUL[scalars[:, None], row[None, :]]
        words = F.ADD[words[:, None, :], multiples[None, :, :]].reshape(-1, n)
    dual_weights = (words != 0).sum(axis=1)

    # One representative per syndrome, consistent with the base-q encoding.
    rep = _representative_solver(C)
    reps = np.array([rep(s) for s in range(S)], dtype=np.int64)
    pow_q = q ** np.arange(H.rows, dtype=np.int64)
    recheck = np.zeros(S, dtype=np.int64)
    for j in range(H.rows):
        acc = np.zeros(S, dtype=np.int64)
        for pos in range(n):
            hv = int(H.array[j, pos])
            if hv:
                acc = F.ADD[acc, F.MUL[hv, reps[:, pos]]]
        recheck += acc * pow_q[j]
    assert np.array_equal(recheck, np.arange(S)), "representative syndromes off"

    # Character sums per dual weight, then the Krawtchouk expansion.
    indicator = (dual_weights[:, None] == np.arange(n + 1)[None, :]).astype(np.int64)
    K = krawtchouk_matrix(n, q)
    hist = np.empty((S, n + 1), dtype=np.int64)
    block = max(1, int(2e7) // max(1, S * n))
    size = q ** k
    for lo in range(0, S, block):
        sub = reps[lo:lo + block]
        dots = _fold_dot(F, words, sub)
        signs = 1 - 2 * F.TRACE[dots]
        smat = (signs @ indicator).tolist()
        for r, srow in enumerate(smat):
            for i in range(n + 1):
                acc = sum(K[i][j] * srow[j] for j in range(n + 1))
                b, remr = divmod(acc, S)
                if remr or b < 0:
                    raise AssertionError("character transform not integral")
                hist[lo + r, i] = b
    if not np.array_equal(hist.sum(axis=1), np.full(S, size)):
        raise AssertionError("coset sizes off in dual-character table")
    return CosetTable(C, H, hist, "dual_character")


def coset_weight_distributions(
    C: LinearCode,
    engine: str = "auto",
    primal_cap: Optional[int] = None,
    dual_char_cap: int = DEFAULT_DUAL_CHAR_CAP,
    workers: int = 1,
) -> CosetTable:
    """Complete coset table by the requested engine.

    ``auto`` picks the cheaper feasible engine (primal costs q^n, the
    dual-character route costs q^(2(n-k)) and needs characteristic 2).
    """
    if primal_cap is None:
        primal_cap = default_primal_cap()
    if "table" in C._cache and (engine in ("auto", C._cache["table"].engine)):
        return C._cache["table"]
    q, n, k = C.q, C.n, C.k
    if engine == "primal":
        table = _primal_table(C, primal_cap, workers)
    elif engine == "dual_character":
        table = _dual_character_table(C, dual_char_cap)
    elif engine == "auto":
        cost_primal = q ** n
        cost_dc = q ** (2 * (n - k)) if C.field.p == 2 else None
        primal_ok = cost_primal <= primal_cap
        dc_ok = cost_dc is not None and cost_dc <= dual_char_cap
        if primal_ok and (not dc_ok or cost_primal <= cost_dc):
            table = _primal_table(C, primal_cap, workers)
        elif dc_ok:
            table = _dual_character_table(C, dual_char_cap)
        else:
            raise CapExceeded(f"coset table of {C.params()}", cost_primal, primal_cap)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    C._cache["table"] = table
    C._cache["rho"] = table.rho
    return table


# ---------------------------------------------------------------------------
# Complete regularity and uniform packing
# ---------------------------------------------------------------------------

def is_completely_regular(
    C: LinearCode, table: Optional[CosetTable] = None, **table_kwargs
) -> tuple[bool, Optional[dict]]:
    """Decide CR; on failure, return two same-leader cosets that disagree."""
    if table is None:
        table = coset_weight_distributions(C, **table_kwargs)
    for w, rows, counts, witnesses in table.groups():
        if len(rows) > 1:
            rep = _representative_solver(C)
            a, b = int(witnesses[0]), int(witnesses[1])
            return False, {
                "leader_weight": int(w),
                "syndrome_a": a,
                "syndrome_b": b,
                "vector_a": rep(a),
                "vector_b": rep(b),
                "distribution_a": [int(x) for x in rows[0]],
                "distribution_b": [int(x) for x in rows[1]],
            }
    return True, None


def solve_packing_coefficients(rows) -> Optional[list[Fraction]]:
    """Exact rational beta with R beta = 1 for every row, or None if infeasible.

    Gaussian elimination over Fractions with first-nonzero pivoting; free
    variables are pinned to 0, and any returned solution is re-verified
    against every row.
    """
    rows = [list(map(int, r)) for r in np.asarray(rows)]
    if not rows:
        raise ValueError("need at least one coset distribution row")
    ncols = len(rows[0])
    aug = [[Fraction(x) for x in row] + [Fraction(1)] for row in rows]
    piv_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(aug)) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        lead = aug[r]
        for i in range(len(aug)):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], lead)]
        piv_cols.append(c)
        r += 1
    for i in range(r, len(aug)):
        if aug[i][ncols] != 0:
            return None
    beta = [Fraction(0)] * ncols
    for j, c in enumerate(piv_cols):
        beta[c] = aug[j][ncols]
    for row in rows:
        if sum(b * x for b, x in zip(beta, row)) != 1:
            raise AssertionError("packing solve produced a non-solution")
    return beta


@dataclass
class UpwsResult:
    verdict: bool
    beta: Optional[list[Fraction]]
    provenance: str  # "direct" | "rho_equals_s"


def is_upws(
    C: LinearCode,
    table: Optional[CosetTable] = None,
    rho: Optional[int] = None,
    s: Optional[int] = None,
    **table_kwargs,
) -> UpwsResult:
    """Uniform packing in the wide sense.

    With a coset table, solves the exact rational system over the distinct
    truncated distributions (provenance ``direct``); otherwise falls back to
    the rho = s criterion.  Whenever both routes are available they must
    agree.
    """
    if table is None and "table" in C._cache:
        table = C._cache["table"]
    if table is not None:
        r = table.rho if rho is None else rho
        rows = table.distinct_truncated(r)
        beta = solve_packing_coefficients(rows)
        verdict = beta is not None
        if rho is not None and s is not None and verdict != (rho == s):
            raise RegularityContradiction(
                f"direct packing verdict {verdict} but rho={rho}, s={s} for {C.params()}"
            )
        return UpwsResult(verdict, beta, "direct")
    if rho is None:
        rho = covering_radius(C)
    if s is None:
        s = C.external_distance()
    return UpwsResult(rho == s, None, "rho_equals_s")


# ---------------------------------------------------------------------------
# Implication harness for the regularity lemmas
# ---------------------------------------------------------------------------

def lemma_implications(
    C: LinearCode,
    d: int,
    e: int,
    rho: int,
    s: int,
    cr: Optional[bool],
    upws: Optional[bool],
    table: Optional[CosetTable],
) -> list[dict]:
    """Instantiate the standard rho/s/CR/UPWS implications on one code.

    ``cr``/``upws`` must be directly computed verdicts (or None when no table
    was affordable, which skips the implications needing them).  A fired
    implication that fails raises: these are proven facts, so a violation
    means an engine bug, not a discovery.
    """
    checks = []

    def record(impl_id, fired, holds, detail):
        checks.append({"id": impl_id, "fired": fired, "holds": holds, "detail": detail})
        if fired and holds is False:
            raise RegularityContradiction(f"implication ({impl_id}) failed for {C.params()}: {detail}")

    record("i", True, rho <= s, f"rho={rho} <= s={s}")
    fired = d >= 2 * s - 1 and cr is not None
    record("ii", fired, (cr is True) if fired else None, f"d={d}, 2s-1={2 * s - 1}")
    fired = upws is not None
    record("iii", fired, ((rho == s) == upws) if fired else None, f"rho={rho}, s={s}, upws={upws}")
    fired = cr is True
    record("iv", fired, (rho == s) if fired else None, f"cr={cr}, rho={rho}, s={s}")
    fired = upws is True and rho == e + 1 and cr is not None
    record("v", fired, (cr is True) if fired else None, f"upws={upws}, rho={rho}, e+1={e + 1}")
    if table is not None:
        holds = True
        for w, rows, _, _ in table.groups():
            if (w <= d - s or w == s) and len(rows) > 1:
                holds = False
        record("vi", True, holds, f"equal-leader cosets with w <= d-s or w = s, d-s={d - s}, s={s}")
    else:
        record("vi", False, None, "no coset table")
    return checks


# ---------------------------------------------------------------------------
# One-stop profile
# ---------------------------------------------------------------------------

@dataclass
class AnalysisResult:
    code: LinearCode
    profile: CodeProfile
    table: Optional[CosetTable]
    beta: Optional[list[Fraction]]
    cr_witness: Optional[dict]
    implications: list[dict]

    @property
    def engine(self) -> Optional[str]:
        return self.table.engine if self.table is not None else None


def full_profile(
    C: LinearCode,
    *,
    primal_cap: Optional[int] = None,
    enum_cap: int = DEFAULT_ENUM_CAP,
    dual_char_cap: int = DEFAULT_DUAL_CHAR_CAP,
    syndrome_cap: int = DEFAULT_SYNDROME_CAP,
    workers: int = 1,
    engine: str = "auto",
) -> AnalysisResult:
    """Compute the complete profile of C: d, e, s, s', rho and all verdicts.

    CR and UPWS come from a coset table when one fits the caps (provenance
    ``direct``); otherwise UPWS falls back to rho = s and CR to whatever the
    implications force, with provenance recorded per flag.
    """
    if primal_cap is None:
        primal_cap = default_primal_cap()
    W = C.weight_distribution(enum_cap, workers)
    d = C.min_distance(enum_cap)
    e = (d - 1) // 2
    s = C.external_distance(enum_cap)
    sp = C.s_prime(enum_cap)

    table: Optional[CosetTable] = None
    try:
        table = coset_weight_distributions(
            C, engine=engine, primal_cap=primal_cap,
            dual_char_cap=dual_char_cap, workers=workers,
        )
    except CapExceeded:
        if engine != "auto":
            raise
    rho = table.rho if table is not None else covering_radius(C, syndrome_cap)

    profile = CodeProfile(
        n=C.n, k=C.k, q=C.q, d=d, e=e, s=s, s_prime=sp, rho=rho,
        weight_distribution=W,
    )
    for name, val in bounds_flags(C, d).items():
        profile.set_flag(name, val, "direct")
    profile.set_flag("is_perfect", rho == e, "direct")
    profile.set_flag("is_quasi_perfect", rho == e + 1, "direct")
    profile.set_flag("is_self_dual", C.is_self_dual(), "direct")

    cr_witness = None
    beta = None
    if table is not None:
        cr, cr_witness = is_completely_regular(C, table)
        upws_res = is_upws(C, table, rho=rho, s=s)
        beta = upws_res.beta
        profile.set_flag("is_cr", cr, "direct")
        profile.set_flag("is_upws", upws_res.verdict, "direct")
        implications = lemma_implications(C, d, e, rho, s, cr, upws_res.verdict, table)
    else:
        upws = rho == s
        profile.set_flag("is_upws", upws, "rho_equals_s")
        if d >= 2 * s - 1:
            profile.set_flag("is_cr", True, "theorem_derived")
        elif rho != s:
            # CR would force rho = s
            profile.set_flag("is_cr", False, "theorem_derived")
        elif upws and rho == e + 1:
            profile.set_flag("is_cr", True, "theorem_derived")
        else:
            profile.set_flag("is_cr", None, "unavailable")
        implications = lemma_implications(C, d, e, rho, s, None, None, None)
    profile.validate()
    return AnalysisResult(C, profile, table, beta, cr_witness, implications)
