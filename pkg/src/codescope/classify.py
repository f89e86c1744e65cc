"""Exhaustive MDS enumeration and equivalence classification.

A systematic generator [I_k | A] spans an MDS code exactly when every square
submatrix of A is nonsingular, so the enumeration builds A column by column,
keeping all minors of the prefix cached and rejecting candidate columns the
moment any bordered minor vanishes.  Candidate filtering is vectorized over
all (q-1)^k all-nonzero columns at once.

Equivalence is monomial (coordinate permutations and nonzero column scalings)
with an optional Frobenius layer (semilinear) for extension fields.  Each
input code's full orbit of systematic matrices is closed over the group
generators, so class membership, orbit sizes and the lexicographically
smallest representative are all read off the closure directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations, product
from math import factorial
from typing import Optional, Sequence, Union

import numpy as np

from .caps import CapExceeded
from .code import LinearCode, format_code_text
from .coset import full_profile
from .gf import GF, field_of_order
from .linalg import Matrix

#: Orbit closures are refused above this transform-group size.
GROUP_CAP = 10 ** 7
#: Raw A-entry search-space cap for the pruned enumeration.
SEARCH_CAP = 10 ** 9

State = tuple  # A as a tuple of row tuples


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------

def enumerate_mds_systematic(q: int, n: int, k: int, cap: int = SEARCH_CAP) -> list[Matrix]:
    """All systematic generator matrices [I_k | A] of MDS [n, k]_q codes.

    Returned in lexicographic order of the flattened A (row-major).
    """
    F = field_of_order(q)
    mcols = n - k
    if k < 1 or mcols < 1:
        raise ValueError("need 1 <= k < n")
    space = q ** (k * mcols)
    if space > cap:
        raise CapExceeded(f"MDS enumeration over GF({q})^{k}x{mcols}", space, cap)

    cand = np.array(list(product(range(1, q), repeat=k)), dtype=np.int64)
    ncand = cand.shape[0]
    MUL, ADD, NEG = F.MUL, F.ADD, F.NEG

    # Bordered minors to test when appending column j: rows R, previous cols T.
    templates = [
        [
            (R, T)
            for t in range(2, min(k, j + 1) + 1)
            for R in combinations(range(k), t)
            for T in combinations(range(j), t - 1)
        ]
        for j in range(mcols)
    ]

    results: list[tuple] = []
    prefix: list[tuple] = []

    def descend(j: int, minors: dict) -> None:
        valid = np.ones(ncand, dtype=bool)
        new_vecs = {}
        for R, T in templates[j]:
            t = len(R)
            acc = np.zeros(ncand, dtype=np.int64)
            for i in range(t):
                # Laplace expansion along the new (last) column
                mval = minors[(R[:i] + R[i + 1:], T)]
                term = MUL[cand[:, R[i]], mval]
                if (i + t - 1) % 2:
                    term = NEG[term]
                acc = ADD[acc, term]
            new_vecs[(R, T)] = acc
            valid &= acc != 0
        hits = np.flatnonzero(valid)
        if j == mcols - 1:
            for idx in hits:
                results.append(tuple(prefix) + (tuple(int(x) for x in cand[idx]),))
            return
        for idx in hits:
            child = dict(minors)
            for r in range(k):
                child[((r,), (j,))] = int(cand[idx, r])
            for (R, T), vec in new_vecs.items():
                child[(R, T + (j,))] = int(vec[idx])
            prefix.append(tuple(int(x) for x in cand[idx]))
            descend(j + 1, child)
            prefix.pop()

    descend(0, {})

    mats = sorted(
        tuple(tuple(cols[c][r] for c in range(mcols)) for r in range(k))
        for cols in results
    )
    eye = np.eye(k, dtype=np.int64)
    return [Matrix(F, np.hstack([eye, np.array(A, dtype=np.int64)])) for A in mats]


def verify_no_mds(q: int, n: int, cap: int = SEARCH_CAP) -> bool:
    """True iff no MDS [n, k]_q code exists for any 2 <= k <= n-2."""
    return all(not enumerate_mds_systematic(q, n, k, cap) for k in range(2, n - 1))


# ---------------------------------------------------------------------------
# Monomial / semilinear transforms on systematic matrices
# ---------------------------------------------------------------------------

class _Ctx:
    """Scalar-speed field tables plus iterated Frobenius maps."""

    def __init__(self, F: GF):
        self.F = F
        self.ADD = F.ADD.tolist()
        self.MUL = F.MUL.tolist()
        self.NEG = F.NEG.tolist()
        self.INV = F.INV.tolist()
        frobs = [list(range(F.q))]
        for _ in range(1, F.r):
            frobs.append([F.frobenius(a) for a in frobs[-1]])
        self.frobs = frobs


def _systematize(rows: list[list[int]], k: int, n: int, ctx: _Ctx) -> Optional[State]:
    """RREF; returns the A block if the left k x k block pivots to identity."""
    ADD, MUL, NEG, INV = ctx.ADD, ctx.MUL, ctx.NEG, ctx.INV
    m = [row[:] for row in rows]
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, k) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        if m[r][c] != 1:
            inv_row = MUL[INV[m[r][c]]]
            m[r] = [inv_row[x] for x in m[r]]
        lead = m[r]
        for i in range(k):
            if i != r and m[i][c]:
                f_row = MUL[NEG[m[i][c]]]
                mi = m[i]
                m[i] = [ADD[mi[j]][f_row[lead[j]]] for j in range(n)]
        r += 1
        if r == k:
            break
    for i in range(k):
        row = m[i]
        for j in range(k):
            if row[j] != (1 if i == j else 0):
                return None
    return tuple(tuple(row[k:]) for row in m)


def _transform_state(A: State, perm, scales, frob_pow: int, ctx: _Ctx, k: int, n: int) -> Optional[State]:
    """Apply a monomial/semilinear transform to the code of [I | A], re-systematized."""
    MUL = ctx.MUL
    frob = ctx.frobs[frob_pow]
    G = [
        [1 if j == r else 0 for j in range(k)] + list(A[r])
        for r in range(k)
    ]
    newG = [
        [MUL[scales[i]][frob[row[perm[i]]]] for i in range(n)]
        for row in G
    ]
    return _systematize(newG, k, n, ctx)


def _generators(F: GF, n: int, semilinear: bool):
    ident_perm = tuple(range(n))
    ones = (1,) * n
    gens = []
    for i in range(n - 1):
        p = list(ident_perm)
        p[i], p[i + 1] = p[i + 1], p[i]
        gens.append((tuple(p), ones, 0))
    if F.q > 2:
        xi = F.primitive_element
        for i in range(n):
            s = list(ones)
            s[i] = xi
            gens.append((ident_perm, tuple(s), 0))
    if semilinear and F.r > 1:
        gens.append((ident_perm, ones, 1))
    return gens


def _orbit(A0: State, gens, ctx: _Ctx, k: int, n: int) -> set[State]:
    seen = {A0}
    queue = deque([A0])
    while queue:
        A = queue.popleft()
        for perm, scales, fp in gens:
            B = _transform_state(A, perm, scales, fp, ctx, k, n)
            if B is not None and B not in seen:
                seen.add(B)
                queue.append(B)
    return seen


def group_size(q: int, n: int, r: int, semilinear: bool) -> int:
    return factorial(n) * (q - 1) ** n * (r if semilinear else 1)


@dataclass
class EquivalenceClass:
    representative: State
    orbit: frozenset
    member_indices: list[int]

    @property
    def orbit_size(self) -> int:
        return len(self.orbit)


def _state_of(code: Union[LinearCode, Matrix], ctx: _Ctx, k: int, n: int) -> State:
    G = code.G if isinstance(code, LinearCode) else code
    st = _systematize(G.array.tolist(), k, n, ctx)
    if st is None:
        raise ValueError("code has no systematic form on the first k coordinates")
    return st


def equivalence_classes(
    codes: Sequence[Union[LinearCode, Matrix]], semilinear: bool = False
) -> list[EquivalenceClass]:
    """Partition codes into monomial (or semilinear) equivalence classes.

    Each class records the full orbit of systematic matrices, so the
    representative is the true lexicographic minimum over the orbit.
    """
    if not codes:
        return []
    first = codes[0]
    F = first.field
    k = first.G.rows if isinstance(first, LinearCode) else first.rows
    n = first.G.cols if isinstance(first, LinearCode) else first.cols
    for c in codes:
        cf = c.field
        ck, cn = (c.G.rows, c.G.cols) if isinstance(c, LinearCode) else (c.rows, c.cols)
        if cf != F or (ck, cn) != (k, n):
            raise ValueError("all codes must share (q, n, k)")
    gsize = group_size(F.q, n, F.r, semilinear)
    if gsize > GROUP_CAP:
        raise CapExceeded("equivalence group", gsize, GROUP_CAP)

    ctx = _Ctx(F)
    gens = _generators(F, n, semilinear)
    class_of: dict[State, int] = {}
    classes: list[EquivalenceClass] = []
    for i, c in enumerate(codes):
        st = _state_of(c, ctx, k, n)
        if st in class_of:
            classes[class_of[st]].member_indices.append(i)
            continue
        orbit = _orbit(st, gens, ctx, k, n)
        idx = len(classes)
        for o in orbit:
            class_of[o] = idx
        classes.append(EquivalenceClass(min(orbit), frozenset(orbit), [i]))
    return classes


def _selfdual_state(A: State, ctx: _Ctx) -> bool:
    """[I | A] is self-dual iff A A^T = -I (and A is square)."""
    k = len(A)
    if len(A[0]) != k:
        return False
    ADD, MUL, NEG = ctx.ADD, ctx.MUL, ctx.NEG
    for i in range(k):
        for j in range(k):
            acc = 0
            for t in range(k):
                acc = ADD[acc][MUL[A[i][t]][A[j][t]]]
            want = NEG[1] if i == j else 0
            if acc != want:
                return False
    return True


# ---------------------------------------------------------------------------
# Classification reports
# ---------------------------------------------------------------------------

@dataclass
class ClassEntry:
    representative_text: str
    orbit_size: int
    self_dual_member_exists: bool
    profile: dict

    def to_json_dict(self) -> dict:
        return {
            "representative": self.representative_text,
            "orbit_size": self.orbit_size,
            "self_dual_member_exists": self.self_dual_member_exists,
            "profile": self.profile,
        }


@dataclass
class ClassificationReport:
    q: int
    n: int
    k: int
    mode: str
    class_count: int
    class_count_monomial: int
    class_count_semilinear: Optional[int]
    matrices_enumerated: int
    classes: list[ClassEntry]
    spot_check_trials: int
    seed: int

    def to_json_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "k": self.k,
            "mode": self.mode,
            "class_count": self.class_count,
            "class_count_monomial": self.class_count_monomial,
            "class_count_semilinear": self.class_count_semilinear,
            "matrices_enumerated": self.matrices_enumerated,
            "classes": [c.to_json_dict() for c in self.classes],
            "spot_check_trials": self.spot_check_trials,
            "seed": self.seed,
        }


def classify_mds(
    q: int,
    n: int,
    k: int,
    semilinear: Optional[bool] = None,
    seed: int = 0,
    spot_check_trials: int = 100,
    workers: int = 1,
) -> ClassificationReport:
    """Enumerate all MDS [n, k]_q codes and classify them up to equivalence.

    For extension fields both the monomial and the semilinear class counts are
    reported (they may differ); ``semilinear`` selects which partition the
    per-class data describes and defaults to semilinear on extension fields.
    Each representative gets a full regularity profile, and the orbit closure
    is spot-checked with seeded random group elements.
    """
    F = field_of_order(q)
    if semilinear is None:
        semilinear = F.r > 1
    mats = enumerate_mds_systematic(q, n, k)
    count_mono = count_semi = None
    classes = equivalence_classes(mats, semilinear) if mats else []
    if F.r > 1 and mats:
        other = equivalence_classes(mats, not semilinear)
        if semilinear:
            count_semi, count_mono = len(classes), len(other)
        else:
            count_mono, count_semi = len(classes), len(other)
    else:
        count_mono = len(classes)
        count_semi = len(classes) if F.r > 1 else None

    ctx = _Ctx(F)
    all_states = {_state_of(m, ctx, k, n) for m in mats}
    rng = np.random.default_rng(seed)
    eye = np.eye(k, dtype=np.int64)
    entries = []
    for cls in classes:
        if not cls.orbit <= all_states:
            raise AssertionError("orbit escaped the enumerated set: enumeration incomplete")
        rep = LinearCode(F, np.hstack([eye, np.array(cls.representative, dtype=np.int64)]))
        res = full_profile(rep, workers=workers)
        for _ in range(spot_check_trials):
            perm = tuple(int(x) for x in rng.permutation(n))
            scales = tuple(int(x) for x in rng.integers(1, q, size=n))
            fp = int(rng.integers(0, F.r)) if (semilinear and F.r > 1) else 0
            moved = _transform_state(cls.representative, perm, scales, fp, ctx, k, n)
            if moved not in cls.orbit:
                raise AssertionError("random group element left the orbit closure")
        entries.append(
            ClassEntry(
                representative_text=format_code_text(rep),
                orbit_size=cls.orbit_size,
                self_dual_member_exists=any(_selfdual_state(a, ctx) for a in cls.orbit),
                profile=res.profile.to_dict(),
            )
        )
    return ClassificationReport(
        q=q, n=n, k=k,
        mode="semilinear" if semilinear else "monomial",
        class_count=len(classes),
        class_count_monomial=count_mono,
        class_count_semilinear=count_semi,
        matrices_enumerated=len(mats),
        classes=entries,
        spot_check_trials=spot_check_trials,
        seed=seed,
    )


def dual_classification_bijection(q: int, n: int, k: int, semilinear: Optional[bool] = None) -> bool:
    """Check that duality induces a bijection between [n,k] and [n,n-k] classes."""
    F = field_of_order(q)
    if semilinear is None:
        semilinear = F.r > 1
    ctx = _Ctx(F)
    a_mats = enumerate_mds_systematic(q, n, k)
    b_mats = enumerate_mds_systematic(q, n, n - k)
    a_classes = equivalence_classes(a_mats, semilinear)
    b_classes = equivalence_classes(b_mats, semilinear)
    if len(a_classes) != len(b_classes):
        return False
    images = set()
    eye = np.eye(k, dtype=np.int64)
    for cls in a_classes:
        rep = LinearCode(F, np.hstack([eye, np.array(cls.representative, dtype=np.int64)]))
        dual_state = _state_of(rep.dual(), ctx, n - k, n)
        hit = next(
            (j for j, b in enumerate(b_classes) if dual_state in b.orbit), None
        )
        if hit is None:
            return False
        images.add(hit)
    return len(images) == len(b_classes)
