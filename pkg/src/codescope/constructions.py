"""Named code families and explicit generator matrices.

Every constructor re-verifies the advertised [n, k, d] by enumeration before
returning, so downstream analyses can rely on the parameters.  Search-based
constructors scan candidates in ascending element-encoding order, which keeps
returned witnesses reproducible across runs.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Optional

import numpy as np

from .caps import CapExceeded
from .code import LinearCode, direct_sum
from .gf import GF, FieldError, field_of_order


def _verified(C: LinearCode, n: int, k: int, d: int) -> LinearCode:
    if (C.n, C.k) != (n, k):
        raise AssertionError(f"{C.name}: got [{C.n},{C.k}], expected [{n},{k}]")
    dd = C.min_distance()
    if dd != d:
        raise AssertionError(f"{C.name}: got d={dd}, expected d={d}")
    return C


def repetition(q: int, n: int) -> LinearCode:
    """The [n, 1, n]_q repetition code."""
    if n < 2:
        raise ValueError("repetition code needs n >= 2")
    F = field_of_order(q)
    C = LinearCode(F, [[1] * n], name=f"repetition[{n},1,{n}]_{q}")
    return _verified(C, n, 1, n)


def dual_repetition(q: int, n: int) -> LinearCode:
    """The [n, n-1, 2]_q code of zero-sum words."""
    C = repetition(q, n).dual()
    C.name = f"dual-repetition[{n},{n - 1},2]_{q}"
    return _verified(C, n, n - 1, 2)


def rs_code(q: int, n: int, k: int) -> LinearCode:
    """Evaluation code of degree-<k polynomials on the first n field points.

    A Vandermonde generator on distinct points, hence MDS: [n, k, n-k+1]_q.
    """
    F = field_of_order(q)
    if not 1 <= k < n <= q:
        raise ValueError(f"need 1 <= k < n <= q, got n={n}, k={k}, q={q}")
    pts = list(range(n))
    G = [[F.pow(a, j) for a in pts] for j in range(k)]
    C = LinearCode(F, G, name=f"rs[{n},{k},{n - k + 1}]_{q}")
    return _verified(C, n, k, n - k + 1)


def ders(q: int, k: int) -> LinearCode:
    """Doubly-extended Reed-Solomon code [q+1, k, q-k+2]_q.

    Columns are (1, a, ..., a^(k-1)) for every field element a (with 0^0 = 1,
    ascending encoding) plus the point at infinity (0, ..., 0, 1).
    """
    F = field_of_order(q)
    if not 1 <= k <= q - 1:
        raise ValueError(f"need 1 <= k <= q-1, got k={k}, q={q}")
    cols = [[F.pow(a, j) for j in range(k)] for a in F.elements]
    cols.append([0] * (k - 1) + [1])
    G = np.array(cols, dtype=np.int64).T
    C = LinearCode(F, G, name=f"ders[{q + 1},{k},{q - k + 2}]_{q}")
    return _verified(C, q + 1, k, q - k + 2)


def simplex(q: int) -> LinearCode:
    """The equidistant [q+1, 2, q]_q simplex code (one column per projective point).

    Columns (1, a) for every field element a, then (0, 1): the same layout as
    the k = 2 doubly-extended RS code, but valid down to q = 2.
    """
    F = field_of_order(q)
    G = [[1] * q + [0], list(F.elements) + [1]]
    C = LinearCode(F, G, name=f"simplex[{q + 1},2,{q}]_{q}")
    return _verified(C, q + 1, 2, q)


def hamming(q: int) -> LinearCode:
    """The [q+1, q-1, 3]_q Hamming code, dual of the simplex code."""
    C = simplex(q).dual()
    C.name = f"hamming[{q + 1},{q - 1},3]_{q}"
    return _verified(C, q + 1, q - 1, 3)


def hyperoval_code(q: int) -> LinearCode:
    """The [q+2, 3, q]_q two-weight code from a conic plus nucleus, q even.

    Columns (1, t, t^2) for every t, plus (0, 1, 0) and (0, 0, 1).
    """
    F = field_of_order(q)
    if F.p != 2:
        raise FieldError("hyperoval construction needs even q")
    cols = [[1, t, F.mul(t, t)] for t in F.elements]
    cols.append([0, 1, 0])
    cols.append([0, 0, 1])
    G = np.array(cols, dtype=np.int64).T
    C = LinearCode(F, G, name=f"hyperoval[{q + 2},3,{q}]_{q}")
    return _verified(C, q + 2, 3, q)


def self_dual_2_1_2(q: int) -> Optional[LinearCode]:
    """Self-dual [2, 1, 2]_q code (1, alpha) with alpha^2 = -1, or None.

    The smallest such alpha by element encoding is used.
    """
    F = field_of_order(q)
    minus_one = F.neg(1)
    alpha = next((a for a in F.units if F.mul(a, a) == minus_one), None)
    if alpha is None:
        return None
    C = LinearCode(F, [[1, alpha]], name=f"selfdual[2,1,2]_{q}")
    if not C.is_self_dual():
        raise AssertionError(f"(1, {alpha}) not self-dual over GF({q})")
    return _verified(C, 2, 1, 2)


def self_dual_4_2_3(q: int) -> Optional[LinearCode]:
    """Self-dual [4, 2, 3]_q code from rows (1,0,a,b), (0,1,b,-a), or None.

    Searches nonzero (a, b) with 1 + a^2 + b^2 = 0 in ascending encoding
    order; no such pair exists exactly over GF(2) and GF(5).
    """
    F = field_of_order(q)
    hit = next(
        (
            (a, b)
            for a in F.units
            for b in F.units
            if F.add(1, F.add(F.mul(a, a), F.mul(b, b))) == 0
        ),
        None,
    )
    if hit is None:
        return None
    a, b = hit
    C = LinearCode(F, [[1, 0, a, b], [0, 1, b, F.neg(a)]], name=f"selfdual[4,2,3]_{q}")
    if not C.is_self_dual():
        raise AssertionError(f"matrix for (a,b)=({a},{b}) not self-dual over GF({q})")
    return _verified(C, 4, 2, 3)


def self_dual_search(q: int, n: int, k: int, d: int, cap: int = 10 ** 8) -> list[LinearCode]:
    """All systematic [I | A] codes with G G^T = 0 and minimum distance >= d.

    Builds A row by row under the self-orthogonality constraints
    (row_i . row_i = -1, row_i . row_j = 0), in ascending row encoding.
    """
    if n != 2 * k:
        raise ValueError("self-dual codes need n = 2k")
    F = field_of_order(q)
    if q ** (k * (n - k)) > cap:
        raise CapExceeded(f"self-dual search over GF({q})^{k}x{n - k}", q ** (k * (n - k)), cap)
    minus_one = F.neg(1)

    def dot(u, v):
        acc = 0
        for a, b in zip(u, v):
            acc = F.ADD[acc, F.MUL[a, b]]
        return int(acc)

    rows_pool = [r for r in product(range(q), repeat=n - k) if dot(r, r) == minus_one]
    found: list[LinearCode] = []

    def extend(chosen):
        if len(chosen) == k:
            G = np.hstack([np.eye(k, dtype=np.int64), np.array(chosen, dtype=np.int64)])
            C = LinearCode(F, G)
            if C.min_distance() >= d:
                C.name = f"selfdual-search[{n},{k}]_{q}#{len(found)}"
                found.append(C)
            return
        for r in rows_pool:
            if all(dot(r, prev) == 0 for prev in chosen):
                extend(chosen + [r])

    extend([])
    return found


_PRESETS = {
    # name: (q, rows, expected (n, k, d))
    "rs_5_2_4_5": (5, [[1, 0, 1, 1, 1], [0, 1, 2, 3, 4]], (5, 2, 4)),
    "code_4_2_3_5": (5, [[1, 0, 1, 1], [0, 1, 2, 3]], (4, 2, 3)),
    "selfdual_4_2_3_4": (4, [[1, 0, 2, 3], [0, 1, 3, 2]], (4, 2, 3)),
}


def preset_matrix(name: str) -> LinearCode:
    """Fixed literal generator matrices used in tests and the claim suite."""
    try:
        q, rows, (n, k, d) = _PRESETS[name]
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {sorted(_PRESETS)}")
    C = LinearCode(field_of_order(q), rows, name=f"preset:{name}")
    return _verified(C, n, k, d)


def preset_names() -> list[str]:
    return sorted(_PRESETS)


@lru_cache(maxsize=1)
def standard_corpus() -> dict[str, LinearCode]:
    """The shared zoo of constructed codes used by property tests and claims."""
    corpus: dict[str, LinearCode] = {}

    def put(name, code):
        corpus[name] = code

    for q in (2, 3, 4, 5):
        for n in range(2, 7):
            put(f"repetition({q},{n})", repetition(q, n))
            if n > 2:
                put(f"dual_repetition({q},{n})", dual_repetition(q, n))
    put("repetition(2,7)", repetition(2, 7))
    put("repetition(9,3)", repetition(9, 3))
    put("dual_repetition(9,3)", dual_repetition(9, 3))

    for q in (2, 3, 4, 5, 7, 8):
        put(f"hamming({q})", hamming(q))
        put(f"simplex({q})", simplex(q))

    ders_ks = {3: (2,), 4: (2, 3), 5: (2, 3, 4), 7: (2, 5, 6), 8: (2, 6, 7)}
    for q, ks in ders_ks.items():
        for k in ks:
            put(f"ders({q},{k})", ders(q, k))

    for q in (4, 5, 7, 8):
        for n in range(4, q + 1):
            for k in range(2, n - 1):
                put(f"rs({q},{n},{k})", rs_code(q, n, k))

    for q in (4, 8):
        hc = hyperoval_code(q)
        put(f"hyperoval({q})", hc)
        dualhc = hc.dual()
        dualhc.name = f"dual-hyperoval[{q + 2},{q - 1},4]_{q}"
        put(f"dual_hyperoval({q})", dualhc)

    for name in preset_names():
        put(f"preset:{name}", preset_matrix(name))
    dual_rs = preset_matrix("rs_5_2_4_5").dual()
    dual_rs.name = "code[5,3,3]_5"
    put("dual(rs_5_2_4_5)", dual_rs)

    for q in (2, 4, 5, 8, 9, 13):
        c = self_dual_2_1_2(q)
        if c is not None:
            put(f"selfdual_2_1_2({q})", c)
    for q in (3, 4, 7, 8, 9):
        c = self_dual_4_2_3(q)
        if c is not None:
            put(f"selfdual_4_2_3({q})", c)

    two = self_dual_2_1_2(5)
    put("selfdual_2_1_2(5)+2", direct_sum(two, two))
    put("selfdual_2_1_2(5)+3", direct_sum(two, two, two))
    return corpus
