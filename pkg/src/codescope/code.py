"""Linear codes as row spaces: duality, weight spectra, bounds, file format.

A :class:`LinearCode` is a full-rank generator matrix over a small field,
restricted to 0 < k < n (the zero code and the full space are excluded from
every analysis here).  Weight spectra are exact integer histograms obtained by
enumerating whichever side of the duality is cheaper; the MacWilliams
transform connects the two sides and doubles as a consistency check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .caps import DEFAULT_ENUM_CAP, CapExceeded
from .gf import GF, field
from .linalg import Matrix


class LinearCode:
    """An [n, k] linear code over GF(q), given by a rank-k generator matrix."""

    def __init__(self, field_: GF, generator, name: Optional[str] = None):
        G = generator if isinstance(generator, Matrix) else Matrix(field_, generator)
        if G.field != field_:
            raise ValueError("generator matrix field mismatch")
        k, n = G.rows, G.cols
        if not 0 < k < n:
            raise ValueError(f"need 0 < k < n, got k={k}, n={n}")
        if G.rank() != k:
            raise ValueError("generator matrix rows are linearly dependent")
        self.field = field_
        self.G = G
        self.n = n
        self.k = k
        self.name = name
        self._cache: dict = {}

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return self.q ** self.k

    def params(self) -> str:
        return f"[{self.n},{self.k}]_{self.q}"

    def __repr__(self) -> str:
        tag = f" {self.name!r}" if self.name else ""
        return f"LinearCode({self.params()}{tag})"

    # -- structure -----------------------------------------------------------

    def dual(self) -> "LinearCode":
        """The Euclidean dual code, an [n, n-k] code."""
        if "dual" not in self._cache:
            H = self.G.nullspace_basis()
            D = LinearCode(self.field, H, name=f"dual({self.name})" if self.name else None)
            assert self.G.matmul(H.transpose()).is_zero()
            self._cache["dual"] = D
        return self._cache["dual"]

    def parity_check(self) -> Matrix:
        """A parity-check matrix (generator of the dual), (n-k) x n."""
        return self.dual().G

    def systematic_form(self) -> tuple[Matrix, tuple[int, ...]]:
        """Column-permuted generator [I_k | A]; returns (matrix, permutation)."""
        R, rank, pivots = self.G.rref()
        free = [c for c in range(self.n) if c not in pivots]
        perm = tuple(pivots) + tuple(free)
        out = np.empty_like(R.array)
        for newpos, oldpos in enumerate(perm):
            out[:, newpos] = R.array[:, oldpos]
        return Matrix(self.field, out), perm

    def contains(self, v: Sequence[int]) -> bool:
        H = self.parity_check()
        return not any(H.apply(list(v)))

    def same_code(self, other: "LinearCode") -> bool:
        return self.field == other.field and self.G.row_space_equals(other.G)

    def is_self_dual(self) -> bool:
        """True iff n = 2k and the generator is self-orthogonal."""
        return self.n == 2 * self.k and self.G.matmul(self.G.transpose()).is_zero()

    # -- weight spectra -------------------------------------------------------

    def _spectrum_direct(self, cap: int, workers: int = 1) -> tuple[int, ...]:
        q, n, k = self.q, self.n, self.k
        total = q ** k
        if total > cap:
            raise CapExceeded(f"codeword enumeration of {self.params()}", total, cap)
        F = self.field
        rowmult = F.MUL[
            np.arange(q, dtype=np.int64)[None, :, None], self.G.array[:, None, :]
        ]

        def sweep(start, count, acc):
            digits = _digits_of(start, q, k)
            word = np.zeros(n, dtype=np.int64)
            for i in range(k):
                if digits[i]:
                    word = F.ADD[word, rowmult[i, digits[i]]]
            _kernels.spectrum_sweep(
                q, n, k, F.ADD, F.SUB, rowmult, digits, word,
                int((word != 0).sum()), count, acc,
            )

        counts = _kernels.run_partitioned(
            total, q, workers, lambda: np.zeros(n + 1, dtype=np.int64), sweep
        )
        out = tuple(int(x) for x in counts)
        assert out[0] == 1 and sum(out) == total
        return out

    def weight_distribution(self, cap: int = DEFAULT_ENUM_CAP, workers: int = 1) -> tuple[int, ...]:
        """Exact weight spectrum (A_0, ..., A_n).

        Enumerates the code itself when q^k fits the cap, otherwise enumerates
        the dual and transforms back; raises CapExceeded when neither side fits.
        """
        if "spectrum" in self._cache:
            return self._cache["spectrum"]
        q, n, k = self.q, self.n, self.k
        direct_cost, dual_cost = q ** k, q ** (n - k)
        if direct_cost <= min(dual_cost, cap):
            W = self._spectrum_direct(cap, workers)
        elif dual_cost <= cap:
            dual_W = self.dual()._spectrum_direct(cap, workers)
            W = macwilliams(dual_W, n, n - k, q)
        elif direct_cost <= cap:
            W = self._spectrum_direct(cap, workers)
        else:
            raise CapExceeded(
                f"weight spectrum of {self.params()}", min(direct_cost, dual_cost), cap
            )
        self._cache["spectrum"] = W
        return W

    def min_distance(self, cap: int = DEFAULT_ENUM_CAP, workers: int = 1) -> int:
        W = self.weight_distribution(cap, workers)
        return next(i for i in range(1, self.n + 1) if W[i])

    def s_prime(self, cap: int = DEFAULT_ENUM_CAP) -> int:
        """Number of distinct nonzero weights occurring in the code."""
        W = self.weight_distribution(cap)
        return sum(1 for i in range(1, self.n + 1) if W[i])

    def external_distance(self, cap: int = DEFAULT_ENUM_CAP, compare_cap: int = 10 ** 6) -> int:
        """Number of nonzero weights of the dual code.

        Runs whichever of {dual enumeration, MacWilliams from the primal
        spectrum} is cheaper; when both sides cost at most ``compare_cap``
        they are both run and must agree.
        """
        if "s" in self._cache:
            return self._cache["s"]
        q, n, k = self.q, self.n, self.k
        dual_cost, primal_cost = q ** (n - k), q ** k
        by_dual = by_transform = None
        if dual_cost <= min(cap, compare_cap) and primal_cost <= compare_cap:
            by_dual = self.dual()._spectrum_direct(cap)
            by_transform = macwilliams(self._spectrum_direct(cap), n, k, q)
            if by_dual != by_transform:
                raise AssertionError(
                    f"dual spectrum mismatch for {self.params()}: "
                    f"{by_dual} vs {by_transform}"
                )
            dual_W = by_dual
        elif dual_cost <= primal_cost:
            dual_W = self.dual()._spectrum_direct(cap)
        else:
            dual_W = macwilliams(self.weight_distribution(cap), n, k, q)
        s = sum(1 for i in range(1, n + 1) if dual_W[i])
        self._cache["s"] = s
        self._cache.setdefault("dual_spectrum", tuple(dual_W))
        return s


def _digits_of(index: int, q: int, length: int) -> np.ndarray:
    digits = np.empty(length, dtype=np.int64)
    for i in range(length):
        index, digits[i] = divmod(index, q)
    return digits


# ---------------------------------------------------------------------------
# MacWilliams transform
# ---------------------------------------------------------------------------

def krawtchouk(j: int, x: int, n: int, q: int) -> int:
    """q-ary Krawtchouk polynomial K_j(x) for length n, as an exact integer."""
    return sum(
        (-1) ** h * (q - 1) ** (j - h) * math.comb(x, h) * math.comb(n - x, j - h)
        for h in range(min(j, x) + 1)
    )


def krawtchouk_matrix(n: int, q: int) -> list[list[int]]:
    """Matrix K with K[i][j] = K_i(j), 0 <= i, j <= n."""
    return [[krawtchouk(i, j, n, q) for j in range(n + 1)] for i in range(n + 1)]


def macwilliams(counts: Sequence[int], n: int, k: int, q: int) -> tuple[int, ...]:
    """Weight spectrum of the dual of an [n, k]_q code with spectrum ``counts``.

    The result must come out as nonnegative integers; anything else means the
    input was not a genuine weight distribution and is reported as an error.
    """
    if len(counts) != n + 1:
        raise ValueError(f"expected {n + 1} counts, got {len(counts)}")
    if counts[0] != 1 or sum(counts) != q ** k:
        raise ValueError("counts are not a weight distribution of an [n, k]_q code")
    size = q ** k
    out = []
    for j in range(n + 1):
        acc = sum(counts[i] * krawtchouk(j, i, n, q) for i in range(n + 1))
        b, rem = divmod(acc, size)
        if rem or b < 0:
            raise ValueError(f"MacWilliams transform not integral at weight {j}")
        out.append(b)
    return tuple(out)


# ---------------------------------------------------------------------------
# Bounds and profile flags
# ---------------------------------------------------------------------------

def singleton_defect(n: int, k: int, d: int) -> int:
    return n - k + 1 - d


def griesmer_sum(d: int, k: int, q: int) -> int:
    return sum(math.ceil(d / q ** i) for i in range(k))


def a_d_formula(n: int, d: int, q: int) -> int:
    """Predicted number of minimum-weight words of an MDS [n, k, d]_q code."""
    return math.comb(n, d) * (q - 1)


def bounds_flags(C: LinearCode, d: Optional[int] = None) -> dict[str, bool]:
    """MDS / Griesmer flags for C; checks their equivalence when k >= 2."""
    if d is None:
        d = C.min_distance()
    is_mds = d == C.n - C.k + 1
    is_griesmer = C.n == griesmer_sum(d, C.k, C.q)
    if C.k >= 2 and is_mds != (is_griesmer and d <= C.q):
        raise AssertionError(
            f"MDS/Griesmer equivalence failed for {C.params()} with d={d}"
        )
    return {"is_mds": is_mds, "is_griesmer": is_griesmer}


@dataclass
class CodeProfile:
    """Everything the analyzer decides about one code, with provenance.

    ``flags[name]`` is ``{"value": bool | None, "provenance": str}`` where the
    provenance is "direct" for an exhaustive computation, "theorem_derived"
    when implied by the regularity lemmas, or "unavailable".
    """

    n: int
    k: int
    q: int
    d: int
    e: int
    s: int
    s_prime: int
    rho: Optional[int] = None
    flags: dict = dc_field(default_factory=dict)
    weight_distribution: tuple = ()

    def set_flag(self, name: str, value, provenance: str) -> None:
        self.flags[name] = {"value": value, "provenance": provenance}

    def flag(self, name: str):
        return self.flags[name]["value"]

    def validate(self) -> None:
        if self.rho is not None:
            if not self.e <= self.rho <= self.s:
                raise AssertionError(
                    f"e <= rho <= s violated: e={self.e}, rho={self.rho}, s={self.s}"
                )
            if "is_perfect" in self.flags and self.flag("is_perfect") != (self.rho == self.e):
                raise AssertionError("is_perfect must mean rho == e")

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "q": self.q,
            "d": self.d,
            "e": self.e,
            "s": self.s,
            "s_prime": self.s_prime,
            "rho": self.rho,
            "flags": self.flags,
            "weight_distribution": list(self.weight_distribution),
        }


# ---------------------------------------------------------------------------
# Combination
# ---------------------------------------------------------------------------

def direct_sum(*codes: LinearCode) -> LinearCode:
    """Block-diagonal direct sum; a single argument is returned unchanged."""
    if not codes:
        raise ValueError("direct_sum needs at least one code")
    first = codes[0]
    if len(codes) == 1:
        return first
    if any(c.field != first.field for c in codes):
        raise ValueError("direct sum requires a common field")
    n = sum(c.n for c in codes)
    G = np.zeros((sum(c.k for c in codes), n), dtype=np.int64)
    r = c0 = 0
    for c in codes:
        G[r:r + c.k, c0:c0 + c.n] = c.G.array
        r += c.k
        c0 += c.n
    return LinearCode(first.field, G)


# ---------------------------------------------------------------------------
# Code file format
# ---------------------------------------------------------------------------
#
#   field <p> <r> [poly c0 c1 ... 1]
#   n <length>
#   k <dimension>
#   <k rows of n element codes>
#
# '#' starts a comment; blank lines are ignored.  The writer emits the poly
# clause exactly when r > 1, so write -> parse -> write is a fixed point.

def format_code_text(C: LinearCode) -> str:
    F = C.field
    head = f"field {F.p} {F.r}"
    if F.r > 1:
        head += " poly " + " ".join(str(c) for c in F.modulus)
    lines = [head, f"n {C.n}", f"k {C.k}"]
    lines += [" ".join(str(x) for x in row) for row in C.G.array.tolist()]
    return "\n".join(lines) + "\n"


def parse_code_text(text: str) -> LinearCode:
    lines = []
    for raw in text.splitlines():
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append(stripped)
    if len(lines) < 4:
        raise ValueError("code file too short")
    head = lines[0].split()
    if head[0] != "field" or len(head) < 3:
        raise ValueError("expected 'field <p> <r> [poly ...]' header")
    p, r = int(head[1]), int(head[2])
    modulus = None
    if len(head) > 3:
        if head[3] != "poly":
            raise ValueError("expected 'poly' before modulus coefficients")
        modulus = [int(c) for c in head[4:]]
        if len(modulus) != r + 1:
            raise ValueError(f"modulus needs {r + 1} coefficients")
    F = field(p, r, modulus)
    def _intline(line, tag):
        parts = line.split()
        if len(parts) != 2 or parts[0] != tag:
            raise ValueError(f"expected '{tag} <int>', got {line!r}")
        return int(parts[1])
    n = _intline(lines[1], "n")
    k = _intline(lines[2], "k")
    rows = [[int(x) for x in line.split()] for line in lines[3:]]
    if len(rows) != k or any(len(row) != n for row in rows):
        raise ValueError(f"expected {k} rows of {n} entries")
    return LinearCode(F, rows)


def write_code_file(C: LinearCode, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_code_text(C))


def read_code_file(path) -> LinearCode:
    with open(path, "r", encoding="ascii") as fh:
        return parse_code_text(fh.read())
