"""Arithmetic in small finite fields GF(p^r), up to order 1024.

An element of GF(p^r) is a plain integer in ``[0, q)``: the integer
``sum(c_i * p**i)`` encodes the polynomial ``c_0 + c_1*x + ... + c_{r-1}*x^{r-1}``
with coefficients in GF(p).  Prime-field elements therefore encode as
themselves.

Field construction precomputes dense numpy tables (``ADD``, ``SUB``, ``MUL``,
``NEG``, ``INV``, ``TRACE``) plus a discrete-log pair for the multiplicative
group, so the enumeration kernels elsewhere in the package can operate on raw
integer arrays.  Multiplication goes through the log/antilog pair; addition is
componentwise base-p arithmetic.

Fields are immutable after construction and cached by ``field()``, so they can
be shared freely across threads.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple, Optional, Sequence

import numpy as np

#: Largest supported field order.  Dense q x q tables stay tiny below this.
MAX_ORDER = 1024


class FieldError(ValueError):
    """Invalid field parameters, or a field operation outside its domain."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a small positive integer."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# Polynomial helpers over GF(p).  Coefficient lists, constant term first.
# ---------------------------------------------------------------------------

def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m, over GF(p)."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * m[j]) % p
    a = a[:dm]
    return a + [0] * (dm - len(a))


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    """Trial division by all monic polynomials of degree <= deg(m)/2."""
    r = len(m) - 1
    if r < 1 or m[-1] != 1:
        return False
    if r == 1:
        return True
    for t in range(1, r // 2 + 1):
        for enc in range(p ** t):
            div = _decode(enc, p, t) + [1]
            if not any(_poly_rem(m, div, p)):
                return False
    return True


def _decode(code: int, p: int, r: int) -> list[int]:
    digits = []
    for _ in range(r):
        code, c = divmod(code, p)
        digits.append(c)
    return digits


def _encode(digits: Sequence[int], p: int) -> int:
    code = 0
    for c in reversed(digits):
        code = code * p + (c % p)
    return code


def default_modulus(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree r over GF(p).

    Candidates are ordered by their non-leading coefficients read as a base-p
    integer, low-order digit first, which makes the choice reproducible
    without any table of special polynomials.
    """
    for enc in range(p ** r):
        cand = _decode(enc, p, r) + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial of degree {r} over GF({p})")  # pragma: no cover


class DiagonalQuadraticCount(NamedTuple):
    """Solution count of a1*x1^2 + a2*x2^2 = t, with the all-nonzero subcount."""

    count: int
    nonzero_count: int
    solutions: list[tuple[int, int]]


class GF:
    """The finite field GF(p^r) with a fixed monic irreducible modulus.

    Use the :func:`field` / :func:`field_of_order` factories rather than
    constructing directly; they validate arguments and cache instances.
    """

    def __init__(self, p: int, r: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise FieldError(f"p = {p} is not prime")
        if r < 1:
            raise FieldError(f"extension degree r = {r} must be >= 1")
        q = p ** r
        if q > MAX_ORDER:
            raise FieldError(f"field order {q} exceeds the supported cap {MAX_ORDER}")
        if modulus is None:
            modulus = default_modulus(p, r)
        else:
            modulus = tuple(int(c) % p for c in modulus)
            if len(modulus) != r + 1 or modulus[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {r}")
            if not _is_irreducible(modulus, p):
                raise FieldError(f"modulus {list(modulus)} is reducible over GF({p})")

        self.p = p
        self.r = r
        self.q = q
        self.modulus: tuple[int, ...] = tuple(modulus)

        self._build_tables()

    # -- construction ------------------------------------------------------

    def _raw_mul(self, a: int, b: int) -> int:
        prod = _poly_mul(_decode(a, self.p, self.r), _decode(b, self.p, self.r), self.p)
        return _encode(_poly_rem(prod, self.modulus, self.p), self.p)

    def _build_tables(self) -> None:
        p, r, q = self.p, self.r, self.q

        # Digit matrix: row a = base-p digits of a.
        codes = np.arange(q, dtype=np.int64)
        digits = np.empty((q, r), dtype=np.int64)
        rest = codes.copy()
        for i in range(r):
            digits[:, i] = rest % p
            rest //= p
        pow_p = p ** np.arange(r, dtype=np.int64)

        self.ADD = ((digits[:, None, :] + digits[None, :, :]) % p) @ pow_p
        self.NEG = ((-digits) % p) @ pow_p
        self.SUB = self.ADD[:, self.NEG]

        # Primitive element: smallest code of multiplicative order q - 1.
        primes = list(factorize(q - 1)) if q > 2 else []
        xi = 1
        for g in range(1, q):
            if all(self._raw_pow(g, (q - 1) // ell) != 1 for ell in primes):
                xi = g
                break
        self.primitive_element = xi

        antilog = np.empty(q - 1, dtype=np.int64)
        log = np.full(q, -1, dtype=np.int64)
        v = 1
        for i in range(q - 1):
            antilog[i] = v
            log[v] = i
            v = self._raw_mul(v, xi)
        if v != 1:  # pragma: no cover - guarded by the order test above
            raise FieldError("primitive element search failed")
        self.antilog = antilog
        self.log = log

        # Multiplication through the log pair; zero row/column forced to 0.
        self.MUL = np.zeros((q, q), dtype=np.int64)
        s = (log[1:, None] + log[None, 1:]) % (q - 1)
        self.MUL[1:, 1:] = antilog[s]

        self.INV = np.zeros(q, dtype=np.int64)
        self.INV[1:] = antilog[(-log[1:]) % (q - 1)]

        # Absolute trace to GF(p): sum of the r Frobenius conjugates.
        trace = np.zeros(q, dtype=np.int64)
        for a in range(q):
            acc = 0
            conj = a
            for _ in range(r):
                acc = int(self.ADD[acc, conj])
                conj = self._raw_pow(conj, p)
            if acc >= p:  # pragma: no cover - trace always lands in GF(p)
                raise FieldError("trace left the prime subfield")
            trace[a] = acc
        self.TRACE = trace

    def _raw_pow(self, a: int, e: int) -> int:
        out, base = 1, a
        while e:
            if e & 1:
                out = self._raw_mul(out, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return out

    # -- scalar operations --------------------------------------------------

    def _check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldError(f"element {a} outside [0, {self.q})")
        return a

    def add(self, a: int, b: int) -> int:
        return int(self.ADD[self._check(a), self._check(b)])

    def sub(self, a: int, b: int) -> int:
        return int(self.SUB[self._check(a), self._check(b)])

    def neg(self, a: int) -> int:
        return int(self.NEG[self._check(a)])

    def mul(self, a: int, b: int) -> int:
        return int(self.MUL[self._check(a), self._check(b)])

    def inv(self, a: int) -> int:
        if self._check(a) == 0:
            raise FieldError("zero has no multiplicative inverse")
        return int(self.INV[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a**e with 0**0 = 1; negative exponents invert (a must be nonzero)."""
        self._check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise FieldError("zero has no multiplicative inverse")
            return 0
        return int(self.antilog[(int(self.log[a]) * e) % (self.q - 1)])

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def trace(self, a: int) -> int:
        """Absolute trace into GF(p), returned as an integer in [0, p)."""
        return int(self.TRACE[self._check(a)])

    def quadratic_character(self, a: int) -> int:
        """+1 if a is a nonzero square, -1 if a nonzero non-square.

        Defined for odd q and nonzero a only; anything else is rejected.
        """
        if self.q % 2 == 0:
            raise FieldError("quadratic character is trivial in characteristic 2")
        if self._check(a) == 0:
            raise FieldError("quadratic character undefined at 0")
        return 1 if int(self.log[a]) % 2 == 0 else -1

    # -- iteration and identity ---------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.q)

    @property
    def units(self) -> range:
        return range(1, self.q)

    def spec(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.p, self.r, self.modulus)

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and self.spec() == other.spec()

    def __hash__(self) -> int:
        return hash(self.spec())

    def __repr__(self) -> str:
        if self.r == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.r})"


@lru_cache(maxsize=None)
def _field_cached(p: int, r: int, modulus: Optional[tuple[int, ...]]) -> GF:
    return GF(p, r, modulus)


def field(p: int, r: int = 1, modulus: Optional[Sequence[int]] = None) -> GF:
    """Construct (or fetch the cached) GF(p^r) with the given or default modulus."""
    key = tuple(int(c) for c in modulus) if modulus is not None else None
    return _field_cached(p, r, key)


def field_of_order(q: int) -> GF:
    """GF(q) for a prime power q, with the default modulus."""
    fac = factorize(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, r), = fac.items()
    return field(p, r)


def count_diagonal_quadratic(F: GF, a1: int, a2: int, t: int) -> DiagonalQuadraticCount:
    """Brute-force count of solutions of a1*x1^2 + a2*x2^2 = t over GF(q), q odd.

    Returns the total count, the count with both coordinates nonzero, and the
    full solution list.  The total always equals q - chi(-a1*a2); callers
    cross-check that identity rather than this function asserting it.
    """
    if F.q % 2 == 0:
        raise FieldError("diagonal quadratic counting requires odd q")
    for name, v in (("a1", a1), ("a2", a2), ("t", t)):
        if F._check(v) == 0:
            raise FieldError(f"{name} must be nonzero")
    sq = [F.mul(x, x) for x in F.elements]
    solutions = []
    nonzero = 0
    for x1 in F.elements:
        lhs1 = F.mul(a1, sq[x1])
        for x2 in F.elements:
            if F.add(lhs1, F.mul(a2, sq[x2])) == t:
                solutions.append((x1, x2))
                if x1 and x2:
                    nonzero += 1
    return DiagonalQuadraticCount(len(solutions), nonzero, solutions)
