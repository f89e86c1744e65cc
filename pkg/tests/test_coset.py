"""Coset tables, covering radius, CR/UPWS verdicts, implication harness."""

from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from codescope.caps import CapExceeded
from codescope.code import LinearCode
from codescope.constructions import (
    ders,
    dual_repetition,
    hamming,
    hyperoval_code,
    preset_matrix,
    repetition,
    simplex,
)
from codescope.coset import (
    RegularityContradiction,
    coset_distribution,
    coset_weight_distributions,
    covering_radius,
    coset_leader_weights,
    full_profile,
    is_completely_regular,
    is_upws,
    lemma_implications,
    solve_packing_coefficients,
    syndrome_index,
    _dual_character_table,
    _primal_table,
)
from codescope.gf import field, field_of_order


def naive_coset_table(C: LinearCode):
    """Oracle: all q^n vectors in plain Python, bucketed by syndrome index."""
    F, H = C.field, C.parity_check()
    S = C.q ** (C.n - C.k)
    hist = [[0] * (C.n + 1) for _ in range(S)]
    Hrows = H.to_lists()
    for v in product(range(C.q), repeat=C.n):
        sidx = 0
        for j, row in enumerate(Hrows):
            acc = 0
            for a, b in zip(row, v):
                acc = F.add(acc, F.mul(a, b))
            sidx += acc * C.q ** j
        hist[sidx][sum(1 for x in v if x)] += 1
    return hist


def naive_covering_radius(C: LinearCode):
    words = []
    for info in product(range(C.q), repeat=C.k):
        word = [0] * C.n
        for i, coef in enumerate(info):
            if coef:
                for j in range(C.n):
                    word[j] = C.field.add(word[j], C.field.mul(coef, C.G.array[i][j]))
        words.append(word)
    best = 0
    for v in product(range(C.q), repeat=C.n):
        dist = min(sum(1 for a, b in zip(v, w) if a != b) for w in words)
        best = max(best, dist)
    return best


@pytest.mark.parametrize(
    "make, expected",
    [
        (lambda: repetition(3, 4), 2),   # n - ceil(n/q)
        (lambda: repetition(2, 6), 3),   # floor(n/2)
        (lambda: hamming(3), 1),
        (lambda: simplex(4), 3),
    ],
)
def test_covering_radius_examples(make, expected):
    assert covering_radius(make()) == expected


@pytest.mark.parametrize(
    "make",
    [
        lambda: repetition(3, 4),
        lambda: hamming(3),
        lambda: preset_matrix("selfdual_4_2_3_4"),
        lambda: LinearCode(field(5), [[1, 2, 0], [0, 1, 1]]),
    ],
)
def test_covering_radius_matches_naive(make):
    C = make()
    assert covering_radius(C) == naive_covering_radius(C)


def test_covering_radius_cap():
    with pytest.raises(CapExceeded):
        covering_radius(hyperoval_code(8), syndrome_cap=1000)


def test_leader_weights_complete():
    C = hamming(3)
    leaders = coset_leader_weights(C)
    assert leaders.min() >= 0 and leaders[0] == 0
    table = coset_weight_distributions(C)
    assert np.array_equal(leaders, table.leader_weights)


def test_coset_distribution_of_two_repetition_cosets():
    C = repetition(3, 4)
    assert coset_distribution(C, (0, 0, 1, 1)) == (0, 0, 2, 0, 1)  # distances 2,2,4
    assert coset_distribution(C, (1, 2, 0, 0)) == (0, 0, 1, 2, 0)  # distances 2,3,3


@pytest.mark.parametrize("q", [3, 4, 5])
def test_two_column_code_cosets(q):
    C = LinearCode(field_of_order(q), [[1, 1]])
    table = coset_weight_distributions(C)
    for s in range(q):
        row = tuple(int(x) for x in table.hist[s])
        leader = int(table.leader_weights[s])
        if leader == 0:
            assert row == (1, 0, q - 1)
        else:
            assert row == (0, 2, q - 2)


@pytest.mark.parametrize(
    "make",
    [
        lambda: repetition(3, 4),
        lambda: hamming(3),
        lambda: LinearCode(field(5), [[1, 0, 1, 1], [0, 1, 2, 3]]),
        lambda: simplex(4),
        lambda: repetition(9, 3),
    ],
)
def test_primal_table_matches_naive(make):
    C = make()
    table = coset_weight_distributions(C, engine="primal")
    assert table.hist.tolist() == naive_coset_table(C)
    assert table.column_sums_ok()


@pytest.mark.parametrize(
    "make",
    [
        lambda: hyperoval_code(4),
        lambda: simplex(4),
        lambda: hamming(4),
        lambda: preset_matrix("selfdual_4_2_3_4"),
        lambda: repetition(2, 6),
        lambda: dual_repetition(8, 3),
    ],
)
def test_engine_equivalence_char2(make):
    C = make()
    t1 = _primal_table(C, 2 ** 31)
    t2 = _dual_character_table(C, 2 ** 31)
    assert np.array_equal(t1.hist, t2.hist)


def test_dual_character_rejects_odd_characteristic():
    from codescope.gf import FieldError

    with pytest.raises(FieldError):
        _dual_character_table(hamming(3), 2 ** 31)


def test_table_caps():
    with pytest.raises(CapExceeded):
        coset_weight_distributions(hyperoval_code(8), engine="primal", primal_cap=10 ** 6)
    with pytest.raises(CapExceeded):
        _dual_character_table(simplex(8), 10 ** 3)
    with pytest.raises(CapExceeded):
        coset_weight_distributions(simplex(8), engine="auto", primal_cap=10 ** 6)


def test_syndrome_representatives_consistent():
    for C in (hamming(3), simplex(4)):
        from codescope.coset import _representative_solver

        rep = _representative_solver(C)
        for s in range(C.q ** (C.n - C.k)):
            assert syndrome_index(C, rep(s)) == s


def test_is_completely_regular():
    ok, wit = is_completely_regular(hamming(3))
    assert ok and wit is None
    C = repetition(3, 4)
    ok, wit = is_completely_regular(C)
    assert not ok
    # the witness pair must be genuine: same leader weight, different spectra
    assert wit["leader_weight"] == 2
    da = coset_distribution(C, wit["vector_a"])
    db = coset_distribution(C, wit["vector_b"])
    assert list(da) == wit["distribution_a"] and list(db) == wit["distribution_b"]
    assert da != db


def test_upws_direct_and_fallback():
    C = preset_matrix("rs_5_2_4_5")  # [5,2,4]_5, n <= q
    table = coset_weight_distributions(C)
    res = is_upws(C, table, rho=table.rho, s=C.external_distance())
    assert res.verdict and res.provenance == "direct"
    # verify the packing identity on every coset, not just distinct rows
    for row in table.hist:
        assert sum(b * int(x) for b, x in zip(res.beta, row)) == 1

    D = ders(5, 3)  # [6,3,4]_5
    table = coset_weight_distributions(D)
    res = is_upws(D, table, rho=table.rho, s=D.external_distance())
    assert not res.verdict and res.beta is None

    E = simplex(5)
    no_table = is_upws(E, table=None, rho=covering_radius(E), s=E.external_distance())
    assert no_table.provenance == "rho_equals_s" and not no_table.verdict


def test_upws_agreement_guard():
    C = preset_matrix("rs_5_2_4_5")
    table = coset_weight_distributions(C)
    with pytest.raises(RegularityContradiction):
        is_upws(C, table, rho=3, s=4)  # fabricated s disagrees with the direct solve


def test_solve_packing_coefficients():
    assert solve_packing_coefficients([[2, 0], [0, 4]]) == [Fraction(1, 2), Fraction(1, 4)]
    assert solve_packing_coefficients([[1, 1], [2, 2]]) is None  # 1 = 2 impossible
    beta = solve_packing_coefficients([[1, 0, 1], [0, 1, 1]])
    assert beta is not None and len(beta) == 3


def test_perfect_iff_rho_equals_e():
    for C, perfect in ((hamming(3), True), (repetition(2, 5), True), (repetition(2, 6), False)):
        res = full_profile(C)
        assert res.profile.flag("is_perfect") == perfect
        assert (res.profile.rho == res.profile.e) == perfect


def test_lemma_harness_on_examples():
    res = full_profile(hamming(3))
    fired = {c["id"]: c for c in res.implications}
    assert fired["ii"]["fired"] and fired["ii"]["holds"]  # d = 3 >= 2s-1 = 1
    res = full_profile(ders(4, 2))  # [5,2,4]_4: rho = s = 3, UPWS, e+1 = 2 != rho
    byid = {c["id"]: c for c in res.implications}
    assert res.profile.rho == 3 and res.profile.s == 3
    assert not byid["v"]["fired"]
    assert byid["iii"]["fired"] and byid["iii"]["holds"]


def test_lemma_harness_rejects_contradiction():
    C = hamming(3)
    table = coset_weight_distributions(C)
    with pytest.raises(RegularityContradiction):
        # claim CR but rho != s: implication (iv) must fire and fail
        lemma_implications(C, d=3, e=1, rho=1, s=2, cr=True, upws=True, table=None)


def test_full_profile_hexacode():
    res = full_profile(hyperoval_code(4))
    p = res.profile
    assert (p.d, p.e, p.s, p.s_prime, p.rho) == (4, 1, 2, 2, 2)
    assert p.flag("is_cr") and p.flag("is_upws") and p.flag("is_quasi_perfect")
    assert not p.flag("is_perfect") and p.flag("is_mds")
    assert res.beta is not None


def test_full_profile_without_table_uses_theorems():
    C = hyperoval_code(8)
    res = full_profile(C, primal_cap=10 ** 6)  # too small for 8^10
    assert res.table is None
    assert res.profile.rho == 6 and res.profile.s == 7
    assert res.profile.flags["is_upws"] == {"value": False, "provenance": "rho_equals_s"}
    assert res.profile.flags["is_cr"] == {"value": False, "provenance": "theorem_derived"}


def test_table_json_export_shape():
    table = coset_weight_distributions(hamming(3))
    payload = table.to_json_dict()
    assert payload["syndromes"] == 9
    assert payload["engine"] == "primal"
    total = sum(g["cosets"] for g in payload["groups"])
    assert total == 9


def test_zero_row_is_code_spectrum():
    C = simplex(4)
    table = coset_weight_distributions(C)
    assert tuple(int(x) for x in table.hist[0]) == C.weight_distribution()


def test_workers_do_not_change_tables():
    a = _primal_table(simplex(5), 2 ** 31, workers=1)
    b = _primal_table(simplex(5), 2 ** 31, workers=8)
    assert np.array_equal(a.hist, b.hist)
