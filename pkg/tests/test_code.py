"""Codes, spectra, MacWilliams, bounds, and the text format."""

from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from codescope.caps import CapExceeded
from codescope.code import (
    LinearCode,
    a_d_formula,
    bounds_flags,
    direct_sum,
    format_code_text,
    griesmer_sum,
    krawtchouk,
    macwilliams,
    parse_code_text,
)
from codescope.constructions import hamming, hyperoval_code, preset_matrix, repetition, simplex
from codescope.gf import field, field_of_order
from codescope.linalg import Matrix


def naive_spectrum(C: LinearCode):
    """Oracle: enumerate information vectors in plain Python, no kernels."""
    F, G = C.field, C.G.to_lists()
    counts = [0] * (C.n + 1)
    for info in product(range(C.q), repeat=C.k):
        word = [0] * C.n
        for i, coef in enumerate(info):
            if coef:
                for j in range(C.n):
                    word[j] = F.add(word[j], F.mul(coef, G[i][j]))
        counts[sum(1 for x in word if x)] += 1
    return tuple(counts)


def test_construction_rejects_trivial_and_dependent():
    F = field(3)
    with pytest.raises(ValueError):
        LinearCode(F, [[1, 0], [0, 1]])  # k = n
    with pytest.raises(ValueError):
        LinearCode(F, [[1, 2, 0], [2, 1, 0]])  # dependent rows


def test_dual_examples():
    H3 = hamming(3)
    assert H3.dual().same_code(H3)
    R = repetition(5, 4)
    D = R.dual()
    assert (D.n, D.k, D.min_distance()) == (4, 3, 2)
    rs = preset_matrix("rs_5_2_4_5")
    dd = rs.dual()
    assert (dd.n, dd.k, dd.min_distance()) == (5, 3, 3)
    assert rs.dual().dual().same_code(rs)


def test_weight_distribution_examples():
    assert preset_matrix("code_4_2_3_5").weight_distribution() == (1, 0, 0, 16, 8)
    S4 = simplex(4)
    W = S4.weight_distribution()
    assert W == (1, 0, 0, 0, 15, 0)  # equidistant, A_4 = q^2 - 1
    for q in (3, 4, 5):
        C = LinearCode(field_of_order(q), [[1, 1]])
        assert C.weight_distribution() == (1, 0, q - 1)


@pytest.mark.parametrize(
    "make",
    [
        lambda: hamming(3),
        lambda: repetition(4, 5),
        lambda: preset_matrix("selfdual_4_2_3_4"),
        lambda: simplex(5),
        lambda: hyperoval_code(4),
    ],
)
def test_spectrum_matches_naive_enumeration(make):
    C = make()
    assert C.weight_distribution() == naive_spectrum(C)


def test_spectrum_route_selection_agrees():
    # [9,7,3]_8 is cheaper through its dual; force both routes and compare
    C = hamming(8)
    via_dual = macwilliams(C.dual()._spectrum_direct(10 ** 6), C.n, C.n - C.k, C.q)
    assert C.weight_distribution() == via_dual
    assert C.min_distance() == 3


def test_spectrum_cap():
    with pytest.raises(CapExceeded):
        hamming(8)._spectrum_direct(cap=10 ** 3)


def test_macwilliams_self_dual_fixed_point():
    H3 = hamming(3)
    W = H3.weight_distribution()
    assert W == (1, 0, 0, 8, 0)
    assert macwilliams(W, 4, 2, 3) == W


def test_macwilliams_both_ways_against_enumeration():
    R = repetition(5, 4)
    D = R.dual()
    WR, WD = naive_spectrum(R), naive_spectrum(D)
    assert macwilliams(WR, 4, 1, 5) == WD
    assert macwilliams(WD, 4, 3, 5) == WR


def test_macwilliams_rejects_bad_input():
    with pytest.raises(ValueError):
        macwilliams((1, 0, 1, 1), 3, 1, 2)  # sum != q^k
    with pytest.raises(ValueError):
        macwilliams((0, 2, 0, 0), 3, 1, 2)  # A_0 != 1
    with pytest.raises(ValueError):
        # no [3,2]_2 code has three weight-1 words; transform is non-integral
        macwilliams((1, 3, 0, 0), 3, 2, 2)


def test_krawtchouk_orthogonality():
    # sum_j K_i(j) K_j(l) = q^n delta_{il}: transform is an involution up to q^n
    n, q = 5, 3
    for i in range(n + 1):
        for l in range(n + 1):
            acc = sum(krawtchouk(i, j, n, q) * krawtchouk(j, l, n, q) for j in range(n + 1))
            assert acc == (q ** n if i == l else 0)


def test_external_distance_and_s_prime():
    assert hyperoval_code(4).s_prime() == 2
    assert hamming(3).external_distance() == 1
    assert repetition(2, 6).dual().s_prime() == 3  # weights 2, 4, 6
    assert simplex(5).external_distance() == 4


def test_bounds_profile():
    F5 = field(5)
    C = LinearCode(F5, [[1, 0, 0, 1, 1, 1], [0, 1, 0, 1, 2, 3], [0, 0, 1, 1, 3, 4]])
    d = C.min_distance()
    assert d == 4
    assert griesmer_sum(4, 3, 5) == 6
    flags = bounds_flags(C)
    assert flags == {"is_mds": True, "is_griesmer": True}
    flags = bounds_flags(repetition(2, 6).dual())
    assert flags["is_mds"] is True


def test_a_d_formula():
    assert a_d_formula(4, 3, 5) == 16
    assert a_d_formula(6, 5, 4) == 18  # exceeds 4^2 codewords: nonexistence argument
    assert a_d_formula(7, 7, 5) == 4  # repetition: the q-1 scalar multiples


def test_is_self_dual():
    F5 = field(5)
    assert LinearCode(F5, [[1, 2]]).is_self_dual()
    assert not preset_matrix("code_4_2_3_5").is_self_dual()
    assert preset_matrix("selfdual_4_2_3_4").is_self_dual()


def test_direct_sum():
    F5 = field(5)
    two = LinearCode(F5, [[1, 2]])
    D = direct_sum(two, two)
    assert (D.n, D.k, D.min_distance()) == (4, 2, 2)
    assert D.is_self_dual()
    assert not bounds_flags(D)["is_mds"]
    assert direct_sum(two) is two
    with pytest.raises(ValueError):
        direct_sum(two, LinearCode(field(3), [[1, 2]]))
    binary = direct_sum(LinearCode(field(2), [[1, 1]]), LinearCode(field(2), [[1, 1]]))
    assert not bounds_flags(binary, binary.min_distance())["is_mds"]


def test_systematic_form():
    C = simplex(5)
    Gs, perm = C.systematic_form()
    k = C.k
    assert Gs.array[:, :k].tolist() == Matrix.identity(C.field, k).array.tolist()
    assert LinearCode(C.field, Gs).min_distance() == C.min_distance()


def test_code_text_round_trip_fixed():
    C = hyperoval_code(4)
    text = format_code_text(C)
    assert text.splitlines()[0] == "field 2 2 poly 1 1 1"
    C2 = parse_code_text(text)
    assert C2.same_code(C) and format_code_text(C2) == text
    prime = format_code_text(preset_matrix("code_4_2_3_5"))
    assert prime.splitlines()[0] == "field 5 1"


def test_code_text_comments_and_errors():
    text = "# a comment\nfield 3 1\nn 4\nk 2\n1 1 1 0  # trailing\n\n1 2 0 1\n"
    C = parse_code_text(text)
    assert (C.n, C.k, C.q) == (4, 2, 3)
    with pytest.raises(ValueError):
        parse_code_text("field 3 1\nn 4\nk 2\n1 1 1 0\n")  # missing row
    with pytest.raises(ValueError):
        parse_code_text("field 3 1\nn 4\nk 1\n1 1 1\n")  # short row
    with pytest.raises(ValueError):
        parse_code_text("campo 3 1\nn 2\nk 1\n1 1\n")


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_code_text_round_trip_random(data):
    q = data.draw(st.sampled_from([2, 3, 4, 5, 9]))
    F = field_of_order(q)
    n = data.draw(st.integers(2, 6))
    k = data.draw(st.integers(1, n - 1))
    entries = data.draw(
        st.lists(
            st.lists(st.integers(0, q - 1), min_size=n, max_size=n),
            min_size=k, max_size=k,
        )
    )
    M = Matrix(F, entries)
    if M.rank() != k:
        return
    C = LinearCode(F, M)
    text = format_code_text(C)
    C2 = parse_code_text(text)
    assert format_code_text(C2) == text
    assert C2.G == C.G and C2.field == C.field
