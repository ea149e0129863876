from fractions import Fraction

import pytest

import dentedhex as dh


def test_counts_match_known_values():
    assert dh.count(3, 4, 2) == 490
    assert dh.count(1, 1, 1, method="brute") == 2
    assert dh.count(2, 2, 2, method="lgv") == 20
    assert dh.count(2, 2, 2, method="formula") == 20
    assert dh.macmahon(10, 10, 10) == 9265037718181937012241727284450000
    assert dh.count(10, 10, 10) == dh.macmahon(10, 10, 10)


def test_dented_region_counts():
    assert dh.count(3, 4, 2, 5, [3, 6], [2, 5, 6]) == 66066000
    assert dh.count(2, 2, 2, 2, [1], [1]) == 0
    rep = dh.cross_check(1, 4, 3, 2, [2], [3])
    assert rep["agree"]
    assert rep["counts"]["brute"] == rep["counts"]["lgv"] == rep["counts"]["formula"] == 7938


def test_tileability():
    assert dh.tileable(4, 3, 2, 4, [1, 4], [3, 4])
    assert not dh.tileable(2, 2, 2, 2, [1], [1])
    assert dh.mu(2, 2, 2, 2, [1], [1], 1) == 2


def test_ratios_are_fractions():
    r = dh.main_ratio(2, 4, 3, 2, [2], [3])
    assert isinstance(r, Fraction)
    assert dh.main_ratio(0, 4, 3, 2, [2], [3]) == 1
    assert r * 315 == dh.count(2, 4, 3, 2, [2], [3])
    assert dh.twodents_ratio(2, 4, 3, 1, 1, 2, 1) == dh.main_ratio(2, 4, 3, 2, [2], [3])


def test_closed_forms():
    assert dh.count_one_sided(2, 2, 2, [2]) == 75
    assert dh.count_level_dents(1, 3, 3, 2, 1, 1, 2) == 12348
    assert dh.count_splitline_n1(1, 2, 1, 1, 1, 1) == dh.count_bruteforce(1, 2, 1, 2, [2], [2])


def test_lgv_matrix_shape():
    m = dh.lgv_matrix(1, 1, 1)
    assert m == [[2]]
    m7 = dh.lgv_matrix(3, 4, 2, 5, [3, 6], [2, 5, 6])
    assert len(m7) == 7 and all(len(row) == 7 for row in m7)


def test_renders():
    svg = dh.render_svg(3, 4, 2)
    assert svg.startswith("<svg") and svg.count('<polygon class="tri ') == 52
    art = dh.render_ascii(1, 1, 1)
    assert art == "AVA\nVAV\n"


def test_invalid_params_raise():
    with pytest.raises(ValueError):
        dh.count(2, 2, 2, 2, [9], [])
    with pytest.raises(ValueError):
        dh.count(0, 2, 2, 2, [1], [1])
