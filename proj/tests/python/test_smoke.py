import cmath
import math
from fractions import Fraction

import pytest

import subconvex as sc


@pytest.fixture(scope="module")
def delta():
    return sc.build_form(12, 400)


def test_tau_values(delta):
    assert [delta.coefficient(n) for n in range(1, 6)] == ["1", "-24", "252", "-1472", "4830"]
    assert delta.eigenvalue(1) == 1.0
    assert len(delta.eigenvalues()) == delta.n_max


def test_gauss_sums():
    for chi in sc.primitive_characters(13):
        assert abs(sc.gauss_sum(chi)) ** 2 == pytest.approx(13.0, rel=1e-12)


def test_character_sum_closed_form():
    chi = sc.DirichletCharacter(7, 1)
    for conv in ("plus", "minus"):
        brute = sc.char_sum_bruteforce(7, 4, chi, 5, 3, conv)
        closed = sc.char_sum_closed(7, 4, chi, 5, 3, conv)
        assert abs(brute - closed) < 1e-9


def test_fixture_i_sqrt3():
    chi = sc.DirichletCharacter(3, 1)
    assert abs(sc.char_sum_bruteforce(3, 1, chi, 1, 1) - 1j * math.sqrt(3)) < 1e-12


def test_voronoi():
    form = sc.build_form(12, 2000)
    direct, dual = sc.voronoi(form, 0, 1, 50.0, truncation=2000)
    assert abs(direct - dual) <= 1e-6 * (abs(direct) + 1)


def test_exponent():
    e = sc.exponent("0", "paper")
    assert e["final_exponent"] == Fraction(27, 28)
    assert e["eta"] == Fraction(1, 14)
    h = sc.exponent("7/64", "h_theta")
    assert h["final_exponent"] == Fraction(19, 20) + Fraction(202, 100) * Fraction(7, 64)


def test_errors(delta):
    with pytest.raises(sc.DomainError):
        sc.exponent("1/2", "paper")
    with pytest.raises(sc.NonPrimitive):
        sc.char_sum_bruteforce(5, 2, sc.DirichletCharacter(5, 0), 1, 1)
    with pytest.raises(sc.Error):
        sc.voronoi(delta, 2, 4, 50.0)


def test_suite_rows():
    rows, notes, failures = sc.run_suite("exponent,gauss")
    assert failures == 0
    assert notes
    assert sum(r["suite"] == "gauss" for r in rows) == 75


def test_scan_deterministic():
    a = sc.scan(12, 16, [11, 13], n_start=8, points=3)
    b = sc.scan(12, 16, [11, 13], n_start=8, points=3)
    assert a == b
    assert len(a) == 9 + 11
    assert all(math.isfinite(r["ratio"]) for r in a)
