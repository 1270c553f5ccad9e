"""Counting engine against frozen anchors.

Every number here was cross-validated before freezing: the closed forms
against the label-enumeration route (method="both" asserts per-partition
agreement), and the desk-scale entries additionally against brute-force
matrix-group classification (see test_oracle / the acceptance suite).
"""

from fractions import Fraction

import pytest

from realclasses import counts
from realclasses.counts import (count, genfun_real_gl, gl_nu, pgl_nu, psl_nu,
                                real_gl, real_pgl, real_psl, real_sl,
                                real_slq, section13_table, sigma_nu, sl_nu,
                                sl_regime, strongly_real_gl,
                                strongly_real_pgl, strongly_real_psl,
                                strongly_real_sl, strongly_real_slq,
                                verify_counts, zeta_real_gl, zeta_real_sl)

BOTH = dict(method="both")


# ---------------------------------------------------------------------------
# per-partition building blocks

def test_gl_nu_values():
    assert gl_nu((2,), 3) == 4          # type 1^2: n_{3,2}
    assert gl_nu((0, 1), 3) == 2        # type 2^1: n_{3,1}
    assert gl_nu((1, 1), 5) == 2 * 2    # one degree-1 factor per slot


def test_sl_nu_three_cases():
    # q even (or no odd slot): the full product, here n_{4,1} = 1
    assert sl_nu((0, 1), 4) == 1
    # an odd slot of odd degree present: half the product
    assert sl_nu((1, 1), 3) == 2        # (n_{3,1} * n_{3,1}) / 2
    assert sl_nu((3,), 3) == 3          # n_{3,3} / 2
    assert sl_nu((1,), 3) == 1
    # odd slots all of even degree: f_nu * q^(n_i/2 - 1) per odd slot
    assert sl_nu((2,), 3) == 3          # ((q+1) + (q-1))/2 * q^0
    # consistency: these assemble to the real count of SL_3(3)
    assert sl_nu((3,), 3) + sl_nu((1, 1), 3) + sl_nu((0, 0, 1), 3) == 6


def test_sigma_nu_two_adic_rule():
    # sigma = 1 iff q odd and the gcd of the multiplicities is odd
    assert sigma_nu((5,), 3) == 1       # gcd 5
    assert sigma_nu((0, 0, 2), 3) == 0  # type 3^2: multiplicity gcd 2
    assert sigma_nu((2,), 3) == 0       # gcd 2
    assert sigma_nu((2, 1), 3) == 1     # gcd(2, 1) = 1
    assert sigma_nu((5,), 4) == 0       # q even: never
    assert sigma_nu((0, 3), 3) == 1     # type 2^3: gcd of multiplicities 3


def test_psl_nu_is_fraction():
    assert isinstance(psl_nu((2,), 2, 3), Fraction)
    assert isinstance(pgl_nu((2,), 3), Fraction)


# ---------------------------------------------------------------------------
# GL

@pytest.mark.parametrize("n,q,want", [
    (2, 2, 3), (2, 3, 6), (2, 5, 8), (3, 4, 6), (6, 3, 124),
])
def test_real_gl_anchors(n, q, want):
    assert real_gl(n, q, **BOTH).total == want
    assert strongly_real_gl(n, q).total == want


@pytest.mark.parametrize("n,q,want", [
    (2, 3, 4), (2, 5, 6), (3, 3, 0), (4, 5, 36),
])
def test_zeta_real_gl_anchors(n, q, want):
    assert zeta_real_gl(n, q, **BOTH).total == want


def test_zeta_real_gl_vanishes_in_odd_dimension():
    for q in (3, 5, 7, 9):
        for n in (1, 3, 5):
            assert zeta_real_gl(n, q).total == 0


def test_zeta_real_gl_rejects_even_q():
    with pytest.raises(ValueError):
        zeta_real_gl(2, 4)


def test_zeta_real_gl_independent_of_zeta():
    for z in (3, 5, 6):
        field = counts.field_for_order(7)
        if field.is_square(z):
            continue
        assert zeta_real_gl(2, 7, method="enumeration", zeta=z).total == 8


# ---------------------------------------------------------------------------
# SL

@pytest.mark.parametrize("n,q,want", [
    (2, 3, 3), (2, 5, 9), (2, 7, 7), (2, 9, 13), (3, 4, 8),
    (4, 3, 29), (6, 3, 78), (6, 5, 268), (6, 7, 552),
])
def test_real_sl_anchors(n, q, want):
    assert real_sl(n, q, **BOTH).total == want


@pytest.mark.parametrize("n,q,want", [
    (2, 3, 2), (2, 5, 2), (2, 7, 2), (2, 9, 2),
    (4, 3, 29), (6, 3, 51), (6, 5, 97), (6, 7, 163),
])
def test_strongly_real_sl_anchors(n, q, want):
    assert strongly_real_sl(n, q).total == want


def test_strongly_real_sl_engine_polynomial_n6():
    # 2q^2 + 7q + 10 + 2*gcd(q-1,3), the odd-block-root criterion summed
    # over types (independently derived; brute-force checked at n=2,4)
    import math
    for q in (3, 5, 7):
        want = 2 * q * q + 7 * q + 10 + 2 * math.gcd(q - 1, 3)
        assert strongly_real_sl(6, q).total == want


@pytest.mark.parametrize("n,q,zeta,want", [
    (2, 3, None, 1), (2, 7, 3, 0), (2, 7, 6, 1), (2, 9, None, 0),
    (4, 3, None, 17),
])
def test_zeta_real_sl_anchors(n, q, zeta, want):
    assert zeta_real_sl(n, q, zeta=zeta).total == want


def test_sl_regimes():
    assert sl_regime(2, 4) == "q_even"
    assert sl_regime(4, 3) == "n_not_2_mod_4"
    assert sl_regime(2, 5) == "n2mod4_q1mod4"
    assert sl_regime(6, 3) == "n2mod4_q3mod4"


# ---------------------------------------------------------------------------
# PGL / PSL

@pytest.mark.parametrize("n,q,want", [
    (2, 3, 5), (2, 4, 5), (2, 5, 7), (2, 7, 9), (3, 3, 6),
    (4, 5, 45), (5, 3, 28), (6, 3, 90), (6, 5, 252), (6, 7, 558),
])
def test_real_pgl_anchors(n, q, want):
    assert real_pgl(n, q, **BOTH).total == want
    assert strongly_real_pgl(n, q).total == want


@pytest.mark.parametrize("n,q,want", [
    (2, 3, 2), (2, 5, 5), (2, 7, 4), (2, 9, 7), (2, 13, 9),
    (2, 4, 5), (3, 3, 6), (3, 4, 8), (3, 5, 8),
    (4, 3, 23), (4, 5, 31), (4, 7, 75), (4, 9, 71), (4, 13, 123),
    (5, 3, 28), (5, 5, 52),
    (6, 3, 46), (6, 5, 164), (6, 7, 306), (6, 9, 608), (6, 13, 1566),
])
def test_real_psl_anchors(n, q, want):
    assert real_psl(n, q, **BOTH).total == want


@pytest.mark.parametrize("n,q,want", [
    (6, 3, 43), (6, 7, 285), (4, 5, 31), (2, 5, 5), (2, 7, 4),
])
def test_strongly_real_psl_anchors(n, q, want):
    assert strongly_real_psl(n, q).total == want


# ---------------------------------------------------------------------------
# SL/Y

def test_real_slq_endpoints_and_middle():
    # |Y| = 1 is SL, |Y| = gcd(n, q-1) is PSL
    assert real_slq(2, 5, 1).total == real_sl(2, 5).total
    assert real_slq(2, 5, 2).total == real_psl(2, 5).total
    # middle regime at n = 4, q = 5: strictly between SL and PSL behavior
    assert real_slq(4, 5, 2, **BOTH).total == 57
    assert strongly_real_slq(4, 5, 2).total == 57
    assert real_slq(4, 5, 4).total == real_psl(4, 5).total


def test_slq_y_validation():
    with pytest.raises(ValueError):
        real_slq(4, 5, 3)
    with pytest.raises(ValueError):
        real_slq(2, 5, 0)


# ---------------------------------------------------------------------------
# dispatcher, reports, validation

def test_count_dispatch():
    assert count("SL", 2, 7, "real").total == 7
    assert count("PGL", 5, 3, "real").total == 28
    assert count("SLQ", 4, 5, "strongly_real", y_order=2).total == 57
    with pytest.raises(ValueError):
        count("PSL", 2, 7, "zeta_real")
    with pytest.raises(ValueError):
        count("SLQ", 2, 7, "zeta_real", y_order=1)
    with pytest.raises(ValueError):
        count("SLQ", 2, 7, "real")      # missing y
    with pytest.raises(ValueError):
        count("SO", 2, 7, "real")
    with pytest.raises(ValueError):
        count("GL", 2, 7, "imaginary")


def test_q_validation():
    for bad_q in (6, 1, 12, 100):
        with pytest.raises(ValueError):
            real_gl(2, bad_q)
    with pytest.raises(ValueError):
        real_psl(-1, 3)


def test_report_json_shape():
    rep = count("SL", 2, 7, "real")
    data = rep.to_json()
    assert data["group"] == {"family": "SL", "n": 2, "q": 7}
    assert data["kind"] == "real"
    assert data["total"] == 7
    assert data["regime"] == "n2mod4_q3mod4"
    assert sum(item["count"] for item in data["per_nu"]) == 7
    data = count("SLQ", 4, 5, "real", y_order=2).to_json()
    assert data["group"]["y"] == 2
    data = zeta_real_gl(2, 7).to_json()
    assert data["zeta"] == 3


def test_verify_counts_roundtrip():
    for family, n, q, kind in [("GL", 2, 5, "real"), ("SL", 2, 5, "real"),
                               ("PGL", 3, 3, "real"), ("PSL", 4, 5, "real"),
                               ("GL", 2, 7, "zeta_real"),
                               ("SL", 6, 3, "strongly_real")]:
        match, formula, enum = verify_counts(family, n, q, kind)
        assert match
        assert formula.total == enum.total


# ---------------------------------------------------------------------------
# the stored reference table

def test_section13_q_even_all_match():
    for q in (2, 4):
        rows = section13_table(q)
        assert len(rows) == 10
        assert all(r["match"] for r in rows)
        assert all("note" not in r for r in rows)


def _mismatches(rows):
    return {(r["family"], r["n"], r["kind"]) for r in rows if not r["match"]}


def test_section13_q3mod4_mismatch_pattern():
    # two stored polynomials disagree with the case analysis everywhere odd
    for q in (3, 7):
        rows = section13_table(q)
        assert len(rows) == 23
        assert _mismatches(rows) == {("PGL", 6, "real"),
                                     ("SL", 6, "strongly_real")}
        assert all(("note" in r) == (not r["match"]) for r in rows)


def test_section13_q1mod4_mismatch_pattern():
    # at q = 1 mod 4 three more stored rows disagree (the two-case cells)
    for q in (5, 9):
        rows = section13_table(q)
        assert len(rows) == 23
        assert _mismatches(rows) == {("PGL", 6, "real"),
                                     ("SL", 6, "strongly_real"),
                                     ("PSL", 4, "real"),
                                     ("PSL", 6, "real"),
                                     ("PSL", 6, "strongly_real")}


def test_section13_engine_values_at_disputed_cells():
    # the engine values at the cells whose stored polynomial is off,
    # frozen from brute-force-validated case analysis
    byq = {q: {(r["family"], r["n"], r["kind"]): (r["reference"], r["engine"])
               for r in section13_table(q)} for q in (3, 5, 7, 9)}
    assert byq[3][("PGL", 6, "real")] == (93, 90)
    assert byq[5][("PGL", 6, "real")] == (252 + 5, 252)
    assert byq[7][("PGL", 6, "real")] == (558 + 7, 558)
    assert byq[3][("SL", 6, "strongly_real")] == (74, 51)
    assert byq[5][("SL", 6, "strongly_real")] == (154, 97)
    assert byq[7][("SL", 6, "strongly_real")] == (270, 163)
    assert byq[5][("PSL", 4, "real")][1] == 31
    assert byq[9][("PSL", 4, "real")][1] == 71
    assert byq[5][("PSL", 6, "real")][1] == 164
    assert byq[9][("PSL", 6, "real")][1] == 608


# ---------------------------------------------------------------------------
# generating function

@pytest.mark.parametrize("q", [2, 3, 5])
def test_genfun_matches_direct_counts(q):
    coeffs = genfun_real_gl(q, terms=8)
    assert len(coeffs) == 9
    for n, c in enumerate(coeffs):
        assert c == real_gl(n, q).total


def test_genfun_known_prefix():
    assert genfun_real_gl(3, terms=5) == [1, 2, 6, 12, 30, 56]
    assert genfun_real_gl(2, terms=4) == [1, 1, 3, 4, 10]
    assert genfun_real_gl(3, terms=0) == [1]
    with pytest.raises(ValueError):
        genfun_real_gl(3, terms=-1)
    with pytest.raises(ValueError):
        genfun_real_gl(6, terms=3)
