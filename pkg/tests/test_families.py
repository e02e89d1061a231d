import pytest

from surgeryforge.families import (CensusEntry, ExcludedParameter,
                                   alt_gofk_pipeline, family_lens,
                                   family_triple, figure_eight_sister_triple,
                                   gofklens_census, optsurg_catalog,
                                   prop15_consistency,
                                   verify_three_filling_intersections,
                                   wsl_identification)
from surgeryforge.lens import LensSpace, S3, homeo_oriented, homeo_unoriented
from surgeryforge.rationals import INF, rat


def lenses(family, params):
    return {str(f.slot): f.lens for f in family_triple(family, params)}


def test_family_a_spot_checks():
    a32 = lenses("A", (3, 2))
    assert a32["1"] == LensSpace(18, 11)
    assert a32["2"] == S3
    assert a32["inf"] == LensSpace(19, -12) == LensSpace(19, 7)
    assert homeo_oriented(LensSpace(18, 11), LensSpace(18, 5))

    a25 = lenses("A", (2, 5))
    assert a25["1"] == LensSpace(31, 17)
    assert a25["2"] == S3
    assert a25["inf"] == LensSpace(32, -7) == LensSpace(32, 25)


def test_family_b_spot_checks():
    b4 = lenses("B", (rat(4),))
    assert b4["1"] == S3
    assert b4["2"] == LensSpace(19, 7)
    assert b4["inf"] == LensSpace(18, 7)
    assert homeo_unoriented(LensSpace(18, 7), LensSpace(18, 5))


def test_family_exclusions_are_named():
    with pytest.raises(ExcludedParameter, match="X0"):
        family_lens("X0", (0, 5), rat(0))
    with pytest.raises(ExcludedParameter, match="n = 2"):
        family_lens("X0", (3, 2), rat(0))
    with pytest.raises(ExcludedParameter, match="B"):
        family_lens("B", (rat(3, 2),), rat(1))
    with pytest.raises(ExcludedParameter, match="A"):
        family_lens("A", (1, 5), rat(1))
    with pytest.raises(ExcludedParameter):
        family_lens("X2", (2, rat(3)), INF)


def test_x_families_against_known_overlaps():
    # the inf-slot formulas agree with the three-filling families on shared
    # manifolds (up to the orientation slop of the tabulated formulas)
    b4_inf = family_lens("B", (rat(4),), INF)
    x2_inf = family_lens("X2", (-2, rat(4)), INF)
    assert homeo_oriented(b4_inf, x2_inf)
    b4_2 = family_lens("B", (rat(4),), rat(2))
    x2_2 = family_lens("X2", (-2, rat(4)), rat(2))
    assert homeo_oriented(b4_2, x2_2)


def test_wsl_identification_index_order():
    w = wsl_identification(1)
    good = {str(f.lens) for f in w["A[2,p+4]"]}
    assert good == {"S3", "L(31,17)", "L(32,25)"}
    other = {str(f.lens) for f in w["A[p+4,2]"]}
    assert {l.p for l in (f.lens for f in w["A[p+4,2]"])} != {1, 31, 32}
    assert other != good


def test_intersections_bound_8():
    r = verify_three_filling_intersections(8)
    assert r.ok
    assert r.case_1a == ((4, -1),)
    assert r.case_1b == ((1, -1, -1),)       # the manifold M3(-1, 4)
    assert set(r.case_2a[0]) == {-2, 2}      # the slope 5/2: family B
    assert set(r.case_3a[0]) == {-2, 2}      # the slope 3/2
    assert r.case_3b_matches_3a
    assert r.case_2b_count > 0               # family A is unconstrained


def test_prop15_consistency():
    r = prop15_consistency(5)
    assert r.ok
    unflagged = [row for row in r.rows if not row.flagged]
    assert unflagged and all(row.relation != "mismatch" for row in unflagged)
    # the tabulated family formulas carry incoherent orientations: both
    # oriented-equal and mirror-equal relations occur across the rows
    relations = {row.relation for row in unflagged}
    assert "equal" in relations and "mirror" in relations
    # the inf-slot partner needs the defective slot-1 formula: flagged rows
    flagged = [row for row in r.rows if row.flagged]
    assert flagged and all(row.setting == "A[2,n]" for row in flagged)


def test_census_acceptance_bounds():
    r = gofklens_census(5, 6)
    assert r.ok
    got = set(r.entries)

    def canon(p, q, k):
        from surgeryforge.simpleknot import canonical_triple
        return CensusEntry(*canonical_triple(p, q, k))

    for p, q, k in ((7, 3, 2), (13, 4, 3), (13, 9, 2), (18, 11, 5),
                    (19, 3, 4), (27, 11, 4), (32, 7, 5)):
        assert canon(p, q, k) in got
    for t in range(0, 6):
        p = 9 * t + 14
        assert canon(p, (-9) % p, 3) in got
    for n in range(2, 7):
        assert canon(n + 1, n, 1) in got
    # every entry satisfies the dual-class congruence in its own coordinates
    for e in r.entries:
        assert (-e.k * e.k) % e.p == e.q


def test_census_respects_bounds():
    small = gofklens_census(2, 4)
    assert small.ok
    orders = {e.p for e in small.entries}
    assert 32 in orders          # twist index 2 still inside
    assert 41 not in orders      # twist index 3 cut by t_bound = 2


def test_alt_gofk_pipeline():
    r = alt_gofk_pipeline()
    assert r.ok and r.census_ok
    orders = sorted(LensSpace(*_pq(s)).p for s in r.survivors_after_filters)
    assert orders == [18, 32, 50, 68]
    assert [f["p"] for f in r.final] == [19, 31]
    assert homeo_unoriented(LensSpace(*_pq(r.final[0]["alternative_lens"])),
                            LensSpace(18, 11))
    assert homeo_unoriented(LensSpace(*_pq(r.final[1]["alternative_lens"])),
                            LensSpace(32, 7))
    # the twist branches died by the genus obstruction
    assert all(not info["primitive_simple_knots"]
               for info in r.genus_stage.values())
    # quadratic-congruence classes at p = 31: torus pair and the dual pair
    cands = r.star_stage[r.final[1]["alternative_lens"]]
    sols31 = cands[31]["solutions"]
    assert sols31["+1"] == ((5, 6), (25, 26))
    assert sols31["-1"] == ((13, 17), (19, 11))
    assert len(cands[31]["classes"]) == 2
    assert cands[33]["solutions"] == {"+1": (), "-1": ()}
    # order 17 is excluded by the torus-knot bound, not by the congruence
    cands18 = r.star_stage[r.final[0]["alternative_lens"]]
    assert "excluded" in cands18[17]
    assert cands18[19]["solutions"]["+1"] and cands18[19]["solutions"]["-1"]


def _pq(text):
    inner = text[text.index("(") + 1:text.index(")")]
    a, b = inner.split(",")
    return int(a), int(b)


def test_pipeline_filters_record_both_orientations():
    r = alt_gofk_pipeline()
    for info in r.exponent_filter.values():
        assert info["kept"]
        assert (set(info["own"]) | set(info["mirror"])) & {-1, 1, 3}
    # at least one survivor needed the mirror reading
    assert any(not (set(info["own"]) & {-1, 1, 3})
               for info in r.exponent_filter.values())


def test_optsurg_catalog_families():
    d1, d2 = optsurg_catalog(6, 1)
    assert d1 == ("K^(-5)_(-1)", LensSpace(5, 1))
    assert d2 == ("K^(-5)_(inf)", LensSpace(5, -1))
    d1, d2 = optsurg_catalog(2, -1)
    assert d1[1] == LensSpace(-10, -3) == LensSpace(10, 3)
    d1, d2 = optsurg_catalog(4, 2)
    assert d1[1] == LensSpace(15, 4)
    assert d2[1] == LensSpace(5, -2)
    with pytest.raises(ValueError):
        optsurg_catalog(4, 0)
    with pytest.raises(ValueError):
        optsurg_catalog(7, 1)


def test_optsurg_pairs_with_partner_index():
    pair = optsurg_catalog(1, 2, 3)
    assert pair[0][1] == LensSpace(11, 3)
    assert pair[1][1] == LensSpace(17, 5)


def test_figure_eight_sister_triple():
    data = figure_eight_sister_triple()
    assert data["triple"] == ("L(10,3)", "L(5,1)", "L(5,4)")
    # LensSpace(5, -1) is the normalized L(5,4)
    assert LensSpace(5, -1) == LensSpace(5, 4)
    # three catalog families reproduce members of the same triple
    f1 = {str(l) for _, l in data["family1(k=1)"]}
    f2 = {str(l) for _, l in data["family2(k=-1)"]}
    assert f1 <= {"L(5,1)", "L(5,4)", "L(10,3)"} or "L(5,1)" in f1
    assert "L(10,3)" in f2


def test_three_filling_orders():
    # the three lens slots sit at mutual distance one, so the homology
    # orders satisfy the triangle relation o_a + o_b = o_c; orders are
    # pairwise distinct except when that relation degenerates (a zero
    # order, or two equal orders summing to the third)
    from math import gcd
    coincidences = []
    for m in range(-10, 11):
        for n in range(-10, 11):
            try:
                t = family_triple("A", (m, n))
            except ExcludedParameter:
                continue
            orders = sorted(f.lens.p for f in t)
            assert orders[0] + orders[1] == orders[2], (m, n)
            finite = [o for o in orders if o > 1]
            if len(set(finite)) != len(finite):
                coincidences.append(("A", m, n))
    for a in range(-10, 11):
        for b in range(0, 11):
            if (a, b) == (0, 0) or (b > 0 and gcd(abs(a), b) != 1):
                continue
            try:
                t = family_triple("B", (rat(a, b),))
            except ExcludedParameter:
                continue
            orders = sorted(f.lens.p for f in t)
            assert orders[0] + orders[1] == orders[2], (a, b)
            finite = [o for o in orders if o > 1]
            if len(set(finite)) != len(finite):
                coincidences.append(("B", a, b))
    assert coincidences == [("A", -3, -1), ("A", 2, -1), ("A", 2, 4),
                            ("B", -9, 2), ("B", 2, 5)]


def test_a32_contains_s3_exactly_once():
    t = family_triple("A", (3, 2))
    spheres = [str(f.slot) for f in t if f.lens == S3]
    assert spheres == ["2"]


def test_family1_matches_x0_slot0():
    for m in [m for m in range(-10, 11) if m != 0]:
        (desc, lens), _ = optsurg_catalog(1, m)
        n = 6 if m != -1 else 6  # any valid second parameter
        assert family_lens("X0", (m, n), rat(0)) == lens
