"""Resolutions of point simples: kernels, exactness certificates, pd."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from quiverline import (
    Arrow,
    DimError,
    HomForm,
    InvalidInput,
    LabeledQuiver,
    NotLocalized,
    NotReduced,
    PolyMatrix,
    ProjPoint,
    Quiver,
    alg_matrix,
    arrow_element,
    build_simple_resolution,
    certification_points,
    certify_hd,
    chart_poly,
    check_exactness,
    divisor_from_mapping,
    flatten_complex,
    local_smith_valuations,
    make_complex,
    membership,
    minimized_pd,
    module_basis,
    pd_simple,
    poly_kernel,
    resolve,
    scale,
    truncated_rank,
    truncation_exactness,
    uniformizer_form,
)
from quiverline import unit_element
from quiverline.homology import (
    P_ONE,
    P_T,
    P_ZERO,
    poly_add,
    poly_divmod,
    poly_eval,
    poly_gcd,
    poly_mul,
    poly_ord,
    poly_shift,
    poly_trim,
)
from quiverline.path_algebra import format_path
from quiverline.random_quivers import random_reduced_transverse
from helpers import ay, two_cycle_example, pt


def P(*coeffs) -> tuple[Fraction, ...]:
    return poly_trim(Fraction(c) for c in coeffs)


def random_poly(rng: random.Random, max_deg: int) -> tuple[Fraction, ...]:
    return P(*[rng.randint(-2, 2) for _ in range(max_deg + 1)])


def random_poly_matrix(rng: random.Random, rows: int, cols: int,
                       max_deg: int) -> PolyMatrix:
    return PolyMatrix.from_rows(
        [[random_poly(rng, max_deg) for _ in range(cols)] for _ in range(rows)],
        cols=cols)


def generic_rank(m: PolyMatrix) -> int:
    """Rank over k(t), as the max rank over a handful of evaluation points."""
    from oracles import fraction_rank
    best = 0
    for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(3, 2),
              Fraction(5), Fraction(-7, 3)):
        rows = [[poly_eval(m.entry(i, j), x) for j in range(m.cols)]
                for i in range(m.rows)]
        best = max(best, fraction_rank(rows) if rows else 0)
    return best


class TestPolyHelpers:
    def test_divmod_exact_quotient(self):
        quot, rem = poly_divmod(P(-1, 0, 1), P(-1, 1))
        assert quot == P(1, 1)
        assert rem == P_ZERO

    def test_divmod_euclidean_property(self):
        rng = random.Random(11)
        for _ in range(60):
            a = random_poly(rng, rng.randint(0, 4))
            b = random_poly(rng, rng.randint(0, 3))
            if not b:
                continue
            quot, rem = poly_divmod(a, b)
            assert poly_add(poly_mul(quot, b), rem) == a
            assert len(rem) < len(b)

    def test_gcd_is_monic_common_divisor(self):
        g = poly_gcd(poly_mul(P(-1, 1), P(1, 1)), poly_mul(P(-1, 1), P(-1, 1)))
        assert g == P(-1, 1)
        assert poly_gcd(P_ZERO, P(0, 3)) == P(0, 1)

    def test_shift_recenters_the_variable(self):
        assert poly_shift(P(0, 0, 1), Fraction(1)) == P(1, 2, 1)
        rng = random.Random(5)
        for _ in range(30):
            p = random_poly(rng, 3)
            off = Fraction(rng.randint(-3, 3))
            x = Fraction(rng.randint(-4, 4))
            assert poly_eval(poly_shift(p, off), x) == poly_eval(p, x + off)

    def test_vanishing_order_at_zero(self):
        assert poly_ord(P(0, 0, 3, 1)) == 2
        assert poly_ord(P(7)) == 0
        assert poly_ord(P_ZERO) is None

    def test_chart_restriction_of_uniformizers(self):
        for p in (pt("0"), pt("2"), pt("-1/2"), pt("inf")):
            assert chart_poly(uniformizer_form(p), p) == P_T

    def test_chart_restriction_detects_roots(self):
        form = HomForm(2, (Fraction(2), Fraction(-3), Fraction(1)))
        # Roots at 1 and 2; order 1 at each, unit elsewhere.
        assert poly_ord(chart_poly(form, pt("1"))) == 1
        assert poly_ord(chart_poly(form, pt("2"))) == 1
        assert poly_ord(chart_poly(form, pt("5"))) == 0
        assert poly_ord(chart_poly(form, pt("inf"))) == 0


class TestKernelAndMembership:
    def test_injective_map_has_no_kernel(self):
        m = PolyMatrix.from_rows([[P_T]])
        assert poly_kernel(m).cols == 0

    def test_kernel_of_a_rank_one_pair(self):
        m = PolyMatrix.from_rows([[P_T, P(0, -1)]])
        ker = poly_kernel(m)
        assert ker.cols == 1
        assert m.mul(ker).is_zero()
        assert membership(ker, (P_ONE, P_ONE))

    def test_kernel_dimension_matches_generic_rank(self):
        rng = random.Random(23)
        for _ in range(40):
            m = random_poly_matrix(rng, 2, 4, 2)
            ker = poly_kernel(m)
            assert m.mul(ker).is_zero()
            assert ker.cols == m.cols - generic_rank(m)
            if ker.cols:
                assert generic_rank(ker) == ker.cols

    def test_membership_respects_polynomial_scaling(self):
        col = PolyMatrix.from_rows([[P_T]])
        assert membership(col, (P(0, 0, 1),))
        assert not membership(col, (P_ONE,))
        assert membership(PolyMatrix.identity(3), (P(1), P(0, 2), P(3, 0, 1)))

    def test_membership_rejects_wrong_vector_length(self):
        with pytest.raises(DimError):
            membership(PolyMatrix.identity(2), (P_ONE,))


class TestTruncatedRank:
    def test_unit_entry_beats_pivot_valuations(self):
        from oracles import toeplitz_truncated_rank
        m = PolyMatrix.from_rows([[P_T, P_ONE]])
        assert local_smith_valuations(m) == (0,)
        assert truncated_rank(m, 3) == 3
        assert toeplitz_truncated_rank(m, 3) == 3

    def test_diagonal_valuations(self):
        from oracles import toeplitz_truncated_rank
        m = PolyMatrix.from_rows([
            [P_ONE, P_ZERO, P_ZERO],
            [P_ZERO, P_T, P_ZERO],
            [P_ZERO, P_ZERO, P(0, 0, 1)],
        ])
        assert local_smith_valuations(m) == (0, 1, 2)
        assert truncated_rank(m, 2) == 3
        assert toeplitz_truncated_rank(m, 2) == 3

    def test_agrees_with_toeplitz_blocks(self):
        from oracles import toeplitz_truncated_rank
        rng = random.Random(37)
        for _ in range(40):
            rows = rng.randint(1, 3)
            cols = rng.randint(1, 4)
            m = random_poly_matrix(rng, rows, cols, 2)
            n_trunc = rng.randint(1, 4)
            assert truncated_rank(m, n_trunc) == \
                toeplitz_truncated_rank(m, n_trunc)


class TestModuleBasis:
    def test_projective_bases_are_paths_into_the_vertex(self):
        lq = ay((2,), ["0"])
        assert [format_path(p) for p in module_basis(lq, "v0")] == \
            ["e_v0", "a1.2"]
        assert [format_path(p) for p in module_basis(lq, "v1.1")] == \
            ["e_v1.1", "a1.1"]


class TestResolutionShapes:
    def test_isolated_vertex_resolves_by_one_uniformizer(self):
        lq = LabeledQuiver.make(Quiver(("v",), ()), {})
        c = build_simple_resolution(lq, "v", pt("0"))
        assert len(c.diffs) == 1
        d1 = c.diffs[0]
        assert d1.row_vertices == ("v",) and d1.col_vertices == ("v",)
        t_unit = scale(lq, unit_element(lq, "v"), uniformizer_form(pt("0")))
        assert d1.entry(0, 0) == t_unit
        assert check_exactness(c)
        assert minimized_pd(c) == 1

    def test_single_petal_needs_only_the_closing_arrow(self):
        lq = ay((2,), ["0"])
        c = build_simple_resolution(lq, "v0", pt("0"))
        assert len(c.diffs) == 1
        d1 = c.diffs[0]
        assert d1.row_vertices == ("v0",)
        assert d1.col_vertices == ("v1.1",)
        assert d1.entry(0, 0) == arrow_element(lq, "a1.2")
        assert check_exactness(c)
        assert minimized_pd(c) == 1

    def test_two_petals_share_one_relation(self):
        lq = two_cycle_example(0)
        rep = resolve(lq, 0, pt("0"))
        c = rep.complex
        assert [[v for v, _ in mod] for mod in c.modules] == [[0], [1, 2], [0]]
        assert all(tw == 0 for mod in c.modules for _, tw in mod)
        llq = c.lq
        d1, d2 = c.diffs
        assert d1.row_vertices == (0,) and d1.col_vertices == (1, 2)
        assert d1.entry(0, 0) == arrow_element(llq, "a1")
        assert d1.entry(0, 1) == arrow_element(llq, "a2")
        assert d2.row_vertices == (1, 2) and d2.col_vertices == (0,)
        assert d2.entry(0, 0) == scale(
            llq, arrow_element(llq, "b1"), HomForm.constant(-1))
        assert d2.entry(1, 0) == arrow_element(llq, "b2")

    def test_sink_with_incoming_arrow_has_pd_two(self):
        q = Quiver(("v", "w"), (Arrow("a", "v", "w"),))
        lq = LabeledQuiver.make(q, {})
        c = build_simple_resolution(lq, "w", pt("0"))
        assert len(c.diffs) == 2
        d1, d2 = c.diffs
        assert d1.col_vertices == ("v", "w")
        assert d1.entry(0, 0) == arrow_element(lq, "a")
        assert d2.col_vertices == ("v",)
        assert d2.entry(1, 0) == arrow_element(lq, "a")
        assert check_exactness(c)
        assert minimized_pd(c) == 2
        # The source itself has no incoming arrows and resolves in one step.
        assert pd_simple(lq, "v", pt("0")) == 1

    def test_requires_labels_concentrated_at_the_point(self):
        lq = ay((2,), ["1"])
        with pytest.raises(NotLocalized):
            build_simple_resolution(lq, "v0", pt("0"))

    def test_rejects_surviving_zero_labeled_cycles(self):
        q = Quiver(("v", "w"), (Arrow("b", "v", "w"), Arrow("a", "w", "v")))
        lq = LabeledQuiver.make(q, {})
        with pytest.raises(NotLocalized):
            build_simple_resolution(lq, "v", pt("0"))

    def test_rejects_cycles_not_cut_out_by_the_uniformizer(self):
        q = Quiver(("v", "w"), (Arrow("b", "v", "w"), Arrow("a", "w", "v")))
        lq = LabeledQuiver.make(q, {"a": divisor_from_mapping({"0": 2})})
        with pytest.raises(NotReduced):
            build_simple_resolution(lq, "v", pt("0"))


class TestComplexConstruction:
    def test_needs_at_least_one_differential(self):
        lq = LabeledQuiver.make(Quiver(("v",), ()), {})
        with pytest.raises(InvalidInput):
            make_complex(lq, pt("0"), "v", [])

    def test_rejects_nonchaining_differentials(self):
        lq = two_cycle_example(0)
        rep = resolve(lq, 0, pt("0"))
        d1, _ = rep.complex.diffs
        with pytest.raises(DimError):
            make_complex(rep.complex.lq, pt("0"), 0, [d1, d1])


class TestExactness:
    def test_zero_differential_is_not_a_resolution(self):
        lq = LabeledQuiver.make(Quiver(("v",), ()), {})
        z = alg_matrix(lq, ["v"], ["v"], [[None]])
        c = make_complex(lq, pt("0"), "v", [z])
        assert check_exactness(c) is False
        # The all-zero matrix carries no entry degrees, so the default
        # truncation collapses to order 1, where 0 and t are the same map.
        # Any higher order separates them.
        assert truncation_exactness(c, 2) is False
        with pytest.raises(InvalidInput):
            truncation_exactness(c, 0)

    def test_detects_image_scaled_into_the_radical(self):
        lq = two_cycle_example(0)
        rep = resolve(lq, 0, pt("0"))
        c = rep.complex
        llq, p = c.lq, c.point
        d1, d2 = c.diffs
        t_form = uniformizer_form(p)
        rows = []
        for i in range(len(d2.row_vertices)):
            rows.append([scale(llq, d2.entry(i, j), t_form)
                         for j in range(len(d2.col_vertices))])
        bad = make_complex(llq, p, c.vertex,
                           [d1, alg_matrix(llq, list(d2.row_vertices),
                                           list(d2.col_vertices), rows)])
        assert check_exactness(bad) is False
        assert truncation_exactness(bad) is False

    def test_detects_a_dropped_relation(self):
        lq = two_cycle_example(0)
        rep = resolve(lq, 0, pt("0"))
        c = rep.complex
        llq, p = c.lq, c.point
        d1, d2 = c.diffs
        zeroed = alg_matrix(llq, list(d2.row_vertices),
                            list(d2.col_vertices),
                            [[None] * len(d2.col_vertices)
                             for _ in d2.row_vertices])
        bad = make_complex(llq, p, c.vertex, [d1, zeroed])
        assert check_exactness(bad) is False
        assert truncation_exactness(bad) is False

    def test_truncation_oracle_confirms_good_resolutions(self):
        rng = random.Random(101)
        seen = 0
        while seen < 8:
            lq = random_reduced_transverse(rng, max_vertices=4,
                                           max_label_degree=2)
            points = certification_points(lq)[:2]
            for v in lq.quiver.vertices:
                for p in points:
                    rep = resolve(lq, v, p)
                    assert check_exactness(rep.complex)
                    assert truncation_exactness(rep.complex)
            seen += 1


class TestProjectiveDimension:
    def test_pd_profile_of_the_two_petal_example(self):
        lq = two_cycle_example(0)
        points = certification_points(lq)
        assert points == (pt("0"), pt("1"))
        table = {(v, p): pd_simple(lq, v, p)
                 for v in lq.quiver.vertices for p in points}
        assert table[(0, pt("0"))] == 2
        assert all(pd <= 1 for key, pd in table.items() if key != (0, pt("0")))

    def test_ext_dimensions_of_the_two_petal_example(self):
        rep = resolve(two_cycle_example(0), 0, pt("0"))
        assert {k: v for k, v in rep.ext.items() if v} == {
            (0, 0): 1, (1, 1): 1, (2, 1): 1, (0, 2): 1}
        assert rep.pd == 2

    def test_points_outside_the_support_are_smooth(self):
        lq = two_cycle_example(0)
        assert pd_simple(lq, 0, pt("5")) == 1
        assert pd_simple(lq, 1, pt("inf")) == 1

    def test_distinct_parameters_stay_smooth_at_each_point(self):
        lq = two_cycle_example(1)
        for p in certification_points(lq):
            for v in lq.quiver.vertices:
                assert pd_simple(lq, v, p) <= 1


class TestCertification:
    def test_certification_points_cover_support_plus_one(self):
        lq = two_cycle_example(0)
        assert certification_points(lq) == (pt("0"), pt("1"))
        lq2 = ay((2, 2), ["inf", "0"])
        points = certification_points(lq2)
        assert pt("inf") in points and pt("0") in points
        assert points[-1] == pt("1")

    def test_certifies_the_two_petal_example(self):
        report = certify_hd(two_cycle_example(0))
        assert report.max_pd == 2
        assert report.satisfied
        assert len(report.table) == 6
        deep = [(v, str(p)) for v, p, pd in report.table if pd == 2]
        assert deep == [(0, "0")]

    def test_certifies_a_two_petal_star(self):
        report = certify_hd(ay((2, 2), ["inf", "0"]))
        assert report.max_pd == 1
        assert report.satisfied

    def test_certifies_an_unlabeled_arrow(self):
        q = Quiver(("v", "w"), (Arrow("a", "v", "w"),))
        report = certify_hd(LabeledQuiver.make(q, {}))
        assert report.max_pd == 2
        assert report.satisfied
        assert {(v, pd) for v, _, pd in report.table} == {("v", 1), ("w", 2)}

    def test_report_serialization_is_stable(self):
        report = certify_hd(ay((2,), ["0"]))
        doc = report.to_json()
        assert doc["max_pd"] == 1
        assert doc["theorem_hdOQ_satisfied"] is True
        assert all(set(row) == {"vertex", "point", "pd"}
                   for row in doc["table"])

    def test_refuses_nonreduced_labels(self):
        lq = LabeledQuiver.make(
            Quiver(("v", "w"), (Arrow("b", "v", "w"), Arrow("a", "w", "v"))),
            {"a": divisor_from_mapping({"0": 2})})
        with pytest.raises(NotReduced):
            certify_hd(lq)

    def test_resolution_report_round_trip(self):
        rep = resolve(two_cycle_example(0), 0, pt("0"))
        doc = rep.to_json()
        assert doc["vertex"] == 0
        assert doc["point"] == "0"
        assert doc["pd"] == 2
        assert doc["modules"] == [[[0, 0]], [[1, 0], [2, 0]], [[0, 0]]]
        assert doc["differentials"][0] == [["(1) a1", "(1) a2"]]
        assert {(e["target"], e["i"]): e["dim"] for e in doc["ext"]} == {
            (0, 0): 1, (1, 1): 1, (2, 1): 1, (0, 2): 1}
