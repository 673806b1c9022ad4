from fractions import Fraction

import pytest

from gatemask.boolfn import GateFamily, GateKind, parse_expr
from gatemask.metrics import (
    MetricKind,
    format_decimal,
    gemfic_closed,
    gemnif_closed,
    percent_reduction,
    report,
    work_estimate,
)

ALL_LEGAL = [(kind, n)
             for kind in GateKind
             for n in ((1,) if kind is GateKind.NOT
                       else (3, 5, 7) if kind in (GateKind.MAJORITY,
                                                  GateKind.MINORITY)
                       else range(2, 8))]


class TestClosedForms:
    def test_gemnif_golden_values(self):
        assert gemnif_closed(GateFamily(GateKind.MAJORITY, 3)) == Fraction(1, 3)
        assert gemnif_closed(GateFamily(GateKind.AND, 2)) == Fraction(3, 8)
        assert gemnif_closed(GateFamily(GateKind.NOT, 1)) == 1
        assert gemnif_closed(GateFamily(GateKind.AND, 3)) == Fraction(7, 48)

    def test_gemfic_golden_values(self):
        assert gemfic_closed(GateFamily(GateKind.AND, 2)) == Fraction(1, 2)
        assert gemfic_closed(GateFamily(GateKind.MAJORITY, 3)) == Fraction(4, 7)
        assert gemfic_closed(GateFamily(GateKind.MAJORITY, 5)) == Fraction(16, 31)
        assert gemfic_closed(GateFamily(GateKind.XOR, 2)) == Fraction(2, 3)

    def test_equivalent_gemnif_reduces_to_reciprocal_fan_in(self):
        for kind in (GateKind.XOR, GateKind.XNOR):
            for n in range(2, 13):
                assert gemnif_closed(GateFamily(kind, n)) == Fraction(1, n)
        for kind in (GateKind.MAJORITY, GateKind.MINORITY):
            for n in (3, 5, 7, 9, 11):
                assert gemnif_closed(GateFamily(kind, n)) == Fraction(1, n)

    def test_singleton_gemfic_is_two_to_one_minus_n(self):
        for kind in (GateKind.AND, GateKind.NAND, GateKind.OR, GateKind.NOR):
            for n in range(2, 13):
                assert gemfic_closed(GateFamily(kind, n)) == Fraction(2, 1 << n)

    def test_families_coincide_within_class(self):
        for n in (2, 3, 4):
            singles = {gemnif_closed(GateFamily(k, n))
                       for k in (GateKind.AND, GateKind.NAND,
                                 GateKind.OR, GateKind.NOR)}
            assert len(singles) == 1
        for n in (3, 5):
            equivalents = {gemfic_closed(GateFamily(k, n))
                           for k in (GateKind.XOR, GateKind.XNOR,
                                     GateKind.MAJORITY, GateKind.MINORITY)}
            assert len(equivalents) == 1

    def test_closed_forms_match_oracle(self):
        for kind, n in ALL_LEGAL:
            family = GateFamily(kind, n)
            for metric in MetricKind:
                rep = report(family, metric)
                assert rep.agree, (kind, n, metric)

    def test_singleton_below_equivalent(self):
        for n in range(2, 13):
            assert (gemnif_closed(GateFamily(GateKind.AND, n))
                    < gemnif_closed(GateFamily(GateKind.XOR, n)))
            assert (gemfic_closed(GateFamily(GateKind.AND, n))
                    < gemfic_closed(GateFamily(GateKind.XOR, n)))

    def test_strictly_decreasing_with_fan_in(self):
        for kind in (GateKind.AND, GateKind.NAND, GateKind.OR, GateKind.NOR,
                     GateKind.XOR, GateKind.XNOR):
            for closed in (gemnif_closed, gemfic_closed):
                values = [closed(GateFamily(kind, n)) for n in range(2, 13)]
                assert all(a > b for a, b in zip(values, values[1:]))
        for kind in (GateKind.MAJORITY, GateKind.MINORITY):
            for closed in (gemnif_closed, gemfic_closed):
                values = [closed(GateFamily(kind, n)) for n in (3, 5, 7, 9, 11)]
                assert all(a > b for a, b in zip(values, values[1:]))


class TestReport:
    def test_gate_report_carries_both_routes(self):
        rep = report(GateFamily(GateKind.MAJORITY, 3), MetricKind.GEMNIF)
        assert rep.closed == rep.oracle == Fraction(1, 3)
        assert rep.agree is True
        assert rep.decimal == "0.3333"
        assert rep.descriptor == "maj(n=3)"

    def test_not_gate_report(self):
        rep = report(GateFamily(GateKind.NOT, 1), MetricKind.GEMFIC)
        assert rep.closed == rep.oracle == 1
        assert rep.agree is True

    def test_expression_report_has_no_closed_form(self):
        rep = report(parse_expr("A&B|C"), MetricKind.GEMFIC)
        assert rep.closed is None
        assert rep.agree is None
        assert rep.oracle == Fraction(15, 28)

    def test_precision_is_configurable(self):
        rep = report(GateFamily(GateKind.MAJORITY, 3), MetricKind.GEMFIC,
                     precision=6)
        assert rep.decimal == "0.571429"


class TestPercentReduction:
    def test_golden_reductions(self):
        assert format_decimal(
            percent_reduction(Fraction(3, 8), Fraction(7, 48)), 1) == "61.1"
        assert format_decimal(
            percent_reduction(Fraction(1, 2), Fraction(1, 4)), 1) == "50.0"
        assert format_decimal(
            percent_reduction(Fraction(4, 7), Fraction(16, 31)), 1) == "9.7"
        assert percent_reduction(Fraction(1, 3), Fraction(1, 5)) == 40

    def test_no_change(self):
        assert percent_reduction(Fraction(2, 7), Fraction(2, 7)) == 0

    def test_exact_value_kept(self):
        assert percent_reduction(Fraction(3, 8), Fraction(7, 48)) == Fraction(550, 9)

    def test_zero_baseline_rejected(self):
        with pytest.raises(ValueError):
            percent_reduction(Fraction(0), Fraction(1, 2))


class TestWorkEstimate:
    def test_three_inputs(self):
        est = work_estimate(3)
        assert est.faulty_pattern_pairs == 56
        assert est.gemnif_weighted_work == 112
        assert est.exact_fault_count == 96

    def test_single_input_figures_coincide(self):
        est = work_estimate(1)
        assert (est.faulty_pattern_pairs, est.gemnif_weighted_work,
                est.exact_fault_count) == (2, 2, 2)

    def test_seven_inputs_pair_count(self):
        assert work_estimate(7).faulty_pattern_pairs == 16256

    def test_exact_never_below_pairs(self):
        for n in range(1, 17):
            est = work_estimate(n)
            assert est.exact_fault_count >= est.faulty_pattern_pairs

    def test_weighted_overshoots_exact_beyond_one_input(self):
        for n in range(2, 17):
            est = work_estimate(n)
            assert est.gemnif_weighted_work > est.exact_fault_count

    @pytest.mark.parametrize("n", [0, 17, -1])
    def test_out_of_range_rejected(self, n):
        with pytest.raises(ValueError):
            work_estimate(n)


class TestFormatDecimal:
    @pytest.mark.parametrize(
        "value,places,expected",
        [
            (Fraction(1, 3), 4, "0.3333"),
            (Fraction(4, 7), 4, "0.5714"),
            (Fraction(16, 31), 4, "0.5161"),
            (Fraction(3, 8), 4, "0.3750"),
            (Fraction(1), 4, "1.0000"),
            (Fraction(1, 5), 4, "0.2000"),
            (Fraction(1, 7), 4, "0.1429"),
            (Fraction(15, 256), 4, "0.0586"),
            (Fraction(675, 8), 1, "84.4"),   # 84.375 rounds half away from zero
            (Fraction(1, 2), 0, "1"),
            (Fraction(25, 1000), 2, "0.03"),
            (Fraction(-1, 3), 4, "-0.3333"),
            (Fraction(0), 4, "0.0000"),
        ],
    )
    def test_rendering(self, value, places, expected):
        assert format_decimal(value, places) == expected

    def test_negative_places_rejected(self):
        with pytest.raises(ValueError):
            format_decimal(Fraction(1, 3), -1)
