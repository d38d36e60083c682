import math

import pytest

from alphaspec import (
    COMPLETE,
    COMPLETE_SPLIT,
    ODD_CLIQUE_PLUS_ISOLATES,
    JoinFamily,
    VerificationReport,
    candidate_families,
    case2_applicable,
    case2_sample_check,
    complete_graph,
    complete_split_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    exhaustive_max,
    family_search,
    is_predicted_graph,
    isomorphism_classes,
    matching_number,
    shift_monotonicity_check,
    to_graph6,
    tutte_berge_witness,
    verify_order,
)
from alphaspec.enumeration import are_isomorphic, canonical_graph
from alphaspec.verify import CASE2_ALPHA_CUTOFF, case2_region_bounds


class TestExhaustiveMax:
    def test_full_case(self):
        r = exhaustive_max(5, 2, 0)
        assert r.observed_max == pytest.approx(4.0, abs=1e-9)
        assert r.passed
        assert r.argmax_certificates == (to_graph6(complete_graph(5)),)

    def test_below_case(self):
        r = exhaustive_max(7, 2, 0)
        assert r.observed_max == pytest.approx(4.0, abs=1e-9)
        expected = canonical_graph(disjoint_union(complete_graph(5), empty_graph(2)))
        assert r.argmax_certificates == (to_graph6(expected),)
        assert r.passed

    def test_above_case_star(self):
        r = exhaustive_max(7, 1, 0)
        assert r.observed_max == pytest.approx(math.sqrt(6), abs=1e-9)
        assert r.passed

    def test_threshold_tie_has_two_classes(self):
        r = exhaustive_max(7, 2, "1/2")
        assert len(r.argmax_certificates) == 2
        assert r.observed_max == pytest.approx(6.0, abs=1e-9)
        assert r.passed

    def test_scan_counts_whole_order(self):
        r = exhaustive_max(6, 1, 1)
        assert r.graphs_scanned == 156

    def test_infeasible_beta(self):
        with pytest.raises(ValueError):
            exhaustive_max(5, 3, 0)

    def test_value_and_structure_recorded_independently(self):
        r = exhaustive_max(6, 2, 1)
        assert isinstance(r.value_pass, bool)
        assert isinstance(r.structure_pass, bool)

    def test_graph6_ingestion_source(self, tmp_path):
        path = tmp_path / "order5.g6"
        path.write_text("\n".join(to_graph6(g) for g in isomorphism_classes(5)) + "\n")
        r = exhaustive_max(5, 2, 0, source=str(path))
        assert r.observed_max == pytest.approx(4.0, abs=1e-9)
        assert r.graphs_scanned == 34
        assert r.passed


class TestVerifyOrder:
    def test_order_six_all_alphas(self):
        for alpha in (0, "1/2", 1, 2):
            reports = verify_order(6, alpha)
            assert [r.beta for r in reports] == [1, 2, 3]
            assert all(r.passed for r in reports)


class TestReportSerialization:
    def test_json_round_trip(self):
        r = exhaustive_max(5, 1, "1/2")
        again = VerificationReport.from_json_line(r.to_json_line())
        assert again == r

    def test_csv_field_order(self):
        from alphaspec.verify import REPORT_CSV_HEADER

        r = exhaustive_max(5, 1, 0)
        row = r.to_csv_row()
        assert len(row.split(",")) == len(REPORT_CSV_HEADER.split(","))
        assert row.startswith("5,1,0,")

    def test_human_line_mentions_pass(self):
        r = exhaustive_max(5, 1, 0)
        assert "[PASS]" in r.to_human()


class TestFamilySearch:
    def test_above_case(self):
        result = family_search(10, 2, 0)
        assert result.best.s == 2
        assert result.best.parts == (1,) * 8
        assert result.rho == pytest.approx((1 + math.sqrt(65)) / 2, abs=1e-9)
        assert result.canonical_shape and result.matches_prediction

    def test_structure_at_alpha_one(self):
        result = family_search(12, 3, 1)
        expected = [1] * (result.best.q - 1) + [2 * 3 - 2 * result.best.s + 1]
        assert list(result.best.parts) == sorted(expected)
        assert result.canonical_shape

    def test_minimal_order_degenerates_to_clique(self):
        for alpha in (0, 1, 2):
            result = family_search(7, 3, alpha)
            assert result.best.s == 0
            assert result.best.parts == (7,)
            assert result.rho == pytest.approx(2 * (float(alpha) + 1) * 3, abs=1e-9)
            assert result.matches_prediction

    def test_agrees_with_exhaustive(self):
        for n, beta, alpha in [(6, 2, 0), (7, 2, 1), (7, 3, "1/2"), (5, 2, 2)]:
            result = family_search(n, beta, alpha)
            report = exhaustive_max(n, beta, alpha)
            assert result.rho == pytest.approx(report.observed_max, abs=1e-8)

    def test_candidate_space_is_complete_and_valid(self):
        fams = list(candidate_families(9, 3))
        assert len(fams) == len(set(fams))
        for fam in fams:
            assert fam.order == 9
            assert fam.beta == 3
            assert matching_number(fam.graph()) == 3

    def test_infeasible(self):
        with pytest.raises(ValueError):
            family_search(6, 3, 0)


class TestShiftMonotonicity:
    def test_two_triangles(self):
        assert shift_monotonicity_check(JoinFamily(1, (3, 3)), 0)

    def test_three_five(self):
        assert shift_monotonicity_check(JoinFamily(2, (3, 5)), 1)

    def test_guard_small_part(self):
        with pytest.raises(ValueError):
            shift_monotonicity_check(JoinFamily(1, (1, 5)), 0)

    def test_guard_single_part(self):
        with pytest.raises(ValueError):
            shift_monotonicity_check(JoinFamily(1, (5,)), 0)


class TestCase2:
    def test_not_applicable_below_cutoff(self):
        assert not case2_applicable(10, 0.5, 1, 40)
        assert 0.5 < CASE2_ALPHA_CUTOFF < 0.62
        with pytest.raises(ValueError):
            case2_sample_check(10, 0.5, 1, 40)

    def test_positive_in_region(self):
        assert case2_sample_check(10, 2.0, 1, 30)

    def test_positive_at_cap(self):
        # alpha=1, beta=20: largest core with a nonempty window is s=4,
        # and the window just above the threshold contains n=52
        assert case2_applicable(20, 1.0, 4, 52)
        assert case2_sample_check(20, 1.0, 4, 52)

    def test_region_bounds_shrink_with_s(self):
        lo1, hi1 = case2_region_bounds(20, 1.0, 1)
        lo4, hi4 = case2_region_bounds(20, 1.0, 4)
        assert lo1 == lo4
        assert hi4 < hi1


class TestIsPredictedGraph:
    def test_complete_split(self):
        assert is_predicted_graph(complete_split_graph(6, 2), COMPLETE_SPLIT, 6, 2)

    def test_cycle_matches_nothing(self):
        g = cycle_graph(6)
        for d in (COMPLETE, COMPLETE_SPLIT, ODD_CLIQUE_PLUS_ISOLATES):
            assert not is_predicted_graph(g, d, 6, 2)

    def test_degree_sequence_pins_down_families(self):
        # threshold graphs are the unique realizations of their degree
        # sequences; verify exhaustively over all classes at n = 6, 7
        for n, beta in [(6, 1), (6, 2), (7, 1), (7, 2), (7, 3)]:
            targets = {
                COMPLETE_SPLIT: canonical_graph(complete_split_graph(n, beta)),
                ODD_CLIQUE_PLUS_ISOLATES: canonical_graph(
                    disjoint_union(complete_graph(2 * beta + 1), empty_graph(n - 2 * beta - 1))
                ),
            }
            for g in isomorphism_classes(n):
                for descriptor, target in targets.items():
                    if is_predicted_graph(g, descriptor, n, beta):
                        assert are_isomorphic(g, target)


class TestArgmaxFamilyStructure:
    def test_argmax_graphs_decompose_as_join_families(self):
        # every winner at small order matches the join-family shape
        # rebuilt from its own deficiency witness
        for n in (4, 5, 6, 7):
            for alpha in (0, 1):
                for report in verify_order(n, alpha):
                    for cert in report.argmax_certificates:
                        from alphaspec import parse_graph6

                        g = parse_graph6(cert)
                        w = tutte_berge_witness(g)
                        removed = 0
                        for v in w.witness_set:
                            removed |= 1 << v
                        from alphaspec.graphs import component_masks

                        sizes = sorted(m.bit_count() for m in component_masks(g, removed))
                        if w.s == 0:
                            continue
                        assert all(size % 2 == 1 for size in sizes)
                        rebuilt = JoinFamily(w.s, tuple(sizes)).graph()
                        assert are_isomorphic(g, rebuilt)


class TestParallelDeterminism:
    def test_scan_matches_serial(self):
        # worker count must not change any report field except timing
        from alphaspec.theorem import as_fraction
        from alphaspec.verify import _SCAN_CACHE

        key = (6, as_fraction(3))
        _SCAN_CACHE.pop(key, None)
        parallel = exhaustive_max(6, 2, 3, jobs=2)
        _SCAN_CACHE.pop(key, None)
        serial = exhaustive_max(6, 2, 3, jobs=1)
        assert serial.observed_max == parallel.observed_max
        assert serial.argmax_certificates == parallel.argmax_certificates
        assert serial.graphs_scanned == parallel.graphs_scanned

    def test_enumeration_matches_serial(self):
        from alphaspec import enumeration

        serial = [g.rows for g in isomorphism_classes(6)]
        enumeration._LEVELS.pop(6, None)
        parallel = [g.rows for g in isomorphism_classes(6, jobs=2)]
        assert serial == parallel


class TestFailureVisibility:
    def test_missing_extremal_class_fails_value_and_structure(self, tmp_path):
        # drop K_5 from the order-5 census: the observed maximum over
        # beta=2 falls below the predicted 4
        from alphaspec import parse_graph6

        kept = [g for g in isomorphism_classes(5) if g.num_edges < 10]
        path = tmp_path / "holey.g6"
        path.write_text("\n".join(to_graph6(g) for g in kept) + "\n")
        rec = exhaustive_max(5, 2, 0, source=str(path))
        assert not rec.value_pass
        assert not rec.passed
