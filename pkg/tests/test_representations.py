"""Certificate verification and every constructive transformation."""

import json
from fractions import Fraction

import numpy as np
import pytest

from fracrank import (
    Graph,
    Subspace,
    SubspaceRepresentation,
    ProjectiveRepresentation,
    canonical_faithful_rep,
    chi_with_coloring,
    choose_k,
    coloring_to_osr,
    combine_fold,
    complement,
    faithful_from_pair,
    fixture_p4_fosr,
    fixture_p4_osr,
    generate,
    glue_clique_sum,
    osr_to_projective,
    pad_disjoint_union,
    projective_to_osr,
    rep_from_json,
    rep_to_json,
    stack_union,
    standardize_clique,
    union,
    verify,
    verify_faithful_projective,
    verify_fosr,
    verify_osr,
    verify_projective,
)
from fracrank.invariants import Coloring
from helpers import random_fosr, random_graph, random_osr, random_unitary, rotate_rep


def p4():
    return generate("path", 4)


class TestFixtures:
    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_faithful_ladder(self, r):
        rep = fixture_p4_fosr(r)
        assert rep.d == 2 * r + 1 and rep.r == r and rep.faithful
        assert verify_fosr(rep).valid

    @pytest.mark.parametrize("r", [1, 2, 3, 4, 5])
    def test_plain_ladder(self, r):
        rep = fixture_p4_osr(r)
        assert rep.d == 2 * r and rep.r == r and not rep.faithful
        assert verify_osr(rep).valid

    def test_plain_ladder_meets_clique_lower_bound(self):
        # the plain value 2r is tight against r * (clique number 2)
        rep = fixture_p4_osr(3)
        assert rep.d == 3 * 2

    def test_plain_fixture_is_not_faithful(self):
        # S2 = S4 makes the non-adjacent pair (2,4) non-orthogonal
        rep = fixture_p4_osr(2)
        as_faithful = SubspaceRepresentation(rep.graph, rep.d, rep.r,
                                             rep.assignment, True)
        report = verify_fosr(as_faithful)
        assert not report.valid
        assert any(v.where == ("2", "4") and v.condition == "nonedge-orthogonality"
                   for v in report.violations)


class TestVerifiers:
    def test_osr_p4_shared_spans(self):
        assert verify_osr(fixture_p4_osr(2)).valid

    def test_osr_edge_violation(self):
        k2 = generate("complete", 2)
        span = Subspace(np.array([[1.0], [0.0]], dtype=complex))
        rep = SubspaceRepresentation(k2, 2, 1, {"1": span, "2": span}, False)
        report = verify_osr(rep)
        assert not report.valid
        assert report.violations[0].condition == "edge-orthogonality"

    def test_osr_empty_graph_trivially_valid(self):
        # plain semantics constrains edges only, so equal spans are fine here
        g = generate("empty", 3)
        span = Subspace(np.array([[1.0], [0.0]], dtype=complex))
        rep = SubspaceRepresentation(g, 2, 1, {v: span for v in g.vertices}, False)
        assert verify_osr(rep).valid

    def test_fosr_k2_single_edge(self):
        k2 = generate("complete", 2)
        s1 = Subspace(np.array([[1.0], [0.0]], dtype=complex))
        s2 = Subspace(np.array([[1 / np.sqrt(2)], [1 / np.sqrt(2)]], dtype=complex))
        rep = SubspaceRepresentation(k2, 2, 1, {"1": s1, "2": s2}, True)
        assert verify_fosr(rep).valid

    def test_wrong_flag_dispatch_raises(self):
        with pytest.raises(ValueError):
            verify_osr(fixture_p4_fosr(1))
        with pytest.raises(ValueError):
            verify_fosr(fixture_p4_osr(1))

    def test_projective_valid_by_construction(self):
        proj = osr_to_projective(fixture_p4_osr(2))
        assert verify_projective(proj).valid

    def test_projective_rank_violation(self):
        k1 = generate("complete", 1)
        rep = ProjectiveRepresentation(k1, 3, 1, {"1": np.diag([1.0, 1.0, 0.0])}, False)
        report = verify_projective(rep)
        assert not report.valid and report.violations[0].condition == "rank"

    def test_projective_non_hermitian(self):
        k1 = generate("complete", 1)
        m = np.array([[1, 1], [0, 0]], dtype=complex)
        report = verify_projective(ProjectiveRepresentation(k1, 2, 1, {"1": m}, False))
        assert not report.valid
        assert report.violations[0].condition == "hermitian"

    def test_faithful_projective_on_p4(self):
        proj = osr_to_projective(fixture_p4_fosr(2))
        assert verify_faithful_projective(proj).valid

    def test_all_equal_projectors_fail_faithfully_on_p3(self):
        p3 = generate("path", 3)
        p = np.diag([1.0, 0.0])
        rep = ProjectiveRepresentation(p3, 2, 1, {v: p for v in p3.vertices}, True)
        report = verify_faithful_projective(rep)
        assert not report.valid
        assert any(v.where == ("1", "3") for v in report.violations)

    def test_extra_edge_invalidates(self):
        rep = fixture_p4_fosr(2)
        bigger = Graph.build(["1", "2", "3", "4"],
                             [["1", "2"], ["2", "3"], ["3", "4"], ["1", "3"]])
        moved = SubspaceRepresentation(bigger, rep.d, rep.r, rep.assignment, True)
        report = verify_fosr(moved)
        assert not report.valid
        assert any(v.where == ("1", "3") and v.condition == "edge-nonorthogonality"
                   for v in report.violations)


class TestConversions:
    def test_k1_span_to_projector(self):
        k1 = generate("complete", 1)
        span = Subspace(np.array([[1.0], [0.0]], dtype=complex))
        rep = SubspaceRepresentation(k1, 2, 1, {"1": span}, False)
        proj = osr_to_projective(rep)
        assert np.allclose(proj.projector("1"), np.diag([1.0, 0.0]))

    def test_faithful_three_one(self):
        proj = osr_to_projective(fixture_p4_fosr(1))
        assert (proj.d, proj.r) == (3, 1)
        assert verify_faithful_projective(proj).valid

    def test_projector_back_to_span(self):
        k1 = generate("complete", 1)
        rep = ProjectiveRepresentation(k1, 2, 1, {"1": np.diag([1.0, 0.0])}, False)
        back = projective_to_osr(rep)
        assert np.allclose(np.abs(back.basis("1")), [[1.0], [0.0]])

    def test_round_trip_residual(self):
        proj = osr_to_projective(fixture_p4_fosr(2))
        again = osr_to_projective(projective_to_osr(proj))
        resid = max(np.linalg.norm(proj.projector(v) - again.projector(v))
                    for v in proj.graph.vertices)
        assert resid < 1e-8
        assert verify_faithful_projective(again).valid

    def test_invalid_input_rejected(self):
        k2 = generate("complete", 2)
        span = Subspace(np.array([[1.0], [0.0]], dtype=complex))
        rep = SubspaceRepresentation(k2, 2, 1, {"1": span, "2": span}, False)
        with pytest.raises(ValueError, match="verification"):
            osr_to_projective(rep)

    @pytest.mark.parametrize("seed", range(8))
    def test_round_trip_random(self, seed):
        rng = np.random.default_rng(900 + seed)
        g = random_graph(rng, int(rng.integers(2, 6)), 0.5)
        rep = random_fosr(rng, g, int(rng.integers(1, 3))) if seed % 2 \
            else random_osr(rng, g, int(rng.integers(1, 3)))
        proj = osr_to_projective(rep)
        back = projective_to_osr(proj)
        proj2 = osr_to_projective(back)
        resid = max(np.linalg.norm(proj.projector(v) - proj2.projector(v))
                    for v in g.vertices) if g.n else 0.0
        assert resid < 1e-8
        assert verify(proj2).valid == verify(proj).valid


class TestCombineFold:
    def test_two_faithful_ladders(self):
        c = combine_fold(fixture_p4_fosr(1), fixture_p4_fosr(1))
        assert (c.d, c.r) == (6, 2) and c.faithful
        assert verify_fosr(c).valid

    def test_empty_graph_dimensions_double(self):
        g = generate("empty", 2)
        span = Subspace(np.array([[1.0], [0.0]], dtype=complex))
        rep = SubspaceRepresentation(g, 2, 1, {v: span for v in g.vertices}, False)
        c = combine_fold(rep, rep)
        assert (c.d, c.r) == (4, 2)

    def test_graph_mismatch(self):
        other = generate("cycle", 5)
        _, col = chi_with_coloring(other)
        rep5 = coloring_to_osr(other, col, 1)
        with pytest.raises(ValueError, match="different graphs"):
            combine_fold(fixture_p4_osr(1), rep5)

    def test_flag_mismatch(self):
        with pytest.raises(ValueError, match="flags"):
            combine_fold(fixture_p4_osr(1), fixture_p4_fosr(1))

    @pytest.mark.parametrize("seed", range(10))
    def test_random_folds_verify(self, seed):
        rng = np.random.default_rng(1234 + seed)
        g = random_graph(rng, int(rng.integers(2, 6)), 0.5)
        r1, r2 = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        if seed % 2:
            a, b = random_fosr(rng, g, r1), random_fosr(rng, g, r2)
        else:
            a, b = random_osr(rng, g, r1), random_osr(rng, g, r2)
        c = combine_fold(a, b)
        assert (c.d, c.r) == (a.d + b.d, a.r + b.r)
        assert verify(c).valid


class TestPadAndStack:
    def test_pad_two_k2(self):
        k2 = generate("complete", 2)
        _, col = chi_with_coloring(k2)
        rep = coloring_to_osr(k2, col, 1)
        out = pad_disjoint_union([rep, rep])
        assert out.d == 2 and out.graph.n == 4
        assert verify_osr(out).valid

    def test_pad_ambient_is_max(self):
        g1, g2 = generate("path", 3), generate("complete", 2)
        _, c1 = chi_with_coloring(g1)
        _, c2 = chi_with_coloring(g2)
        rep1 = coloring_to_osr(g1, c1, 1)  # d = 2
        k3 = generate("complete", 3)
        _, c3 = chi_with_coloring(k3)
        rep3 = coloring_to_osr(k3, c3, 1)  # d = 3
        out = pad_disjoint_union([rep3, rep1])
        assert out.d == 3

    def test_pad_rejects_faithful(self):
        with pytest.raises(ValueError, match="plain"):
            pad_disjoint_union([fixture_p4_fosr(1)])

    def test_stack_c5_from_p4_and_p3(self):
        g1 = Graph.build(["1", "2", "3", "4"], [["1", "2"], ["2", "3"], ["3", "4"]])
        g2 = Graph.build(["4", "5", "1"], [["4", "5"], ["5", "1"]])
        g = union(g1, g2)
        _, c1 = chi_with_coloring(g1)
        _, c2 = chi_with_coloring(g2)
        out = stack_union(coloring_to_osr(g1, c1, 1), coloring_to_osr(g2, c2, 1), g)
        assert out.d == 4
        assert verify_osr(out).valid

    def test_stack_disjoint_parts(self):
        g1 = Graph.build(["a", "b"], [["a", "b"]])
        g2 = Graph.build(["c", "d"], [["c", "d"]])
        g = union(g1, g2)
        _, c1 = chi_with_coloring(g1)
        _, c2 = chi_with_coloring(g2)
        out = stack_union(coloring_to_osr(g1, c1, 1), coloring_to_osr(g2, c2, 1), g)
        assert verify_osr(out).valid

    def test_stack_requires_induced_parts(self):
        g1 = Graph.build(["1", "2", "3"], [["1", "2"]])  # misses edge 23 of g
        g2 = Graph.build(["2", "3"], [["2", "3"]])
        g = union(g1, g2)
        _, c1 = chi_with_coloring(g1)
        _, c2 = chi_with_coloring(g2)
        with pytest.raises(ValueError, match="induced"):
            stack_union(coloring_to_osr(g1, c1, 1), coloring_to_osr(g2, c2, 1), g)


class TestCliqueOperations:
    def test_single_vertex_standardization(self):
        k1 = generate("complete", 1)
        tilted = Subspace(np.array([[1 / np.sqrt(2)], [1 / np.sqrt(2)]], dtype=complex))
        rep = SubspaceRepresentation(k1, 2, 1, {"1": tilted}, False)
        std = standardize_clique(rep, ["1"])
        assert np.allclose(np.abs(std.basis("1")), [[1.0], [0.0]])

    def test_already_standard_identity(self):
        rep = fixture_p4_osr(2)
        std = standardize_clique(rep, ["1", "2"])
        for v in rep.graph.vertices:
            assert np.allclose(std.basis(v), rep.basis(v))

    def test_random_unitary_restored(self):
        k3 = generate("complete", 3)
        _, col = chi_with_coloring(k3)
        rep = coloring_to_osr(k3, col, 1)
        rng = np.random.default_rng(3)
        rotated = rotate_rep(rep, random_unitary(rng, 3))
        std = standardize_clique(rotated, ["1", "2", "3"])
        for i, v in enumerate(["1", "2", "3"]):
            e = np.zeros((3, 1), dtype=complex)
            e[i] = 1
            assert np.linalg.norm(np.abs(std.basis(v)) - e) < 1e-8

    def test_pairwise_products_preserved(self):
        rng = np.random.default_rng(17)
        g = generate("cycle", 5)
        rep = rotate_rep(random_osr(rng, g, 2), random_unitary(rng, 6))
        std = standardize_clique(rep, ["1", "2"])
        for u in g.vertices:
            for v in g.vertices:
                before = np.linalg.norm(rep.basis(u).conj().T @ rep.basis(v))
                after = np.linalg.norm(std.basis(u).conj().T @ std.basis(v))
                assert abs(before - after) <= 10 * 1e-9

    def test_not_a_clique(self):
        rep = fixture_p4_osr(1)
        with pytest.raises(ValueError, match="clique"):
            standardize_clique(rep, ["1", "3"])

    def test_ambient_too_small(self):
        # r*t = 6 exceeds the ambient dimension 4
        k3 = generate("complete", 3)
        small = SubspaceRepresentation(
            k3, 4, 2,
            {v: Subspace(np.eye(4, dtype=complex)[:, :2]) for v in k3.vertices},
            False)
        with pytest.raises(ValueError, match="below"):
            standardize_clique(small, ["1", "2", "3"])

    def test_glue_triangles_sharing_edge(self):
        t1 = Graph.build(["1", "2", "3"], [["1", "2"], ["2", "3"], ["1", "3"]])
        t2 = Graph.build(["1", "2", "4"], [["1", "2"], ["2", "4"], ["1", "4"]])
        _, c1 = chi_with_coloring(t1)
        _, c2 = chi_with_coloring(t2)
        out = glue_clique_sum(coloring_to_osr(t1, c1, 1),
                              coloring_to_osr(t2, c2, 1), ["1", "2"])
        assert out.d == 3
        assert out.graph.n == 4 and len(out.graph.edges) == 5
        assert verify_osr(out).valid

    def test_glue_at_cut_vertex(self):
        g1 = Graph.build(["a", "b"], [["a", "b"]])
        g2 = Graph.build(["b", "c"], [["b", "c"]])
        _, c1 = chi_with_coloring(g1)
        _, c2 = chi_with_coloring(g2)
        out = glue_clique_sum(coloring_to_osr(g1, c1, 1),
                              coloring_to_osr(g2, c2, 1), ["b"])
        assert out.graph.n == 3 and verify_osr(out).valid

    def test_glue_clique_mismatch(self):
        t1 = Graph.build(["1", "2", "3"], [["1", "2"], ["2", "3"], ["1", "3"]])
        t2 = Graph.build(["1", "2", "4"], [["1", "2"], ["2", "4"], ["1", "4"]])
        _, c1 = chi_with_coloring(t1)
        _, c2 = chi_with_coloring(t2)
        with pytest.raises(ValueError, match="differ"):
            glue_clique_sum(coloring_to_osr(t1, c1, 1),
                            coloring_to_osr(t2, c2, 1), ["1"])


class TestColoringAndCanonical:
    def test_p4_two_coloring_reproduces_shared_spans(self):
        g = p4()
        col = Coloring(2, 1, {"1": frozenset({1}), "2": frozenset({2}),
                              "3": frozenset({1}), "4": frozenset({2})})
        rep = coloring_to_osr(g, col, 1)
        assert np.allclose(rep.basis("1"), rep.basis("3"))
        assert np.allclose(rep.basis("2"), rep.basis("4"))
        assert verify_osr(rep).valid

    def test_complete_graph_fold_two(self):
        n = 4
        g = generate("complete", n)
        _, col = chi_with_coloring(g)
        rep = coloring_to_osr(g, col, 2)
        assert rep.d == 2 * n  # meets the r * omega lower bound exactly
        assert verify_osr(rep).valid

    def test_improper_coloring_rejected(self):
        g = p4()
        bad = Coloring(2, 1, {v: frozenset({1}) for v in g.vertices})
        with pytest.raises(ValueError, match="proper"):
            coloring_to_osr(g, bad, 1)

    def test_canonical_empty_graph_standard_basis(self):
        g = generate("empty", 3)
        rep = canonical_faithful_rep(g)
        for u in g.vertices:
            for v in g.vertices:
                if u < v:
                    prod = rep.basis(u).conj().T @ rep.basis(v)
                    assert np.linalg.norm(prod) < 1e-12

    def test_canonical_k2_inner_product(self):
        # adjacency spectrum of a single edge is {-1, 1}, so t = 1/2
        rep = canonical_faithful_rep(generate("complete", 2))
        prod = abs((rep.basis("1").conj().T @ rep.basis("2"))[0, 0])
        assert abs(prod - 0.5) < 1e-9
        assert verify_fosr(rep).valid

    def test_canonical_p4(self):
        rep = canonical_faithful_rep(p4())
        assert rep.d == 4 and rep.r == 1
        assert verify_fosr(rep).valid


class TestChooseKAndFaithfulPair:
    def test_exact_ratio_gives_one(self):
        assert choose_k(4, 2, 2, 0.5) == 1

    def test_arithmetic_example(self):
        # |5 - 8| / (4 * 0.01) - 1/2 = 74.5, so the least integer above is 75
        k = choose_k(5, 2, 4, 0.01)
        assert k == 75
        assert abs(Fraction(5, 2) - Fraction(75 * 5 + 4, 75 * 2 + 1)) < Fraction(1, 100)

    def test_huge_eps_gives_one(self):
        assert choose_k(5, 2, 4, 10.0) == 1

    def test_p4_pair(self):
        g = p4()
        comp = complement(g)
        _, col = chi_with_coloring(comp)
        p = osr_to_projective(coloring_to_osr(comp, col, 2))
        rf = osr_to_projective(canonical_faithful_rep(g))
        folded = faithful_from_pair(p, rf, 0.05)
        assert folded.verify().valid
        assert abs(Fraction(p.d, p.r) - folded.value) < Fraction(5, 100)
        dense = folded.to_projective()
        assert verify_faithful_projective(dense).valid
        assert dense.d == folded.d and dense.r == folded.r

    def test_empty_graph_pair(self):
        g = generate("empty", 2)
        comp = complement(g)  # K2
        _, col = chi_with_coloring(comp)
        p = osr_to_projective(coloring_to_osr(comp, col, 1))
        rf = osr_to_projective(canonical_faithful_rep(g))
        folded = faithful_from_pair(p, rf, 0.5)
        assert folded.verify().valid
        dense = folded.to_projective()
        for u in g.vertices:
            for v in g.vertices:
                if u != v:
                    assert np.linalg.norm(dense.projector(u) @ dense.projector(v)) < 1e-9

    def test_wrong_graph_rejected(self):
        g = p4()
        other = generate("cycle", 5)
        _, col = chi_with_coloring(other)
        p = osr_to_projective(coloring_to_osr(other, col, 1))
        rf = osr_to_projective(canonical_faithful_rep(g))
        with pytest.raises(ValueError, match="complement"):
            faithful_from_pair(p, rf, 0.1)


class TestJsonRoundTrips:
    @pytest.mark.parametrize("maker", [
        lambda: fixture_p4_osr(2),
        lambda: fixture_p4_fosr(2),
        lambda: osr_to_projective(fixture_p4_fosr(1)),
        lambda: osr_to_projective(fixture_p4_osr(1)),
    ])
    def test_representations(self, maker):
        rep = maker()
        doc = json.loads(json.dumps(rep_to_json(rep)))
        back = rep_from_json(doc)
        assert verify(back).valid
        assert back.d == rep.d and back.r == rep.r

    def test_folded(self):
        g = p4()
        comp = complement(g)
        _, col = chi_with_coloring(comp)
        p = osr_to_projective(coloring_to_osr(comp, col, 1))
        rf = osr_to_projective(canonical_faithful_rep(g))
        folded = faithful_from_pair(p, rf, 0.2)
        doc = json.loads(json.dumps(rep_to_json(folded)))
        back = rep_from_json(doc)
        assert back.k == folded.k and back.verify().valid

    def test_unknown_kind(self):
        with pytest.raises(ValueError, match="kind"):
            rep_from_json({"kind": "mystery"})
