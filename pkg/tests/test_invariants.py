"""Exact combinatorial parameters against naive oracles and known values."""

from fractions import Fraction

import numpy as np
import pytest

from fracrank import (
    alpha,
    b_fold_coloring,
    chi,
    chi_b,
    chi_f,
    chi_with_coloring,
    complement,
    generate,
    is_chordal,
    max_clique,
    max_independent_set,
    maximal_independent_sets,
    omega,
)
from helpers import naive_alpha, naive_chi, naive_omega, random_chordal, random_graph


def test_alpha_known_values():
    assert alpha(generate("path", 4)) == 2
    assert alpha(generate("complete", 6)) == 1
    assert alpha(generate("cycle", 5)) == 2


def test_omega_known_values():
    assert omega(generate("path", 4)) == 2
    assert omega(generate("complete", 6)) == 6
    assert omega(generate("cycle", 5)) == 2


def test_chi_known_values():
    assert chi(generate("path", 4)) == 2
    assert chi(generate("complete", 6)) == 6
    assert chi(generate("cycle", 5)) == 3


def test_witnesses_are_witnesses():
    g = generate("cycle", 5)
    ind = max_independent_set(g)
    assert len(ind) == 2 and not g.has_edge(*ind)
    clq = max_clique(g)
    assert len(clq) == 2 and g.has_edge(*clq)
    c, col = chi_with_coloring(g)
    assert c == 3 and col.is_proper(g) and col.fold == 1


@pytest.mark.parametrize("seed", range(12))
def test_engines_match_naive_oracles(seed):
    rng = np.random.default_rng(seed)
    g = random_graph(rng, int(rng.integers(1, 8)), float(rng.uniform(0.15, 0.85)))
    assert alpha(g) == naive_alpha(g)
    assert omega(g) == naive_omega(g)
    assert chi(g) == naive_chi(g)


@pytest.mark.parametrize("seed", range(8))
def test_alpha_omega_chi_inequalities(seed):
    rng = np.random.default_rng(100 + seed)
    g = random_graph(rng, int(rng.integers(2, 9)), 0.5)
    assert alpha(g) == omega(complement(g))
    assert omega(g) <= chi(g)
    assert chi_f(g) <= chi(g)


class TestFoldColorings:
    def test_c5_five_two(self):
        col = b_fold_coloring(generate("cycle", 5), 5, 2)
        assert col is not None and col.is_proper(generate("cycle", 5))

    def test_k2_needs_two_b(self):
        # c = 2b - 1 never suffices on an edge: disjointness forces c >= 2b
        for b in (1, 2, 3):
            assert b_fold_coloring(generate("complete", 2), 2 * b - 1, b) is None

    def test_empty_graph_takes_full_palette(self):
        g = generate("empty", 3)
        col = b_fold_coloring(g, 2, 2)
        assert col is not None
        assert all(col.assignment[v] == frozenset({1, 2}) for v in g.vertices)

    def test_chi_b_scales(self):
        c5 = generate("cycle", 5)
        assert chi_b(c5, 1) == 3
        assert chi_b(c5, 2) == 5
        # b * chi_f <= chi_b
        for b in (1, 2, 3):
            assert b * chi_f(c5) <= chi_b(c5, b)


class TestFractionalChromatic:
    def test_c5_exact(self):
        assert chi_f(generate("cycle", 5)) == Fraction(5, 2)

    def test_cliques(self):
        for n in (1, 2, 3, 5):
            assert chi_f(generate("complete", n)) == n

    def test_p4(self):
        assert chi_f(generate("path", 4)) == 2

    def test_c7(self):
        # odd cycles have fractional chromatic number n / alpha
        assert chi_f(generate("cycle", 7)) == Fraction(7, 3)

    def test_maximal_independent_sets_c5(self):
        sets = maximal_independent_sets(generate("cycle", 5))
        assert len(sets) == 5 and all(len(s) == 2 for s in sets)

    @pytest.mark.parametrize("seed", range(6))
    def test_rational_bounds(self, seed):
        rng = np.random.default_rng(300 + seed)
        g = random_graph(rng, 7, 0.5)
        val = chi_f(g)
        if g.n:
            assert omega(g) <= val <= chi(g)
            # n / alpha is a classical lower bound
            assert val >= Fraction(g.n, alpha(g))


class TestChordality:
    def test_complete_graphs_chordal(self):
        rep = is_chordal(generate("complete", 4))
        assert rep.chordal and len(rep.elimination_ordering) == 4

    def test_c5_hole_witness(self):
        rep = is_chordal(generate("cycle", 5))
        assert not rep.chordal
        hole = rep.hole
        assert hole is not None and len(hole) >= 4
        g = generate("cycle", 5)
        # the witness really is an induced cycle
        m = len(hole)
        for i in range(m):
            assert g.has_edge(hole[i], hole[(i + 1) % m])
        for i in range(m):
            for j in range(i + 2, m):
                if (i, j) != (0, m - 1):
                    assert not g.has_edge(hole[i], hole[j])

    def test_p4_chordal_with_ordering(self):
        rep = is_chordal(generate("path", 4))
        assert rep.chordal
        g = generate("path", 4)
        order = rep.elimination_ordering
        pos = {v: i for i, v in enumerate(order)}
        for v in order:
            later = [w for w in g.adjacency[v] if pos[w] > pos[v]]
            for i, x in enumerate(later):
                for y in later[i + 1:]:
                    assert g.has_edge(x, y)

    @pytest.mark.parametrize("seed", range(10))
    def test_random_chordal_graphs_detected_and_perfect(self, seed):
        rng = np.random.default_rng(500 + seed)
        g = random_chordal(rng, int(rng.integers(4, 10)))
        rep = is_chordal(g)
        assert rep.chordal
        assert omega(g) == chi(g)

    def test_c6_not_chordal(self):
        assert not is_chordal(generate("cycle", 6)).chordal
