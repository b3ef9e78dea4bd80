"""Tests for tableaux, row insertion, and Schur polynomial algebra.

Expected counts were generated by the enumeration oracle in this file (naive
filling with both tableau conditions checked on the complete array), then
frozen.  Polynomial identities are verified coefficient by coefficient.
"""

import itertools

import pytest

from pierikit.tableaux import (
    SparsePoly,
    Tableau,
    chow_project,
    complete_homogeneous,
    empty_tableau,
    pieri_bijection_check,
    pieri_shapes,
    row_insert,
    schur_decompose,
    schur_expand,
    shape_tree_chains,
    ssyt_enumerate,
)


def oracle_ssyt_count(shape, m):
    """Count semistandard fillings by brute force over entry assignments."""
    cells = [(r, c) for r, ln in enumerate(shape) for c in range(ln)]
    count = 0
    for values in itertools.product(range(1, m + 1), repeat=len(cells)):
        grid = {}
        for cell, v in zip(cells, values):
            grid[cell] = v
        ok = True
        for (r, c), v in grid.items():
            if c and grid[(r, c - 1)] > v:
                ok = False
            if r and (r - 1, c) in grid and grid[(r - 1, c)] >= v:
                ok = False
        count += ok
    return count


class TestTableau:
    def test_validation(self):
        Tableau(((1, 2, 2), (2, 3)), 3)
        with pytest.raises(ValueError):
            Tableau(((2, 1),), 3)  # row decreases
        with pytest.raises(ValueError):
            Tableau(((1,), (1,)), 3)  # column repeats
        with pytest.raises(ValueError):
            Tableau(((1,), (2, 2)), 3)  # lengths grow
        with pytest.raises(ValueError):
            Tableau(((4,),), 3)  # entry too big

    def test_content(self):
        t = Tableau(((1, 1, 3), (2,)), 3)
        assert t.content() == (2, 1, 1)
        assert t.shape == (3, 1)


class TestEnumeration:
    def test_frozen_counts(self):
        assert len(ssyt_enumerate((1,), 4)) == 4
        assert len(ssyt_enumerate((2, 1), 3)) == 8
        assert len(ssyt_enumerate((2, 2), 3)) == 6
        assert len(ssyt_enumerate((4, 2), 3)) == 27
        assert len(ssyt_enumerate((2,), 3)) == 6
        assert len(ssyt_enumerate((), 3)) == 1
        assert ssyt_enumerate((1, 1, 1), 2) == ()

    def test_against_oracle(self):
        for shape in [(1,), (2,), (2, 1), (3, 1), (2, 2), (2, 1, 1)]:
            for m in (2, 3):
                assert len(ssyt_enumerate(shape, m)) == oracle_ssyt_count(shape, m)

    def test_all_valid_and_distinct(self):
        ts = ssyt_enumerate((3, 2), 3)
        assert len({t.rows for t in ts}) == len(ts)
        for t in ts:
            assert t.shape == (3, 2)


class TestInsertion:
    def test_single_letter(self):
        t, chain = row_insert(empty_tableau(3), (1,))
        assert t.rows == ((1,),)
        assert chain == ((), (1,))

    def test_bumping_path(self):
        t = Tableau(((1, 3), (2,)), 3)
        res, chain = row_insert(t, (2, 2))
        assert res.rows == ((1, 2, 2), (2, 3))
        assert chain == ((2, 1), (2, 2), (3, 2))

    def test_word_must_increase(self):
        with pytest.raises(ValueError):
            row_insert(empty_tableau(3), (2, 1))

    def test_chain_grows_one_cell_per_letter(self):
        for t in ssyt_enumerate((2, 1), 3):
            for strip in ssyt_enumerate((2,), 3):
                res, chain = row_insert(t, strip.rows[0])
                sizes = [sum(s) for s in chain]
                assert sizes == [3, 4, 5]
                assert res.shape == chain[-1]


class TestPieriShapes:
    def test_42_by_2(self):
        got = pieri_shapes((4, 2), 2, 3)
        assert set(got) == {(6, 2), (5, 3), (5, 2, 1), (4, 4), (4, 3, 1), (4, 2, 2)}

    def test_row_bound(self):
        # with only two rows available the third row cannot start
        assert set(pieri_shapes((2, 1), 1, 2)) == {(3, 1), (2, 2)}

    def test_zero_strip(self):
        assert pieri_shapes((3, 1), 0, 3) == ((3, 1),)


class TestBijection:
    def test_frozen_main_case(self):
        rep = pieri_bijection_check((4, 2), 2, 3)
        assert rep.passed
        assert rep.pairs_total == 162
        assert dict(rep.image_counts) == {
            (6, 2): 60,
            (5, 3): 42,
            (5, 2, 1): 24,
            (4, 4): 15,
            (4, 3, 1): 15,
            (4, 2, 2): 6,
        }
        assert dict(rep.image_counts) == dict(rep.expected_counts)

    def test_small_cases(self):
        assert pieri_bijection_check((1,), 1, 2).passed
        assert pieri_bijection_check((2, 1), 0, 3).passed
        assert pieri_bijection_check((3, 1), 3, 3).passed
        assert pieri_bijection_check((2, 2), 2, 2).passed

    def test_chains_match_tree(self):
        rep = pieri_bijection_check((2,), 2, 2)
        assert rep.chains_ok and rep.chains_complete
        tree = set(shape_tree_chains((2,), 2, 2))
        assert tree == {
            ((2,), (3,), (4,)),
            ((2,), (2, 1), (3, 1)),
            ((2,), (2, 1), (2, 2)),
        }


class TestSparsePoly:
    def test_arithmetic(self):
        x = SparsePoly.monomial((1, 0))
        y = SparsePoly.monomial((0, 1))
        p = (x + y) * (x + y)
        assert p.coeff((2, 0)) == 1
        assert p.coeff((1, 1)) == 2
        assert (p - p) == SparsePoly.zero(2)
        assert not (p - p)

    def test_symmetry(self):
        x = SparsePoly.monomial((1, 0))
        y = SparsePoly.monomial((0, 1))
        assert (x + y).is_symmetric()
        assert (x * x + y * y).is_symmetric()
        assert not x.is_symmetric()
        assert not (x + 2 * y).is_symmetric()

    def test_json(self):
        p = SparsePoly(2, {(1, 0): 1, (0, 1): 1})
        assert p.to_json() == {"0,1": "1", "1,0": "1"}


class TestSchur:
    def test_expansion_dimensions(self):
        # number of monomials with multiplicity equals SSYT count
        s = schur_expand((2, 1), 3)
        assert sum(s.terms.values()) == 8
        assert s.is_symmetric()

    def test_h_is_single_row(self):
        assert complete_homogeneous(2, 3) == schur_expand((2,), 3)
        assert complete_homogeneous(0, 3) == SparsePoly.one(3)

    def test_pieri_identity_examples(self):
        m = 3
        s1 = schur_expand((1,), m)
        assert s1 * complete_homogeneous(1, m) == (
            schur_expand((2,), m) + schur_expand((1, 1), m)
        )
        lhs = schur_expand((2, 1), m) * complete_homogeneous(2, m)
        rhs = SparsePoly.zero(m)
        for mu in [(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)]:
            rhs = rhs + schur_expand(mu, m)
        assert lhs == rhs

    def test_decompose_roundtrip(self):
        m = 3
        p = schur_expand((2, 1), m) * complete_homogeneous(2, m)
        assert schur_decompose(p, m) == {
            (4, 1): 1,
            (3, 2): 1,
            (3, 1, 1): 1,
            (2, 2, 1): 1,
        }

    def test_decompose_rejects_asymmetric(self):
        with pytest.raises(ValueError):
            schur_decompose(SparsePoly.monomial((1, 0)), 2)

    def test_decompose_rejects_fractional(self):
        from fractions import Fraction

        p = schur_expand((1,), 2) * Fraction(1, 2)
        with pytest.raises(ValueError):
            schur_decompose(p, 2)


class TestChowProject:
    def test_truncation(self):
        assert chow_project({(3,): 1, (2, 1): 2}, 4, 2) == {(2, 1): 2}
        assert chow_project({(): 5}, 4, 2) == {(): 5}
        assert chow_project({(2, 2): 1}, 4, 2) == {(2, 2): 1}
