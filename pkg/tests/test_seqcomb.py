"""Tests for strictly decreasing index sequences and their branching tree.

The brute-force oracle below enumerates candidate sequences directly from the
interlacing definition, independent of the recursive production used by the
library, and the small frozen cases were computed from it.
"""

import itertools

import pytest

from pierikit.seqcomb import (
    DecSeq,
    PieriTree,
    alpha_of,
    bruhat_leq,
    codim,
    covers_under,
    dual,
    first_diff_index,
    lambda_of,
    pieri_increment,
    pieri_set,
    tree_chains,
)


def oracle_pieri(a: DecSeq, r: int) -> set[DecSeq]:
    """Direct enumeration: all b interlacing a with codim gain r."""
    n, m = a.n, a.m
    out = set()
    for entries in itertools.combinations(range(1, n + 1), m):
        b = DecSeq(n, tuple(sorted(entries, reverse=True)))
        ok = sum(b.entries) == sum(a.entries) + r
        for i in range(m):
            lower = a.entries[i]
            upper = a.entries[i - 1] - 1 if i else n
            if not lower <= b.entries[i] <= upper:
                ok = False
        if ok:
            out.add(b)
    return out


def all_seqs(n, m):
    for entries in itertools.combinations(range(1, n + 1), m):
        yield DecSeq(n, tuple(sorted(entries, reverse=True)))


class TestDecSeq:
    def test_validation(self):
        with pytest.raises(ValueError):
            DecSeq(4, (1, 2))
        with pytest.raises(ValueError):
            DecSeq(4, (5, 1))
        with pytest.raises(ValueError):
            DecSeq(4, (2, 2))
        with pytest.raises(ValueError):
            DecSeq(4, (1, 0))

    def test_str_compact(self):
        assert str(DecSeq(9, (7, 4, 1))) == "741"
        assert str(DecSeq(12, (11, 3))) == "11,3"

    def test_codim(self):
        assert codim(DecSeq(9, (7, 4, 1))) == 6
        assert codim(DecSeq(4, (1,))) == 0
        assert codim(DecSeq(4, (2, 1))) == 0

    def test_bump(self):
        a = DecSeq(9, (7, 4, 1))
        assert a.bump(1).entries == (8, 4, 1)
        assert a.bump(3, 2).entries == (7, 4, 3)


class TestPieriSet:
    def test_zero_steps(self):
        a = DecSeq(9, (7, 4, 1))
        assert pieri_set(a, 0) == (a,)

    def test_single_step_741(self):
        got = pieri_set(DecSeq(9, (7, 4, 1)), 1)
        assert [g.entries for g in got] == [(8, 4, 1), (7, 5, 1), (7, 4, 2)]

    def test_two_step_741(self):
        got = pieri_set(DecSeq(9, (7, 4, 1)), 2)
        assert [g.entries for g in got] == [
            (9, 4, 1),
            (8, 5, 1),
            (8, 4, 2),
            (7, 6, 1),
            (7, 5, 2),
            (7, 4, 3),
        ]

    def test_top_cutoff(self):
        # increments past n disappear rather than clamp
        got = pieri_set(DecSeq(4, (4, 2)), 1)
        assert [g.entries for g in got] == [(4, 3)]

    def test_matches_oracle_exhaustive(self):
        for n in range(1, 7):
            for m in range(1, n + 1):
                for a in all_seqs(n, m):
                    for r in range(0, 4):
                        assert set(pieri_set(a, r)) == oracle_pieri(a, r), (a, r)

    def test_lex_decreasing_order(self):
        for a in all_seqs(6, 3):
            for r in (1, 2):
                got = [g.entries for g in pieri_set(a, r)]
                assert got == sorted(got, reverse=True)

    def test_increment_membership(self):
        a = DecSeq(9, (7, 4, 1))
        assert pieri_increment(a, DecSeq(9, (8, 5, 1))) == 2
        assert pieri_increment(a, DecSeq(9, (7, 4, 1))) == 0
        # not interlacing: second entry jumped past first original entry
        assert pieri_increment(a, DecSeq(9, (8, 8, 1) if False else (9, 8, 1))) is None
        assert pieri_increment(DecSeq(4, (3, 1)), DecSeq(4, (2, 1))) is None


class TestFirstDiff:
    def test_values(self):
        a = DecSeq(9, (7, 4, 1))
        assert first_diff_index(a, DecSeq(9, (8, 5, 1))) == 1
        assert first_diff_index(a, DecSeq(9, (7, 5, 2))) == 2
        assert first_diff_index(a, DecSeq(9, (7, 4, 3))) == 3

    def test_requires_membership(self):
        a = DecSeq(9, (7, 4, 1))
        with pytest.raises(ValueError):
            first_diff_index(a, a)
        with pytest.raises(ValueError):
            first_diff_index(a, DecSeq(9, (9, 8, 1)))


class TestDualAndShape:
    def test_dual_741(self):
        assert dual(DecSeq(9, (7, 4, 1))).entries == (9, 6, 3)

    def test_dual_involution(self):
        for a in all_seqs(6, 3):
            assert dual(dual(a)) == a

    def test_dual_codim_complement(self):
        n, m = 6, 3
        top = m * (n - m)
        for a in all_seqs(n, m):
            assert codim(a) + codim(dual(a)) == top

    def test_lambda_roundtrip(self):
        a = DecSeq(9, (7, 4, 1))
        assert lambda_of(a) == (4, 2)
        assert alpha_of((4, 2), 9, 3) == a
        for b in all_seqs(7, 3):
            assert alpha_of(lambda_of(b), 7, 3) == b

    def test_alpha_of_rejects_wide(self):
        with pytest.raises(ValueError):
            alpha_of((5,), 6, 2)
        with pytest.raises(ValueError):
            alpha_of((1, 1, 1), 6, 2)


class TestBruhat:
    def test_basic(self):
        assert bruhat_leq(DecSeq(4, (3, 1)), DecSeq(4, (4, 2)))
        assert not bruhat_leq(DecSeq(4, (4, 1)), DecSeq(4, (3, 2)))

    def test_pieri_members_dominate(self):
        for a in all_seqs(6, 2):
            for r in (1, 2):
                for b in pieri_set(a, r):
                    assert bruhat_leq(a, b)


class TestTree:
    def test_levels_741_depth2(self):
        tree, chains = tree_chains(DecSeq(9, (7, 4, 1)), 2)
        assert [len(lv) for lv in tree.levels] == [1, 3, 6]
        assert len(chains) == 6

    def test_edges_match_branching_rule(self):
        tree, _ = tree_chains(DecSeq(9, (7, 4, 1)), 2)
        s = lambda e: DecSeq(9, e)
        want = {
            (s((7, 4, 1)), s((8, 4, 1))),
            (s((7, 4, 1)), s((7, 5, 1))),
            (s((7, 4, 1)), s((7, 4, 2))),
            (s((8, 4, 1)), s((9, 4, 1))),
            (s((7, 5, 1)), s((8, 5, 1))),
            (s((7, 5, 1)), s((7, 6, 1))),
            (s((7, 4, 2)), s((8, 4, 2))),
            (s((7, 4, 2)), s((7, 5, 2))),
            (s((7, 4, 2)), s((7, 4, 3))),
        }
        assert set(tree.edges) == want

    def test_chains_end_at_leaves(self):
        tree, chains = tree_chains(DecSeq(9, (7, 4, 1)), 2)
        assert {c[-1] for c in chains} == set(tree.levels[-1])
        for c in chains:
            assert len(c) == 3
            for x, y in zip(c, c[1:]):
                assert (x, y) in set(tree.edges)

    def test_unique_parent_exhaustive(self):
        # each level-(r+1) node has exactly one parent at level r
        for n in range(2, 8):
            for m in range(1, min(n, 4) + 1):
                for a in all_seqs(n, m):
                    for b in range(1, 4):
                        tree, _ = tree_chains(a, b)
                        for lv, nodes in enumerate(tree.levels[1:], start=1):
                            for g in nodes:
                                parents = [
                                    p for p in tree.levels[lv - 1]
                                    if covers_under(a, p, g)
                                ]
                                assert len(parents) == 1, (a, g)

    def test_covers_under(self):
        a = DecSeq(9, (7, 4, 1))
        b = DecSeq(9, (7, 4, 2))
        assert covers_under(a, b, DecSeq(9, (7, 5, 2)))
        # (8,4,2) differs from a first at 1 but from b's chain at 1 too
        assert covers_under(a, b, DecSeq(9, (8, 4, 2)))
        # (7,4,3): step at position 3, equals j(a,.) = 3
        assert covers_under(a, b, DecSeq(9, (7, 4, 3)))
        b2 = DecSeq(9, (8, 4, 1))
        # from (8,4,1) only the first entry may grow
        assert covers_under(a, b2, DecSeq(9, (9, 4, 1)))
        assert not covers_under(a, b2, DecSeq(9, (8, 5, 1)))
        assert not covers_under(a, b2, DecSeq(9, (8, 4, 2)))
