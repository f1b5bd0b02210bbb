import pytest

from ppart import (
    CycleError,
    PiPair,
    Poset,
    PosetSyntaxError,
    RangeError,
    connected_ideals,
    enumerate_posets,
    hasse_components,
    induced_occurrences,
    is_ideal,
    is_naturally_labelled,
    iter_ideals,
    mask_of,
    members,
    natural_relabel,
    nontrivial_pairs,
    parse_poset,
    principal_ideal,
    trivially_intersecting,
)
from ppart.fixtures import EX33, FIG1, FORB1, FORB3, P1, P2, P3

CHAIN3 = Poset(3, [(1, 2), (2, 3)])
ANTICHAIN3 = Poset(3, [])


def msk(*elems):
    return mask_of(elems)


class TestParse:
    def test_p1(self):
        P = parse_poset("n 3\n1 2\n1 3")
        assert P == P1

    def test_single_element(self):
        P = parse_poset("n 1")
        assert P.n == 1 and P.covers == frozenset()

    def test_redundant_relation_dropped(self):
        P = parse_poset("n 3\n1 2\n2 3\n1 3")
        assert P.covers == frozenset({(1, 2), (2, 3)})

    def test_comments_and_blanks(self):
        P = parse_poset("# a chain\n\nn 2\n1 2  # cover\n")
        assert P.covers == frozenset({(1, 2)})

    def test_cycle(self):
        with pytest.raises(CycleError):
            parse_poset("n 3\n1 2\n2 3\n3 1")

    def test_label_out_of_range(self):
        with pytest.raises(RangeError):
            parse_poset("n 2\n1 3")

    def test_n_too_large(self):
        with pytest.raises(RangeError):
            parse_poset("n 65")

    def test_malformed(self):
        with pytest.raises(PosetSyntaxError):
            parse_poset("n 2\n1 2 3")
        with pytest.raises(PosetSyntaxError):
            parse_poset("1 2")


class TestIdeals:
    def test_ex33_examples(self):
        assert is_ideal(EX33, msk(2, 4))
        assert not is_ideal(EX33, msk(4))
        assert is_ideal(EX33, 0)

    def test_hasse_components_ex33(self):
        assert hasse_components(EX33, msk(1, 2, 4)) == [msk(1), msk(2, 4)]
        assert hasse_components(EX33, msk(1, 2, 3, 4)) == [msk(1, 2, 3, 4)]
        assert hasse_components(EX33, 0) == []

    def test_ex33_cp_table(self):
        # every nonempty ideal with its component count
        expected = {
            msk(1): 1,
            msk(2): 1,
            msk(1, 2): 2,
            msk(2, 4): 1,
            msk(1, 2, 3): 1,
            msk(1, 2, 4): 2,
            msk(1, 2, 3, 4): 1,
            msk(1, 2, 3, 5): 1,
            msk(1, 2, 3, 4, 5): 1,
        }
        ideals = [J for J in iter_ideals(EX33) if J]
        assert len(ideals) == len(expected)
        for J in ideals:
            assert len(hasse_components(EX33, J)) == expected[J]

    def test_connected_ideals_ex33(self):
        assert connected_ideals(EX33) == [
            msk(1),
            msk(2),
            msk(2, 4),
            msk(1, 2, 3),
            msk(1, 2, 3, 4),
            msk(1, 2, 3, 5),
            msk(1, 2, 3, 4, 5),
        ]

    def test_connected_ideals_fig1_sizes(self):
        sizes = sorted(len(members(J)) for J in connected_ideals(FIG1))
        assert sizes == [1, 1, 1, 1, 2, 3, 4, 7, 7, 8]

    def test_antichain_connected_ideals(self):
        assert connected_ideals(ANTICHAIN3) == [msk(1), msk(2), msk(3)]

    def test_completeness_brute_force(self):
        # no nonempty connected ideal missed, checked over all subsets
        for P in (EX33, FIG1, P2, FORB1):
            brute = [
                S
                for S in range(1, 1 << P.n)
                if is_ideal(P, S) and len(hasse_components(P, S)) == 1
            ]
            assert sorted(brute) == sorted(connected_ideals(P))


class TestPairs:
    def test_ex33_pairs(self):
        pairs = nontrivial_pairs(EX33)
        assert [(p.j1, p.j2) for p in pairs] == [
            (msk(2, 4), msk(1, 2, 3)),
            (msk(2, 4), msk(1, 2, 3, 5)),
            (msk(1, 2, 3, 4), msk(1, 2, 3, 5)),
        ]

    def test_fig1_pair_sizes(self):
        pairs = nontrivial_pairs(FIG1)
        sizes = [(len(members(p.j1)), len(members(p.j2))) for p in pairs]
        assert sizes == [(2, 3), (7, 7)]

    def test_chain_has_none(self):
        assert nontrivial_pairs(CHAIN3) == []

    def test_pair_invariants(self, posets4):
        for P in posets4:
            conn = set(connected_ideals(P))
            for pr in nontrivial_pairs(P):
                assert pr.j1 in conn and pr.j2 in conn
                assert pr.j1 & pr.j2
                assert pr.j1 | pr.j2 == pr.union
                assert pr.union in conn
                assert not trivially_intersecting(pr.j1, pr.j2)
                for comp in pr.intersection_components:
                    assert comp in conn


class TestPrincipal:
    def test_fig1(self):
        assert principal_ideal(FIG1, 7) == msk(1, 2, 3, 4, 5, 6, 7)
        assert principal_ideal(FIG1, 5) == msk(1, 5)
        assert principal_ideal(FIG1, 1) == msk(1)

    def test_range(self):
        with pytest.raises(RangeError):
            principal_ideal(P1, 4)


class TestLabelling:
    def test_flags(self):
        assert is_naturally_labelled(P1)
        assert not is_naturally_labelled(P2)
        assert not is_naturally_labelled(P3)

    def test_relabel_reversed_chain(self):
        rev = Poset(3, [(3, 2), (2, 1)])
        Q, perm = natural_relabel(rev)
        assert Q == CHAIN3
        assert perm == (3, 2, 1)

    def test_relabel_identity_when_natural(self):
        Q, perm = natural_relabel(P1)
        assert Q == P1
        assert perm == (1, 2, 3)

    def test_relabel_is_isomorphism(self, posets4):
        for P in posets4[::7]:
            Q, perm = natural_relabel(P)
            assert is_naturally_labelled(Q)
            for a, b in P.covers:
                assert (perm[a - 1], perm[b - 1]) in Q.covers
            assert len(Q.covers) == len(P.covers)


class TestInducedOccurrences:
    def test_self_occurrence(self):
        occs = induced_occurrences(FORB1, FORB1)
        assert (1, 2, 3, 4) in occs

    def test_chain_has_no_antichain(self):
        assert induced_occurrences(CHAIN3, Poset(2, [])) == []

    def test_fig1_forbidden_free(self):
        from ppart.fixtures import FORB2

        for Q in (FORB1, FORB2, FORB3):
            assert induced_occurrences(FIG1, Q) == []

    def test_occurrence_is_induced(self):
        for emb in induced_occurrences(EX33, P1):
            for a in (1, 2, 3):
                for b in (1, 2, 3):
                    assert P1.lt(a, b) == EX33.lt(emb[a - 1], emb[b - 1])


class TestEnumeration:
    def test_counts(self):
        assert len(list(enumerate_posets(1))) == 1
        assert len(list(enumerate_posets(2))) == 3
        assert len(list(enumerate_posets(3))) == 19

    def test_cap(self):
        with pytest.raises(RangeError):
            list(enumerate_posets(6))

    def test_no_duplicates(self, posets4):
        seen = {(P.n, P.covers) for P in posets4}
        assert len(seen) == len(posets4) == 219


class TestDeterminism:
    def test_repeatable(self):
        assert connected_ideals(FIG1) == connected_ideals(FIG1)
        assert nontrivial_pairs(EX33) == nontrivial_pairs(EX33)
