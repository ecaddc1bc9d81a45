import pytest
from hypothesis import given, settings

from conftest import graphs
from corecorona.fixtures import fixture
from corecorona.graphs import complete_graph, cycle_graph, empty_graph, path_graph, star
from corecorona.independence import (
    CapExceededError,
    KIND_MAX_CLIQUE,
    MisFamily,
    clique_number,
    core_corona,
    enumerate_max_cliques,
    enumerate_maximal_independent,
    enumerate_omega,
    independence_number,
    is_very_well_covered,
)
from oracles import brute_alpha, brute_maximal, brute_omega


def labels_of(g, vs):
    return [g.label(v) for v in vs]


class TestIndependenceNumber:
    def test_fixture_values(self):
        assert independence_number(fixture("fig1")) == 7
        assert independence_number(fixture("g1")) == 4
        assert independence_number(fixture("g2")) == 3

    def test_empty_graphs(self):
        for n in range(0, 7):
            assert independence_number(empty_graph(n)) == n

    def test_classics(self):
        assert independence_number(complete_graph(6)) == 1
        assert independence_number(cycle_graph(5)) == 2
        assert independence_number(path_graph(3)) == 2


class TestEnumerateOmega:
    def test_c4(self):
        c4 = cycle_graph(4)
        fam = enumerate_omega(c4)
        assert [sorted(m) for m in fam] == [[0, 2], [1, 3]]
        assert fam.kind == "maximum_independent"

    def test_p3_unique(self):
        fam = enumerate_omega(path_graph(3))
        assert len(fam) == 1 and sorted(fam[0]) == [0, 2]

    def test_fig2_intersection(self):
        fig2 = fixture("fig2")
        fam = enumerate_omega(fig2)
        assert labels_of(fig2, fam.intersection()) == ["v8", "v10"]

    def test_canonical_order_strictly_increasing(self):
        for g in (cycle_graph(6), fixture("fig1"), fixture("g1")):
            fam = enumerate_omega(g)
            keys = [m.vertices() for m in fam]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)

    def test_cap_overflow_is_error(self):
        c4 = cycle_graph(4)
        with pytest.raises(CapExceededError) as exc:
            enumerate_omega(c4, cap=1)
        assert exc.value.partial_count == 2
        with pytest.raises(ValueError):
            enumerate_omega(c4, cap=0)


class TestCoreCorona:
    def test_fig1(self):
        fig1 = fixture("fig1")
        cc = core_corona(fig1)
        assert labels_of(fig1, cc.core) == ["v1", "v2", "v10"]

    def test_g1(self):
        g1 = fixture("g1")
        cc = core_corona(g1)
        assert labels_of(g1, cc.core) == ["v8", "v9"]
        assert labels_of(g1, cc.corona) == ["v1", "v3", "v4", "v5", "v7", "v8", "v9"]

    def test_star_core_equals_corona(self):
        g = star(5)
        cc = core_corona(g)
        assert sorted(cc.core) == sorted(cc.corona) == [1, 2, 3, 4]

    def test_core_within_every_member(self):
        g = fixture("fig2")
        cc = core_corona(g)
        for member in enumerate_omega(g):
            assert cc.core.issubset(member)
            assert member.issubset(cc.corona)


class TestMaximalIndependent:
    def test_k3(self):
        fam = enumerate_maximal_independent(complete_graph(3))
        assert [sorted(m) for m in fam] == [[0], [1], [2]]

    def test_c4(self):
        fam = enumerate_maximal_independent(cycle_graph(4))
        assert [sorted(m) for m in fam] == [[0, 2], [1, 3]]

    def test_p3_sizes_differ(self):
        fam = enumerate_maximal_independent(path_graph(3))
        assert sorted(sorted(m) for m in fam) == [[0, 2], [1]]
        assert len({len(m) for m in fam}) == 2  # hence not well-covered

    def test_contains_omega(self):
        g = fixture("g2")
        maximal = {m.bits for m in enumerate_maximal_independent(g)}
        omega = enumerate_omega(g)
        assert {m.bits for m in omega} <= maximal
        sizes = [len(m) for m in enumerate_maximal_independent(g)]
        assert max(sizes) == independence_number(g)

    def test_cap_overflow(self):
        with pytest.raises(CapExceededError):
            enumerate_maximal_independent(complete_graph(4), cap=3)


class TestVeryWellCovered:
    def test_examples(self):
        assert is_very_well_covered(cycle_graph(4))
        assert not is_very_well_covered(complete_graph(3))
        assert not is_very_well_covered(star(4))
        assert is_very_well_covered(complete_graph(2))


class TestCliques:
    def test_clique_number(self):
        assert clique_number(complete_graph(5)) == 5
        assert clique_number(cycle_graph(5)) == 2
        fig1 = fixture("fig1")
        assert clique_number(fig1.complement()) == independence_number(fig1)

    def test_clique_number_is_complement_alpha(self):
        for g in (cycle_graph(6), fixture("g1"), fixture("g2"), star(5)):
            assert clique_number(g) == independence_number(g.complement())

    def test_enumerate_max_cliques(self):
        k3 = complete_graph(3)
        fam = enumerate_max_cliques(k3)
        assert fam.kind == KIND_MAX_CLIQUE
        assert [sorted(m) for m in fam] == [[0, 1, 2]]
        c4 = cycle_graph(4)
        cliques = [tuple(sorted(m)) for m in enumerate_max_cliques(c4)]
        assert sorted(cliques) == [(0, 1), (0, 3), (1, 2), (2, 3)]
        empty3 = empty_graph(3)
        assert [sorted(m) for m in enumerate_max_cliques(empty3)] == [[0], [1], [2]]


class TestMisFamilyInvariants:
    def test_distinct_members_enforced(self):
        from corecorona.graphs import VertexSet

        a = VertexSet.from_vertices(3, [0])
        with pytest.raises(ValueError):
            MisFamily(3, (a, a))

    def test_binding_enforced(self):
        from corecorona.graphs import VertexSet

        with pytest.raises(ValueError):
            MisFamily(3, (VertexSet.from_vertices(4, [0]),))

    def test_empty_family_set_algebra_rejected(self):
        fam = MisFamily(3, ())
        with pytest.raises(ValueError):
            fam.intersection()
        with pytest.raises(ValueError):
            fam.union()


class TestBruteForceAgreement:
    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=9))
    def test_alpha_omega_maximal_match_oracle(self, g):
        assert independence_number(g) == brute_alpha(g)
        assert [m.bits for m in enumerate_omega(g)] == sorted(
            brute_omega(g), key=lambda mask: tuple(v for v in range(g.n) if mask >> v & 1)
        )
        assert sorted(m.bits for m in enumerate_maximal_independent(g)) == sorted(
            brute_maximal(g)
        )
