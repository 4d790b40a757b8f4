import pytest

from oracles import brute_covers, brute_partitions, dominated, strictly_below
from partition_gini import (
    BudgetExceeded,
    Comparison,
    Partition,
    WeightMismatch,
    build_poset,
    compare,
    conjugate,
    covers,
    e2_direct,
    gini,
    is_antichain,
    padded_parts,
)
from partition_gini.dominance import to_dot, to_json_obj, upper_covers


def P(*parts):
    return Partition(parts)


class TestCompare:
    def test_examples(self):
        assert compare(P(2, 2), P(3, 1)) is Comparison.LESS
        assert compare(P(3, 1), P(2, 2)) is Comparison.GREATER
        assert compare(P(3, 1, 1, 1), P(2, 2, 2)) is Comparison.INCOMPARABLE
        assert compare(P(4, 3, 1, 1), P(4, 3, 1, 1)) is Comparison.EQUAL

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            compare(P(2, 1), P(3, 1))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_against_prefix_sum_definition(self, n):
        ps = [Partition(t) for t in brute_partitions(n)]
        for a in ps:
            for b in ps:
                le, ge = dominated(a.parts, b.parts), dominated(b.parts, a.parts)
                expected = {
                    (True, True): Comparison.EQUAL,
                    (True, False): Comparison.LESS,
                    (False, True): Comparison.GREATER,
                    (False, False): Comparison.INCOMPARABLE,
                }[le, ge]
                assert compare(a, b) is expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_conjugation_reverses_order(self, n):
        ps = [Partition(t) for t in brute_partitions(n)]
        for a in ps:
            for b in ps:
                lhs = compare(a, b) is Comparison.LESS
                rhs = compare(conjugate(b), conjugate(a)) is Comparison.LESS
                assert lhs == rhs


class TestCovers:
    def test_examples(self):
        assert covers(P(2, 2), P(2, 1, 1))
        assert not covers(P(4), P(2, 2))
        assert not covers(P(3, 1), P(3, 1))

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatch):
            covers(P(3), P(2))

    @pytest.mark.parametrize("n", range(1, 9))
    def test_agrees_with_no_intermediate_definition(self, n):
        universe = brute_partitions(n)
        for lam in universe:
            ups = {q.parts for q in upper_covers(Partition(lam))}
            for mu in universe:
                truth = brute_covers(lam, mu, universe)
                assert covers(Partition(lam), Partition(mu)) == truth
                assert (lam in {q.parts for q in upper_covers(Partition(mu))}) == truth
            assert len(ups) == len(upper_covers(Partition(lam)))


class TestBuildPoset:
    def test_n4_chain(self):
        poset = build_poset(4)
        assert [p.parts for p in poset.nodes] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
        assert sorted(poset.cover_edges) == [(1, 0), (2, 1), (3, 2), (4, 3)]

    def test_n1(self):
        poset = build_poset(1)
        assert len(poset.nodes) == 1 and poset.cover_edges == ()

    def test_n6(self):
        poset = build_poset(6)
        assert len(poset.nodes) == 11
        assert compare(P(3, 1, 1, 1), P(2, 2, 2)) is Comparison.INCOMPARABLE
        assert {P(3, 1, 1, 1), P(2, 2, 2)} <= set(poset.nodes)

    def test_budget(self):
        with pytest.raises(BudgetExceeded) as exc:
            build_poset(10, max_nodes=41)
        assert exc.value.needed == 42

    def test_deterministic(self):
        assert build_poset(9) == build_poset(9)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_closure_matches_dominance(self, n):
        poset = build_poset(n)
        for lo, hi in poset.cover_edges:
            assert covers(poset.nodes[hi], poset.nodes[lo])
        ups = poset.strict_upsets()
        for i, a in enumerate(poset.nodes):
            for j, b in enumerate(poset.nodes):
                assert bool(ups[i] >> j & 1) == strictly_below(a.parts, b.parts)

    @pytest.mark.parametrize("n", range(1, 11))
    def test_extremes(self, n):
        poset = build_poset(n)
        lowers = {lo for lo, _ in poset.cover_edges}
        uppers = {hi for _, hi in poset.cover_edges}
        idx = range(len(poset.nodes))
        assert [i for i in idx if i not in lowers] == [0]  # (n) covers nothing above
        assert [i for i in idx if i not in uppers] == [len(poset.nodes) - 1]
        assert poset.nodes[-1].parts == (1,) * n


def _moved_rows(upper, lower):
    n = upper.weight
    u, w = padded_parts(upper, n), padded_parts(lower, n)
    i, k = [j for j in range(n) if u[j] != w[j]]
    return w, i, k


@pytest.mark.parametrize("n", range(1, 11))
def test_gini_and_e2_move_strictly_along_covers(n):
    poset = build_poset(n)
    for lo, hi in poset.cover_edges:
        mu, lam = poset.nodes[lo], poset.nodes[hi]
        assert gini(mu) < gini(lam)
        assert e2_direct(lam) < e2_direct(mu)
        w, i, k = _moved_rows(lam, mu)
        assert e2_direct(mu) - e2_direct(lam) == w[i] + 1 - w[k]


@pytest.mark.parametrize("n", range(1, 9))
def test_gini_strictly_monotone_on_all_pairs(n):
    poset = build_poset(n)
    for a in poset.nodes:
        for b in poset.nodes:
            if compare(a, b) is Comparison.LESS:
                assert gini(a) < gini(b)


@pytest.mark.parametrize("n", range(1, 11))
def test_level_sets_are_antichains(n):
    by_g = {}
    for p in build_poset(n).nodes:
        by_g.setdefault(gini(p), []).append(p)
    for members in by_g.values():
        assert is_antichain(members)


class TestAntichain:
    def test_examples(self):
        assert is_antichain({P(3, 1, 1, 1), P(2, 2, 2)})
        assert not is_antichain({P(2, 2), P(3, 1)})
        assert is_antichain({P(5)})
        assert is_antichain([])

    def test_mixed_weights(self):
        with pytest.raises(WeightMismatch):
            is_antichain([P(2), P(3)])


class TestExport:
    def test_dot_n4(self):
        dot = to_dot(build_poset(4))
        assert dot.count("label=") == 5
        assert dot.count("->") == 4
        assert 'n0 [label="[4]", gini=6];' in dot
        assert "n4 -> n3;" in dot
        assert dot == to_dot(build_poset(4))

    def test_json_n6(self):
        obj = to_json_obj(build_poset(6))
        assert len(obj["nodes"]) == 11
        assert obj["nodes"][0] == "[6]" and obj["gini"][0] == 15
