import itertools

import pytest

from dsrg import (BinMatrix, NotTournament, Tournament, are_isomorphic,
                  block_compose, check_tournament, circulant_tournament,
                  complement_graph, cycle_power, cycle_sum_family,
                  enumerate_regular_tournaments, is_doubly_regular_team,
                  is_doubly_regular_tournament, mat_mul_count,
                  paley_tournament, team_from_drt, team_lem6, verify_dsrg)


def test_check_tournament_cycle():
    t = check_tournament(cycle_power(3, 1))
    assert t.valency == 1


def test_check_tournament_circulant():
    t = circulant_tournament(5, {1, 2})
    assert t.valency == 2
    assert check_tournament(t.adj).valency == 2


def test_check_tournament_rejects_digon():
    full = complement_graph(BinMatrix.zeros(3))  # J - I
    with pytest.raises(NotTournament) as info:
        check_tournament(full)
    assert info.value.pair == (0, 1)


def test_tournament_complement_identity():
    for t in (circulant_tournament(3, {1}), circulant_tournament(7, {1, 2, 3})):
        assert complement_graph(t.adj) == t.adj.transpose()


def test_double_regularity():
    assert is_doubly_regular_tournament(check_tournament(cycle_power(3, 1))) == 0
    assert paley_tournament(7).doubly_regular_lambda == 1
    assert is_doubly_regular_tournament(circulant_tournament(5, {1, 2})) is None


def test_double_regularity_needs_regular():
    a = BinMatrix.from_strings(["00100", "10000", "01000", "11100", "11110"])
    with pytest.raises(ValueError):
        is_doubly_regular_tournament(check_tournament(a))


def test_circulant_rejects_bad_connection_sets():
    with pytest.raises(ValueError, match="3"):
        circulant_tournament(7, {2, 3, 4})
    with pytest.raises(ValueError, match="odd"):
        circulant_tournament(4, {1})
    with pytest.raises(ValueError):
        circulant_tournament(5, {1})  # covers neither 2 nor 3


def test_cycle_sum_families():
    fam = cycle_sum_family(5, "odd")
    assert fam.exponents == frozenset({1, 3})
    assert fam.is_tournament
    fam0 = cycle_sum_family(5, "even")
    assert fam0.exponents == frozenset({2, 4})
    assert fam0.is_tournament
    famj = cycle_sum_family(7, "run", 1)
    assert famj.exponents == frozenset({2, 3, 4})
    assert not famj.is_tournament
    assert cycle_sum_family(7, "run", 0).is_tournament


def test_cycle_sum_family_has_commuting_transposer():
    # the odd-exponent family's rows all reappear as columns
    from dsrg import find_commuting_transposer
    fam = cycle_sum_family(7, "odd")
    assert fam.is_tournament
    assert find_commuting_transposer(fam.matrix) is not None


def test_team_from_drt_profile():
    d = team_from_drt(circulant_tournament(3, {1}))
    assert d.n == 8
    prof = is_doubly_regular_team(d)
    assert prof is not None
    assert (prof.alpha, prof.beta, prof.gamma, prof.k) == (1, 1, 3, 3)


def test_team_from_drt_paley_7():
    d = team_from_drt(paley_tournament(7))
    assert d.n == 16
    prof = is_doubly_regular_team(d)
    assert prof is not None and prof.k == 7
    assert (prof.alpha, prof.beta, prof.gamma) == (3, 3, 7)


def test_team_from_drt_rejects_non_drt():
    with pytest.raises(ValueError, match="doubly regular"):
        team_from_drt(circulant_tournament(5, {1, 2}))


def test_team_identities():
    # D^2 = (2L+1)(D+D^T) + (4L+3)(J-I-D-D^T), DD^T = (4L+3)I + (2L+1)(D+D^T)
    for t, lam in ((check_tournament(cycle_power(3, 1)), 0),
                   (paley_tournament(7), 1)):
        d = team_from_drt(Tournament(t.adj, t.valency, lam))
        n = d.n
        dt = d.transpose()
        sq = mat_mul_count(d, d)
        ddt = mat_mul_count(d, dt)
        for i in range(n):
            for j in range(n):
                both = d.entry(i, j) + dt.entry(i, j)
                neither = 1 - both if i != j else 0
                assert sq.entry(i, j) == \
                    (2 * lam + 1) * both + (4 * lam + 3) * neither
                expected = (2 * lam + 1) * both
                if i == j:
                    expected += 4 * lam + 3
                assert ddt.entry(i, j) == expected


def test_team_lem6_block_identity():
    # D + D^T tiles as J-I in (h+1)-blocks and
    # D^2 + DD^T + D + D^T = h*J
    for t in (check_tournament(BinMatrix.zeros(1)),
              check_tournament(cycle_power(3, 1)),
              circulant_tournament(5, {1, 2})):
        h = t.order
        d = team_lem6(t)
        assert d.n == 2 * h + 2
        dt = d.transpose()
        half = complement_graph(BinMatrix.zeros(h + 1))  # J - I
        tiled = block_compose([[half, half], [half, half]])
        assert BinMatrix(d.n, tuple(a | b for a, b in zip(d.rows, dt.rows))) \
            == tiled
        sq = mat_mul_count(d, d)
        ddt = mat_mul_count(d, dt)
        for i in range(d.n):
            for j in range(d.n):
                total = sq.entry(i, j) + ddt.entry(i, j) + \
                    d.entry(i, j) + dt.entry(i, j)
                assert total == h


def test_team_lem6_rejects_irregular():
    a = BinMatrix.from_strings(["00100", "10000", "01000", "11100", "11110"])
    with pytest.raises(ValueError, match="regular"):
        team_lem6(check_tournament(a))


def test_degenerate_team_is_tournament_check():
    # r = 1: profile exists iff the tournament is doubly regular
    assert is_doubly_regular_team(cycle_power(3, 1).transpose()) is not None
    assert is_doubly_regular_team(circulant_tournament(5, {1, 2}).adj) is None


def test_team_rejects_unequal_degrees():
    # orientation of the complement of 2 K_2 with unequal degrees
    a = BinMatrix.from_rows([
        [0, 0, 1, 1],
        [0, 0, 1, 1],
        [0, 0, 0, 0],
        [0, 0, 0, 0]])
    assert is_doubly_regular_team(a) is None


# -- enumeration and its independent oracle ----------------------------------


def naive_labeled_regular_tournaments(n):
    """All labeled regular tournaments of order n, by brute force over
    every orientation (row-0 out-set choices x all other pair bits)."""
    k = (n - 1) // 2
    pairs = [(i, j) for i in range(1, n) for j in range(i + 1, n)]
    out = []
    for head in itertools.combinations(range(1, n), k):
        base = [0] * n
        for v in head:
            base[0] |= 1 << v
        for v in range(1, n):
            if v not in head:
                base[v] |= 1
        for bits in range(1 << len(pairs)):
            rows = list(base)
            for idx, (i, j) in enumerate(pairs):
                if (bits >> idx) & 1:
                    rows[i] |= 1 << j
                else:
                    rows[j] |= 1 << i
            if all(r.bit_count() == k for r in rows):
                out.append(tuple(rows))
    return out


def orbit_of(rows, n):
    """All labelings of one tournament under the full symmetric group."""
    orbit = set()
    for images in itertools.permutations(range(n)):
        new = [0] * n
        for i in range(n):
            r = rows[i]
            acc = 0
            while r:
                low = r & -r
                acc |= 1 << images[low.bit_length() - 1]
                r ^= low
            new[images[i]] = acc
        orbit.add(tuple(new))
    return orbit


@pytest.mark.parametrize("n,expected_classes", [(3, 1), (5, 1), (7, 3)])
def test_enumeration_counts_against_naive_oracle(n, expected_classes):
    reps = enumerate_regular_tournaments(n)
    assert len(reps) == expected_classes
    labeled = naive_labeled_regular_tournaments(n)
    orbits = [orbit_of(t.adj.rows, n) for t in reps]
    for a, b in itertools.combinations(orbits, 2):
        assert not (a & b), "representatives are not isomorphism-distinct"
    union = set().union(*orbits)
    assert union == set(labeled), "orbits do not cover the labeled count"


def test_enumeration_deterministic_and_canonical():
    first = enumerate_regular_tournaments(7)
    second = enumerate_regular_tournaments(7)
    assert [t.adj for t in first] == [t.adj for t in second]
    from dsrg import canonical_form
    for t in first:
        assert canonical_form(t.adj).canonical == t.adj


def test_enumeration_rediscovers_circulants():
    for n in (3, 5, 7):
        reps = enumerate_regular_tournaments(n)
        k = (n - 1) // 2
        for choice in itertools.product(*[(e, n - e) for e in range(1, k + 1)]):
            circ = circulant_tournament(n, set(choice))
            assert any(are_isomorphic(circ.adj, t.adj) is not None
                       for t in reps)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_symmetry_reduced_generation_count(n):
    # the generator fixes out(0) = {1..k} (one of C(n-1, k) choices) and,
    # for k >= 2, one arc inside each of the out- and in-sets (each a
    # 2-to-1 reduction), so its count times the reduction factor must
    # equal the naive labeled count
    from math import comb
    from dsrg.tournaments import _regular_completions
    k = (n - 1) // 2
    factor = comb(n - 1, k) * (4 if k >= 2 else 1)
    assert len(_regular_completions(n)) * factor == \
        len(naive_labeled_regular_tournaments(n))


def test_enumeration_order_9_class_count():
    # beyond the oracle's reach; pins the enumerator's stable class count
    reps = enumerate_regular_tournaments(9)
    assert len(reps) == 15
    assert all(t.valency == 4 for t in reps)
    assert all(t.doubly_regular_lambda is None for t in reps)  # 9 != 3 mod 4


def test_enumeration_refuses_large_order():
    with pytest.raises(ValueError, match="limit"):
        enumerate_regular_tournaments(11)


def test_enumeration_rejects_even_order():
    with pytest.raises(ValueError, match="odd"):
        enumerate_regular_tournaments(4)


def test_tournament_plus_transpose_is_full():
    for t in (circulant_tournament(7, {1, 2, 3}), paley_tournament(7)):
        full = complement_graph(BinMatrix.zeros(7))
        combined = BinMatrix(7, tuple(a | b for a, b in
                                      zip(t.adj.rows, t.adj.transpose().rows)))
        assert combined == full


def test_circulant_commutes_with_shift():
    from dsrg import PermSpec, conjugate_by_perm
    t = circulant_tournament(7, {1, 2, 3})
    assert conjugate_by_perm(t.adj, PermSpec.shift(7, 1)) == t.adj
