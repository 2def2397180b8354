import json
from collections import Counter

import pytest

from _enumerate import o_sequences
from simplexbounds import BettiTable, SizeLimitError, ValidationError, binom, betti_table_bound, f_to_h
from simplexbounds.oracle import (
    MonomialIdeal,
    SimplicialComplex,
    cross_polytope_boundary,
    cyclic_polytope_boundary,
    eliahou_kervaire_betti,
    f_vector,
    full_simplex,
    hochster_betti,
    is_stable,
    lex_monomials,
    lex_segment_ideal,
    load_complex,
    minimal_nonfaces,
    octahedron,
    polygon,
    reduced_homology_ranks,
    simplex_boundary,
)

# six-vertex real projective plane
RP2 = SimplicialComplex.from_faces(
    6,
    [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 1, 5),
     (1, 2, 4), (1, 3, 4), (1, 3, 5), (2, 3, 5), (2, 4, 5)],
)


def gale_facets_bruteforce(n, d):
    """Facets of C(n, d) from the moment-curve coordinates, via exact orientation tests."""
    from fractions import Fraction
    from itertools import combinations

    import sympy

    points = [[Fraction(t) ** k for k in range(1, d + 1)] for t in range(1, n + 1)]
    facets = []
    for sub in combinations(range(n), d):
        rows = [[1] + points[v] for v in sub]
        signs = set()
        for w in range(n):
            if w in sub:
                continue
            det = sympy.Matrix(rows + [[1] + points[w]]).det()
            signs.add(det > 0)
        if len(signs) == 1:
            facets.append(sub)
    return sorted(facets)


@pytest.mark.parametrize("n, d", [(5, 2), (6, 3), (7, 4), (8, 5), (8, 3), (7, 3)])
def test_gale_evenness_matches_geometry(n, d):
    assert sorted(cyclic_polytope_boundary(n, d).facets) == gale_facets_bruteforce(n, d)


def test_cyclic_examples():
    pentagon = cyclic_polytope_boundary(5, 2)
    assert len(pentagon.facets) == 5
    assert f_vector(pentagon).entries == (1, 5, 5)
    c74 = cyclic_polytope_boundary(7, 4)
    assert len(c74.facets) == 14
    assert f_vector(c74).entries == (1, 7, 21, 28, 14)
    assert len(cyclic_polytope_boundary(5, 4).facets) == 5
    with pytest.raises(ValidationError):
        cyclic_polytope_boundary(3, 3)


def test_f_vectors():
    assert f_vector(octahedron()).entries == (1, 6, 12, 8)
    assert f_vector(polygon(5)).entries == (1, 5, 5)
    assert f_vector(full_simplex(4)).entries == (1, 4, 6, 4, 1)


def test_minimal_nonfaces():
    assert minimal_nonfaces(octahedron()) == [(0, 1), (2, 3), (4, 5)]
    nonfaces = minimal_nonfaces(cyclic_polytope_boundary(7, 4))
    assert len(nonfaces) == 7 and all(len(s) == 3 for s in nonfaces)
    assert minimal_nonfaces(full_simplex(5)) == []


def test_complex_validation_and_json(tmp_path):
    with pytest.raises(ValidationError):
        SimplicialComplex(3, ((0, 1), (0, 1, 2)))
    with pytest.raises(ValidationError):
        SimplicialComplex(3, ((0, 3),))
    c = octahedron()
    path = tmp_path / "oct.json"
    path.write_text(json.dumps(c.to_json()))
    assert load_complex(path) == c
    assert c.to_json()["facets"][0][0] >= 1


def test_homology_examples():
    assert reduced_homology_ranks(polygon(5)) == [0, 1]
    assert reduced_homology_ranks(octahedron()) == [0, 0, 1]
    assert reduced_homology_ranks(SimplicialComplex(2, ((0,), (1,)))) == [1]


def test_homology_depends_on_characteristic():
    assert reduced_homology_ranks(RP2, 0) == [0, 0, 0]
    assert reduced_homology_ranks(RP2, 2) == [0, 1, 1]
    assert reduced_homology_ranks(RP2, 3) == [0, 0, 0]
    assert hochster_betti(RP2, 0) != hochster_betti(RP2, 2)


def test_hochster_examples():
    assert hochster_betti(polygon(4)).entries == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert hochster_betti(full_simplex(4)).entries == {(0, 0): 1}
    assert hochster_betti(simplex_boundary(3)).entries == {(0, 0): 1, (1, 4): 1}


def test_hochster_rejects_large_and_bad_characteristic(monkeypatch):
    with pytest.raises(SizeLimitError):
        hochster_betti(polygon(13))
    assert hochster_betti(polygon(13), limit=13).get(1, 2) == 13 * 10 // 2
    monkeypatch.setenv("EMPTY_SIMPLEX_VERTEX_LIMIT", "4")
    with pytest.raises(SizeLimitError):
        hochster_betti(polygon(5))
    with pytest.raises(ValidationError):
        hochster_betti(polygon(4), characteristic=4)


@pytest.mark.parametrize("c", [cyclic_polytope_boundary(9, 4), cross_polytope_boundary(4), RP2])
def test_hochster_threads_match_sequential(c):
    assert hochster_betti(c, threads=4) == hochster_betti(c, threads=1)


@pytest.mark.parametrize(
    "c", [polygon(7), octahedron(), cross_polytope_boundary(4), cyclic_polytope_boundary(8, 4), RP2]
)
def test_first_row_is_minimal_nonfaces_in_both_characteristics(c):
    counts = Counter(len(s) for s in minimal_nonfaces(c))
    for p in (0, 2):
        row = hochster_betti(c, p).row(1)
        assert row == dict(counts)


@pytest.mark.parametrize(
    "c", [polygon(6), octahedron(), cross_polytope_boundary(4), cyclic_polytope_boundary(9, 5), simplex_boundary(4)]
)
def test_gorenstein_duality_on_polytopes(c):
    f = f_vector(c)
    d, h1 = f.d, f.counts[0] - f.d
    table = hochster_betti(c)
    for (i, j), v in table.items():
        assert table.get(h1 - i, h1 + d - j) == v
    assert table.row(h1) == {h1 + d: 1}
    assert f_to_h(f).entries[1] == h1


def test_lex_segment_examples():
    assert lex_segment_ideal((1, 2, 1), 2).generators == ((2, 0), (1, 1), (0, 3))
    assert lex_segment_ideal((1, 1, 1, 1), 2).generators == ((1, 0), (0, 4))
    assert lex_segment_ideal((1, 3, 6), 3, extend=True).generators == ()


def test_lex_monomial_order():
    assert lex_monomials(2, 2) == ((2, 0), (1, 1), (0, 2))
    assert len(lex_monomials(4, 3)) == binom(6, 3)


def test_stability():
    assert is_stable(MonomialIdeal(2, ((2, 0), (1, 1), (0, 3))))
    assert not is_stable(MonomialIdeal(2, ((0, 1),)))
    for h in o_sequences(3, 3):
        assert is_stable(lex_segment_ideal(h, 3))


def test_eliahou_kervaire_examples():
    table = eliahou_kervaire_betti(MonomialIdeal(2, ((2, 0), (1, 1), (0, 3))))
    assert table.entries == {(0, 0): 1, (1, 2): 2, (1, 3): 1, (2, 3): 1, (2, 4): 1}
    assert eliahou_kervaire_betti(MonomialIdeal(3, ((4, 0, 0),))).entries == {(0, 0): 1, (1, 4): 1}
    with pytest.raises(ValidationError):
        eliahou_kervaire_betti(MonomialIdeal(2, ((0, 1),)))


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("d", range(1, 4))
def test_eliahou_kervaire_on_powers(n, d):
    ideal = MonomialIdeal(n, lex_monomials(n, d))
    table = eliahou_kervaire_betti(ideal)
    for i in range(n):
        assert table.total(i + 1) == binom(d + i - 1, i) * binom(n + d - 1, d + i)


@pytest.mark.parametrize("n, k", [(3, 1), (4, 2), (5, 3), (5, 5), (6, 2)])
def test_eliahou_kervaire_matches_hochster_on_squarefree_stable(n, k):
    # squarefree stable ideals are generated by initial variables; the complex
    # is the full simplex on the remaining vertices
    gens = tuple(tuple(int(v == i) for v in range(n)) for i in range(k))
    ideal = MonomialIdeal(n, gens)
    assert is_stable(ideal)
    if k == n:
        complex_ = SimplicialComplex(n, ((),))
    else:
        complex_ = SimplicialComplex(n, (tuple(range(k, n)),))
    assert eliahou_kervaire_betti(ideal) == hochster_betti(complex_)


def test_monomial_ideal_validation_and_json():
    with pytest.raises(ValidationError):
        MonomialIdeal(2, ((1, 0), (2, 0)))
    ideal = lex_segment_ideal((1, 2, 2), 2)
    assert MonomialIdeal.from_json(ideal.to_json()) == ideal
    assert ideal.contains((5, 5))


def test_lex_ek_matches_closed_form_small_grid():
    for n in (1, 2, 3):
        for h in o_sequences(n, 3):
            assert eliahou_kervaire_betti(lex_segment_ideal(h, n)) == betti_table_bound(h, n)


def test_betti_table_round_trip():
    table = hochster_betti(octahedron())
    assert BettiTable.from_json(json.loads(json.dumps(table.to_json()))) == table
