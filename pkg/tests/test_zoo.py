import json
from fractions import Fraction
from random import Random

import pytest

from braidrep.braid import verify_braid_relations
from braidrep.errors import NotARepresentationError, ShapeError, SingularMatrixError
from braidrep.linalg import Matrix, rank
from braidrep.zoo import (
    Representation,
    character_rep,
    conjugate_rep,
    corank,
    deformation,
    direct_sum,
    random_invertible_matrix,
    reduced_burau,
    rep_from_dict,
    rep_to_dict,
    save_representation,
    load_representation,
    scrambled,
    tensor_character,
    tym_standard,
)

F = Fraction


def test_character_corank_values():
    assert corank(character_rep(5, 1)) == 0
    assert corank(character_rep(4, 2)) == 1


def test_character_rejects_zero():
    with pytest.raises(ValueError):
        character_rep(3, 0)


def test_standard_family_first_generator_matrix():
    rep = tym_standard(3, F(7, 2))
    assert rep.gen(1) == Matrix([[0, F(7, 2), 0], [1, 0, 0], [0, 0, 1]])
    assert rep.gen(2) == Matrix([[1, 0, 0], [0, 0, F(7, 2)], [0, 1, 0]])


def test_standard_family_at_one_is_permutations():
    rep = tym_standard(5, 1)
    for i in range(1, 5):
        g = rep.gen(i)
        assert g * g == Matrix.identity(5)
        assert all(entry in (0, 1) for row in g.rows for entry in row)


def test_standard_family_corank_depends_on_parameter():
    assert corank(tym_standard(6, 3)) == 2
    assert corank(tym_standard(6, 2)) == 2
    assert corank(tym_standard(6, 1)) == 1
    for u in (F(5, 3), F(-1), F(1, 2)):
        assert corank(tym_standard(7, u)) == 2


def test_standard_family_rejects_zero_parameter():
    with pytest.raises(ValueError):
        tym_standard(4, 0)


def test_burau_corank_is_one():
    assert corank(reduced_burau(6, 2)) == 1
    assert corank(reduced_burau(5, 3)) == 1


def test_burau_smallest_case_satisfies_relations():
    rep = reduced_burau(3, 1)
    assert rep.r == 2
    assert verify_braid_relations(rep).ok


def test_burau_rejects_zero_parameter():
    with pytest.raises(ValueError):
        reduced_burau(5, 0)


def test_tensor_by_one_is_identity():
    rep = tym_standard(5, 2)
    assert tensor_character(rep, 1) == rep


def test_tensor_of_characters_multiplies_parameters():
    assert tensor_character(character_rep(6, 2), 3) == character_rep(6, 6)


def test_tensor_scales_generator_entries():
    rep = tym_standard(5, 2)
    scaled = tensor_character(rep, 3)
    for i in range(1, 5):
        assert scaled.gen(i) == rep.gen(i) * 3


def test_tensor_composition_law():
    rep = reduced_burau(5, 2)
    twice = tensor_character(tensor_character(rep, F(2, 3)), F(9, 2))
    assert twice == tensor_character(rep, 3)


def test_direct_sum_of_trivial_characters():
    rep = direct_sum(character_rep(6, 1), character_rep(6, 1))
    assert rep.r == 2
    assert all(rep.gen(i) == Matrix.identity(2) for i in range(1, 6))


def test_direct_sum_block_structure():
    rep = direct_sum(tym_standard(6, 2), character_rep(6, 5))
    assert rep.r == 7
    g = rep.gen(1)
    assert g[6, 6] == 5
    assert all(g[6, j] == 0 and g[j, 6] == 0 for j in range(6))


def test_direct_sum_corank_adds():
    rep = direct_sum(reduced_burau(6, 2), reduced_burau(6, 3))
    assert corank(rep) == 2


def test_direct_sum_requires_equal_strands():
    with pytest.raises(ShapeError):
        direct_sum(character_rep(5, 2), character_rep(6, 2))


def test_conjugation_by_identity_is_identity():
    rep = tym_standard(5, 2)
    assert conjugate_rep(rep, Matrix.identity(5)) == rep


def test_conjugation_preserves_corank_and_relations():
    rep = tym_standard(6, 2)
    twisted = scrambled(rep, 42)
    assert corank(twisted) == corank(rep)
    assert verify_braid_relations(twisted).ok
    assert "seed=42" in twisted.label


def test_conjugation_by_singular_matrix_raises():
    with pytest.raises(SingularMatrixError):
        conjugate_rep(tym_standard(4, 2), Matrix.zero(4, 4))


def test_corank_rejects_unequal_deformation_ranks():
    rep = Representation(
        4, 2,
        [Matrix([[1, 0], [0, 2]]), Matrix([[3, 0], [0, 4]]), Matrix([[0, 1], [1, 0]])],
    )
    with pytest.raises(NotARepresentationError):
        corank(rep)


def test_deformation_of_trivial_family_is_zero():
    rep = character_rep(5, 1)
    for i in range(5):
        assert deformation(rep, i).is_zero()


def test_deformation_block_of_standard_family():
    a1 = deformation(tym_standard(4, F(7)), 1)
    assert a1 == Matrix(
        [[-1, 7, 0, 0], [1, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    )


def test_derived_deformation_matches_conjugation():
    rep = tym_standard(5, 3)
    expected = rep.tau * rep.deformation(4) * rep.tau_inverse
    assert deformation(rep, 0) == expected


def test_generator_images_must_be_invertible():
    with pytest.raises(SingularMatrixError):
        Representation(3, 2, [Matrix([[1, 1], [1, 1]]), Matrix.identity(2)])


def test_random_invertible_matrix_is_seeded_and_invertible():
    a = random_invertible_matrix(4, Random(5))
    b = random_invertible_matrix(4, Random(5))
    assert a == b
    assert rank(a) == 4


def _nonzero_rationals(rng, count):
    out = []
    while len(out) < count:
        value = F(rng.randint(-9, 9), rng.randint(1, 9))
        if value:
            out.append(value)
    return out


def test_constructor_sweep_passes_relations():
    rng = Random(8128)
    for n in range(3, 11):
        for u in _nonzero_rationals(rng, 20):
            rep = tym_standard(n, u)
            assert verify_braid_relations(rep).ok, (n, u)
        for t in _nonzero_rationals(rng, 20):
            rep = reduced_burau(n, t)
            assert verify_braid_relations(rep).ok, (n, t)


def test_json_round_trip_is_bit_exact(tmp_path, zoo):
    for rep in zoo[:6]:
        path = tmp_path / "rep.json"
        save_representation(rep, path)
        loaded = load_representation(path)
        assert loaded == rep
        assert loaded.label == rep.label
        assert rep_to_dict(loaded) == rep_to_dict(rep)


def test_json_file_schema_shape(tmp_path):
    rep = tym_standard(3, F(5, 3))
    path = tmp_path / "rep.json"
    save_representation(rep, path)
    data = json.loads(path.read_text())
    assert set(data) == {"n", "r", "generators", "label"}
    assert data["n"] == 3 and data["r"] == 3
    assert data["generators"][0][0] == ["0", "5/3", "0"]


def test_malformed_json_data_raises():
    with pytest.raises(ShapeError):
        rep_from_dict({"n": 3, "generators": "nope"})
