from fractions import Fraction

import pytest

from braidrep import (
    character_rep,
    direct_sum,
    reduced_burau,
    scrambled,
    tensor_character,
    tym_standard,
)


def build_zoo():
    """Curated genuine representations covering every constructor."""
    return [
        character_rep(5, 1),
        character_rep(6, 3),
        character_rep(4, Fraction(-1, 2)),
        tym_standard(4, 2),
        tym_standard(6, 2),
        tym_standard(6, 1),
        tym_standard(7, Fraction(5, 3)),
        reduced_burau(4, 2),
        reduced_burau(6, 2),
        reduced_burau(5, -1),
        tensor_character(tym_standard(5, 2), 3),
        tensor_character(reduced_burau(5, 2), Fraction(1, 2)),
        direct_sum(reduced_burau(6, 2), reduced_burau(6, 3)),
        direct_sum(tym_standard(5, 2), character_rep(5, 1)),
        scrambled(tym_standard(6, 3), 7),
        scrambled(reduced_burau(5, 2), 11),
    ]


@pytest.fixture(scope="session")
def zoo():
    return build_zoo()


@pytest.fixture(scope="session")
def disconnected_fixture():
    """5 strands in dimension 6, deformations with pairwise trivial image
    intersections: a Burau block padded by a two-dimensional trivial block."""
    trivial_plane = direct_sum(character_rep(5, 1), character_rep(5, 1))
    return direct_sum(reduced_burau(5, 2), trivial_plane)


@pytest.fixture(scope="session")
def coinciding_images_fixture():
    """Corank-2 family on 6 strands whose deformation images all coincide."""
    plane = direct_sum(character_rep(6, 2), character_rep(6, 3))
    rest = direct_sum(
        direct_sum(character_rep(6, 1), character_rep(6, 1)),
        direct_sum(character_rep(6, 1), character_rep(6, 1)),
    )
    return direct_sum(plane, rest)
