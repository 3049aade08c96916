import pytest

from ktdom.errors import ParameterError
from ktdom.families import (
    Atlas,
    Cartesian,
    Complete,
    CompleteMultipartite,
    Cross,
    Cycle,
    KJoin,
    Rook,
    SharpnessFamily,
    generate,
    parse_family,
)


@pytest.mark.parametrize(
    "text",
    [
        "path:4", "cycle:5", "complete:3", "empty:2", "atlas:47", "multipartite:1-2-3", "rook:4,4",
        "sharp:2,3,2", "cart(complete:3,complete:3)", "cross(complete:4,complete:2)",
        "join(empty:1,complete:3)", "union(complete:2,complete:2,cycle:3)", "kjoin(complete:1,complete:3,2)",
        "cart(rook:2,2,cycle:4)",
    ],
)
def test_grammar_round_trip(text):
    spec = parse_family(text)
    assert str(spec) == text
    assert parse_family(str(spec)) == spec


def test_parsed_structures():
    assert parse_family("rook:4,4") == Rook(4, 4)
    assert parse_family("cross(complete:4,complete:2)") == Cross(Complete(4), Complete(2))
    assert parse_family("cart(rook:2,2,cycle:4)") == Cartesian(Rook(2, 2), Cycle(4))
    assert parse_family("kjoin(complete:1,complete:3,2)") == KJoin(Complete(1), Complete(3), 2)
    assert parse_family("multipartite:3-1-2") == CompleteMultipartite((1, 2, 3))


@pytest.mark.parametrize(
    "text",
    ["cycle:2", "path:0", "rook:4", "sharp:1,4,2", "sharp:2,1,1", "bogus:3", "cart(complete:3)",
     "cart(complete:3,complete:3", "multipartite:0-2", "atlas:99999", "complete:x"],
)
def test_bad_specs(text):
    with pytest.raises(ParameterError):
        generate(parse_family(text))


def test_sharpness_needs_enough_blocks():
    with pytest.raises(ParameterError):
        SharpnessFamily(1, 3, 1)  # ceil(3/2) = 2 blocks needed
    assert generate(SharpnessFamily(2, 3, 2)).n == 2 * 3 + 1


def test_multipartite_shape():
    g = generate(CompleteMultipartite((2, 3)))
    assert g.n == 5 and g.m == 6 and g.min_degree == 2


def test_atlas_index():
    assert generate(Atlas(7)).n == 3
