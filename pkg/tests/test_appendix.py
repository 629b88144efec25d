import pytest

from symplotkin import appendix
from symplotkin.appendix import (
    APPENDIX_PERMUTATIONS,
    P46,
    P63,
    P65,
    appendix_permutations,
    validate_images,
)
from symplotkin.errors import InvalidPermutationError
from symplotkin.lcdsearch import Permutation


def test_stored_names() -> None:
    assert sorted(APPENDIX_PERMUTATIONS) == [
        "P46",
        "P52",
        "P56",
        "P58",
        "P62",
        "P63",
        "P64",
        "P65",
        "P70",
        "P72",
        "P74",
    ]


@pytest.mark.parametrize(
    "name",
    ["P46", "P52", "P56", "P58", "P62", "P63", "P64", "P70", "P72", "P74"],
)
def test_lengths_match_names(name: str) -> None:
    images = APPENDIX_PERMUTATIONS[name]
    assert len(images) == int(name[1:])
    assert Permutation(images).n == len(images)


def test_p46_prefix() -> None:
    assert P46[:3] == (23, 28, 2)
    assert P46[-1] == 8


def test_p65_is_the_length_63_arrangement() -> None:
    assert P65 is P63
    assert len(P65) == 63
    assert appendix_permutations()["P65"] is P63


def test_validate_images() -> None:
    validate_images((2, 3, 1))
    with pytest.raises(InvalidPermutationError):
        validate_images((1, 1, 2))
    with pytest.raises(InvalidPermutationError):
        validate_images((0, 1, 2))


def test_module_describes_binary_codes() -> None:
    assert appendix.__doc__ is not None
    assert "binary" in appendix.__doc__
    assert "ternary" not in appendix.__doc__
