"""Permutations that turn PP(C, C P) of a binary code into a symplectic
LCD code.

Each permutation is written as the list of images P(1), ..., P(n) of a
1-based arrangement of the coordinates. Applied to the second
constituent of PP(C, C) for the binary [n, k] code C it yields a binary
symplectic LCD code of length 2n. The entry for n = 65 is the length-63
arrangement, so both names resolve to the same object.
"""

import logging
from typing import Dict, Tuple

from .errors import InvalidPermutationError

Images = Tuple[int, ...]

P46: Images = (
    23, 28, 2, 20, 32, 18, 22, 3, 17, 6, 46, 15, 36, 27, 14, 43, 16, 39, 26,
    38, 12, 42, 4, 10, 40, 31, 37, 24, 7, 29, 5, 19, 44, 1, 41, 13, 11, 45,
    21, 35, 30, 9, 25, 33, 34, 8,
)

P52: Images = (
    22, 29, 50, 46, 35, 37, 42, 45, 18, 30, 36, 2, 25, 43, 10, 5, 26, 11,
    24, 27, 20, 49, 17, 23, 41, 47, 7, 6, 51, 48, 12, 16, 34, 31, 44, 15, 3,
    13, 52, 19, 14, 33, 38, 40, 9, 8, 32, 39, 4, 21, 28, 1,
)

P56: Images = (
    42, 15, 52, 24, 38, 11, 12, 18, 6, 39, 51, 53, 2, 30, 46, 21, 29, 3, 13,
    19, 49, 36, 48, 9, 7, 31, 41, 50, 40, 8, 4, 25, 1, 47, 34, 5, 33, 45,
    10, 27, 14, 28, 16, 23, 26, 37, 54, 43, 35, 32, 55, 56, 44, 22, 20, 17,
)

P58: Images = (
    11, 38, 18, 51, 42, 52, 19, 48, 56, 55, 22, 20, 7, 5, 4, 21, 34, 14, 40,
    35, 27, 24, 41, 44, 9, 10, 23, 6, 8, 31, 46, 39, 57, 47, 36, 45, 54, 3,
    50, 33, 49, 1, 15, 58, 29, 16, 26, 2, 13, 25, 17, 28, 12, 53, 43, 37,
    32, 30,
)

P62: Images = (
    1, 23, 42, 44, 62, 3, 25, 27, 36, 48, 47, 29, 11, 34, 20, 16, 30, 18,
    51, 31, 4, 52, 33, 7, 57, 19, 49, 58, 2, 43, 8, 26, 5, 37, 59, 40, 6,
    55, 61, 9, 46, 15, 21, 22, 38, 32, 13, 28, 53, 12, 17, 24, 56, 10, 60,
    39, 50, 35, 14, 41, 45, 54,
)

P63: Images = (
    53, 29, 63, 14, 44, 47, 46, 4, 51, 59, 11, 20, 10, 23, 13, 37, 42, 9,
    26, 34, 12, 49, 38, 30, 62, 56, 16, 55, 28, 33, 3, 61, 40, 6, 5, 35, 22,
    24, 52, 50, 25, 7, 18, 39, 36, 31, 8, 21, 27, 57, 17, 60, 41, 58, 19,
    43, 54, 48, 1, 32, 15, 45, 2,
)

P64: Images = (
    48, 32, 16, 55, 9, 43, 23, 46, 49, 10, 60, 62, 40, 22, 3, 38, 8, 34, 59,
    35, 36, 30, 1, 6, 63, 57, 5, 44, 15, 33, 53, 4, 25, 31, 29, 45, 58, 17,
    64, 11, 14, 24, 52, 42, 18, 20, 51, 37, 56, 61, 41, 13, 19, 7, 50, 2,
    12, 21, 26, 54, 39, 27, 47, 28,
)

P70: Images = (
    56, 23, 40, 64, 63, 61, 39, 41, 55, 33, 13, 22, 26, 17, 48, 18, 36, 20,
    67, 46, 59, 25, 19, 45, 31, 51, 38, 65, 50, 57, 43, 60, 9, 54, 10, 52,
    70, 14, 30, 44, 62, 66, 58, 5, 35, 3, 42, 6, 7, 21, 16, 47, 53, 28, 8,
    49, 29, 34, 4, 27, 15, 37, 69, 11, 32, 1, 68, 12, 2, 24,
)

P72: Images = (
    36, 25, 56, 57, 22, 35, 29, 23, 8, 31, 3, 38, 19, 70, 45, 68, 10, 72,
    53, 2, 42, 58, 18, 51, 61, 63, 27, 54, 52, 46, 13, 43, 11, 62, 17, 28,
    71, 41, 66, 47, 14, 6, 12, 48, 26, 65, 67, 30, 40, 24, 7, 33, 32, 34,
    64, 55, 4, 50, 49, 69, 37, 60, 15, 21, 16, 1, 44, 20, 39, 9, 59, 5,
)

P74: Images = (
    49, 6, 67, 11, 21, 36, 71, 64, 52, 7, 59, 10, 42, 66, 28, 27, 30, 43, 3,
    38, 20, 14, 16, 40, 60, 15, 5, 41, 54, 73, 17, 19, 26, 57, 62, 32, 2,
    53, 61, 34, 9, 74, 8, 1, 31, 55, 22, 44, 29, 68, 39, 63, 33, 56, 50, 13,
    72, 58, 69, 35, 70, 51, 24, 47, 4, 12, 45, 48, 46, 18, 25, 37, 23, 65,
)

P65 = P63

APPENDIX_PERMUTATIONS: Dict[str, Images] = {
    "P46": P46,
    "P52": P52,
    "P56": P56,
    "P58": P58,
    "P62": P62,
    "P63": P63,
    "P64": P64,
    "P65": P65,
    "P70": P70,
    "P72": P72,
    "P74": P74,
}


def validate_images(images: Images) -> None:
    """Check that `images` is a bijection of 1..n.

    :raises InvalidPermutationError: On a repeated or out-of-range image.
    """
    n = len(images)
    if sorted(images) != list(range(1, n + 1)):
        raise InvalidPermutationError(
            f"images of length {n} are not a bijection of 1..{n}"
        )


def appendix_permutations() -> Dict[str, Images]:
    """Every stored permutation keyed by name, validated once more."""
    for name, images in APPENDIX_PERMUTATIONS.items():
        validate_images(images)
        logging.debug("Loaded permutation %s of length %s", name, len(images))
    return dict(APPENDIX_PERMUTATIONS)


for _name, _images in APPENDIX_PERMUTATIONS.items():
    validate_images(_images)
