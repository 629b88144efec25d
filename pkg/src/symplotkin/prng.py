"""Deterministic xorshift64* generator with Fisher-Yates shuffles.

The stream depends only on the seed, so a permutation found by a
search is reproducible from the seed recorded in its report.
"""

from typing import List, MutableSequence, TypeVar

T = TypeVar("T")

MASK = (1 << 64) - 1
MULTIPLIER = 0x2545F4914F6CDD1D


def splitmix64(value: int) -> int:
    z = (value + 0x9E3779B97F4A7C15) & MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class Xorshift64Star:
    """xorshift64* with its 64-bit state seeded through splitmix64."""

    def __init__(self, seed: int):
        self.seed = seed
        self.state = splitmix64(seed & MASK) or MULTIPLIER

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & MASK
        x ^= x >> 27
        self.state = x
        return (x * MULTIPLIER) & MASK

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) by rejection sampling."""
        if bound < 1:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (MASK + 1) - ((MASK + 1) % bound)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % bound

    def shuffle(self, items: MutableSequence[T]) -> MutableSequence[T]:
        # Fisher-Yates, last position first
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]
        return items

    def permutation(self, n: int) -> List[int]:
        """A uniformly random arrangement of 0..n-1."""
        images = list(range(n))
        self.shuffle(images)
        return images
