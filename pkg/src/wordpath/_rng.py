"""Deterministic 64-bit random generator used by every stochastic routine.

SplitMix64 with Lemire's multiply-shift bounded draw.  The compiled extension
implements exactly the same update, double conversion, and bounded-integer
mapping, so a growth run produces an identical event stream on either backend
for a given seed.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_INV_2_53 = 1.0 / 9007199254740992.0  # 2^-53


class SplitMix64:
    """Seeded generator with uniform doubles and bounded integer draws."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + _GOLDEN) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) with 53 random bits."""
        return (self.next_u64() >> 11) * _INV_2_53

    def below(self, n: int) -> int:
        """Uniform integer in [0, n).  Multiply-shift mapping, n >= 1."""
        return (self.next_u64() * n) >> 64

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample_indices(self, n: int, k: int) -> list[int]:
        """k distinct indices drawn uniformly from range(n), ascending."""
        if k >= n:
            return list(range(n))
        arr = list(range(n))
        for i in range(k):
            j = i + self.below(n - i)
            arr[i], arr[j] = arr[j], arr[i]
        picked = arr[:k]
        picked.sort()
        return picked


def derive_seed(base: int, index: int) -> int:
    """Stable per-stream seed: mixes a base seed with a stream index."""
    return (base + index * _GOLDEN) & _MASK64
