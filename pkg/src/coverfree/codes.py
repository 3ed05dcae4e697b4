"""q-ary block codes and their set-system view.

A codeword (c_0, ..., c_{N-1}) over an alphabet of size q turns into a block
of N points inside a ground set of N*q points: position i contributes point
i*q + c_i. Two codewords at Hamming distance D share exactly N - D points,
which is what makes code distance drive cover-freeness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import IncidenceMatrix

__all__ = ["Code", "code_to_set_system"]


@dataclass(frozen=True)
class Code:
    """A code as an explicit list of codewords.

    ``length`` is the word length N, ``q`` the alphabet size; symbols are
    integers 0..q-1 and all codewords are distinct.
    """

    length: int
    q: int
    words: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.length < 1:
            raise ValueError("code length must be positive")
        if self.q < 2:
            raise ValueError("alphabet size must be at least 2")
        if not self.words:
            raise ValueError("code must contain at least one word")
        seen = set()
        for word in self.words:
            if len(word) != self.length:
                raise ValueError(f"codeword {word} has length {len(word)}, expected {self.length}")
            if any(not 0 <= s < self.q for s in word):
                raise ValueError(f"codeword {word} has symbols outside 0..{self.q - 1}")
            if word in seen:
                raise ValueError(f"duplicate codeword {word}")
            seen.add(word)

    @property
    def size(self) -> int:
        return len(self.words)

    def min_distance(self) -> int:
        """Minimum Hamming distance by all-pairs scan. Quadratic; meant for
        the sizes this package actually builds."""
        if self.size < 2:
            raise ValueError("minimum distance needs at least two codewords")
        best = self.length
        for i in range(self.size):
            wi = self.words[i]
            for j in range(i + 1, self.size):
                wj = self.words[j]
                dist = sum(a != b for a, b in zip(wi, wj))
                if dist < best:
                    best = dist
        return best


def code_to_set_system(code: Code) -> IncidenceMatrix:
    """One block per codeword over ``length * q`` points; position i of word
    c contributes point i*q + c_i. Every block has exactly ``length`` points.
    """
    n, q = code.length, code.q
    rows = tuple(
        sum(1 << (i * q + s) for i, s in enumerate(word))
        for word in code.words
    )
    return IncidenceMatrix(n * q, rows)
