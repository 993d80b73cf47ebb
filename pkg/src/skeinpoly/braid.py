"""
Braid words and the moves between closed braids.

A braid on ``n`` strands is a word in the Artin generators; letter ``i``
is ``sigma_i`` (a positive crossing of strands ``i`` and ``i+1``) and ``-i``
its inverse.  Words are freely reduced on construction, but no attempt is
made to solve the word or conjugacy problem.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "BraidWord",
    "Permutation",
    "BraidParseError",
    "free_reduce",
    "parse",
    "concat",
    "invert",
    "shift",
    "chain",
    "underlying_permutation",
    "closure_components",
    "conjugate",
    "markov_stabilize",
    "cyclic_min",
    "random_braid",
]


class BraidParseError(ValueError):
    """Malformed braid text; ``position`` is the 0-based token index."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (token {position})")
        self.position = position


def free_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for x in letters:
        if stack and stack[-1] == -x:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


@dataclass(frozen=True)
class BraidWord:
    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"strand count must be >= 1, got {self.n}")
        letters = tuple(int(x) for x in self.letters)
        for x in letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"letter {x} out of range for {self.n} strands")
        object.__setattr__(self, "letters", free_reduce(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        return concat(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.letters))

    def writhe(self) -> int:
        return sum(1 if x > 0 else -1 for x in self.letters)

    def to_json(self) -> dict:
        return {"strands": self.n, "letters": list(self.letters)}

    @classmethod
    def from_json(cls, data: dict | str) -> BraidWord:
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(data["strands"]), tuple(data["letters"]))

    @classmethod
    def identity(cls, n: int) -> BraidWord:
        return cls(n, ())


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i-1]`` is where strand ``i`` ends up."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def then(self, other: Permutation) -> Permutation:
        """Apply ``self`` first, then ``other`` (braid-product order)."""
        return Permutation(tuple(other(self(i)) for i in range(1, self.n + 1)))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = []
            i = start
            while i not in seen:
                seen.add(i)
                cyc.append(i)
                i = self(i)
            out.append(tuple(cyc))
        return out

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))


_SPLIT = re.compile(r"[\s,]+")


def parse(text: str, strands: int | None = None) -> BraidWord:
    """Parse whitespace- or comma-separated signed generator indices."""
    tokens = [t for t in _SPLIT.split(text.strip()) if t]
    letters = []
    for pos, tok in enumerate(tokens):
        try:
            x = int(tok)
        except ValueError:
            raise BraidParseError(f"malformed token {tok!r}", pos) from None
        if x == 0:
            raise BraidParseError("generator index 0 is not allowed", pos)
        if strands is not None and abs(x) >= strands:
            raise BraidParseError(f"letter {x} needs more than {strands} strands", pos)
        letters.append(x)
    if strands is None:
        strands = max((abs(x) for x in letters), default=0) + 1
    if strands < 1:
        raise BraidParseError(f"strand count must be >= 1, got {strands}")
    return BraidWord(strands, tuple(letters))


def _same_n(x: BraidWord, y: BraidWord) -> None:
    if x.n != y.n:
        raise ValueError(f"strand counts differ: {x.n} vs {y.n}")


def concat(x: BraidWord, y: BraidWord) -> BraidWord:
    _same_n(x, y)
    return BraidWord(x.n, x.letters + y.letters)


def invert(x: BraidWord) -> BraidWord:
    return BraidWord(x.n, tuple(-l for l in reversed(x.letters)))


def shift(x: BraidWord, k: int, new_n: int) -> BraidWord:
    """Raise every generator index by ``k`` and view the word on ``new_n`` strands."""
    if k < 0 or new_n < x.n + k:
        raise ValueError(f"cannot shift a {x.n}-braid by {k} into {new_n} strands")
    return BraidWord(new_n, tuple(l + k if l > 0 else l - k for l in x.letters))


def chain(p: int) -> BraidWord:
    """``sigma_1^2 sigma_2^2 ... sigma_{p-1}^2``, whose closure is the p-component chain."""
    if p < 1:
        raise ValueError("chain needs p >= 1")
    return BraidWord(p, tuple(i for i in range(1, p) for _ in range(2)))


def underlying_permutation(x: BraidWord) -> Permutation:
    # pos[s] = current position of the strand that started at s
    pos = list(range(x.n + 1))
    at = list(range(x.n + 1))  # at[p] = strand currently at position p
    for l in x.letters:
        i = abs(l)
        a, b = at[i], at[i + 1]
        at[i], at[i + 1] = b, a
        pos[a], pos[b] = i + 1, i
    return Permutation(tuple(pos[1:]))


def closure_components(x: BraidWord) -> int:
    return len(underlying_permutation(x).cycles())


def conjugate(x: BraidWord, g: BraidWord) -> BraidWord:
    """``g^-1 x g``."""
    _same_n(x, g)
    return BraidWord(x.n, invert(g).letters + x.letters + g.letters)


def markov_stabilize(x: BraidWord, sign: int) -> BraidWord:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return BraidWord(x.n + 1, x.letters + (sign * x.n,))


def _letter_key(l: int) -> tuple[int, int]:
    return (0 if l < 0 else 1, abs(l))


def cyclic_reduce(letters: Sequence[int]) -> tuple[int, ...]:
    w = free_reduce(letters)
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return w


def cyclic_min(x: BraidWord) -> BraidWord:
    """Least rotation of the cyclically reduced word under (sign, magnitude) order."""
    w = cyclic_reduce(x.letters)
    if not w:
        return BraidWord(x.n, ())
    best = min((w[i:] + w[:i] for i in range(len(w))),
               key=lambda r: tuple(_letter_key(l) for l in r))
    return BraidWord(x.n, best)


def random_braid(rng: random.Random, min_strands: int = 2, max_strands: int = 5,
                 max_length: int = 10) -> BraidWord:
    """Uniform letters in ``±{1..n-1}``, ``n`` and length drawn uniformly."""
    n = rng.randint(min_strands, max_strands)
    length = rng.randint(0, max_length)
    letters = [rng.choice([-1, 1]) * rng.randint(1, n - 1) for _ in range(length)] if n > 1 else []
    return BraidWord(n, tuple(letters))
