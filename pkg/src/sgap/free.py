"""Words over a generator setoid and their evaluation in a semigroup."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product

import numpy as np

from .errors import CarrierMismatch, IndexOutOfRange, InvariantViolation, PreconditionError
from .relations import FiniteSetoid
from .semigroup import SemigroupWithApartness


@dataclass(frozen=True)
class Word:
    letters: tuple
    generators: FiniteSetoid

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if not self.letters:
            raise PreconditionError("words are non-empty")
        for x in self.letters:
            if not 0 <= x < self.generators.n:
                raise IndexOutOfRange(f"letter {x} outside generator set of size {self.generators.n}")

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return "".join(f"g{x}" for x in self.letters)


def _same_generators(u: Word, v: Word, gens: FiniteSetoid = None):
    if u.generators != v.generators or (gens is not None and gens != u.generators):
        raise CarrierMismatch("words over different generator setoids")


def word_concat(u: Word, v: Word) -> Word:
    _same_generators(u, v)
    return Word(u.letters + v.letters, u.generators)


def word_apart(u: Word, v: Word, gens: FiniteSetoid) -> bool:
    """Different lengths, or some position holding apart letters."""
    _same_generators(u, v, gens)
    if len(u) != len(v):
        return True
    apt = gens.apt.matrix
    return any(apt[a, b] for a, b in zip(u.letters, v.letters))


def word_eq(u: Word, v: Word, gens: FiniteSetoid) -> bool:
    _same_generators(u, v, gens)
    eq = gens.eq.matrix
    return len(u) == len(v) and all(eq[a, b] for a, b in zip(u.letters, v.letters))


def all_words(gens: FiniteSetoid, max_length: int = 4) -> list[Word]:
    return [Word(w, gens) for k in range(1, max_length + 1)
            for w in product(range(gens.n), repeat=k)]


def check_generator_map(f, gens: FiniteSetoid, s: SemigroupWithApartness) -> np.ndarray:
    """Validate f: generators -> S as a strongly extensional map of setoids."""
    f = np.asarray(f, dtype=np.int64).reshape(-1)
    if f.shape != (gens.n,):
        raise CarrierMismatch(f"map has {f.size} entries, {gens.n} generators")
    if f.size and (f.min() < 0 or f.max() >= s.n):
        raise IndexOutOfRange("map value outside the semigroup")
    if (gens.eq.matrix & ~s.eq.matrix[f[:, None], f[None, :]]).any():
        raise PreconditionError("map does not respect equality")
    if (s.apt.matrix[f[:, None], f[None, :]] & ~gens.apt.matrix).any():
        raise PreconditionError("map is not strongly extensional")
    return f


def evaluate(word: Word, f: np.ndarray, s: SemigroupWithApartness) -> int:
    return reduce(s.mul, (int(f[x]) for x in word.letters))


@lru_cache(maxsize=32)
def _sample_structure(letters: tuple, gens: FiniteSetoid):
    # concatenations that stay inside the sample, and word apartness on it
    where = {w: i for i, w in enumerate(letters)}
    triples = [(i, j, where[u + v]) for i, u in enumerate(letters)
               for j, v in enumerate(letters) if u + v in where]
    tri = np.array(triples, dtype=np.int64).reshape(-1, 3)
    words = [Word(w, gens) for w in letters]
    apart = np.array([[word_apart(u, v, gens) for v in words] for u in words], dtype=bool)
    return tri, apart


def extend_morphism(f, words: list[Word], s: SemigroupWithApartness) -> list[int]:
    """Values of the extension of f along words, multiplied left to right.

    The extension is checked on the sample: it respects every concatenation
    that stays inside the sample and is strongly extensional on sample pairs.
    """
    if not words:
        return []
    gens = words[0].generators
    for w in words:
        _same_generators(w, words[0])
    f = check_generator_map(f, gens, s)
    values = np.array([evaluate(w, f, s) for w in words], dtype=np.int64)
    tri, apart = _sample_structure(tuple(w.letters for w in words), gens)
    i, j, k = tri.T
    if not s.eq.matrix[values[k], s.table[values[i], values[j]]].all():
        raise InvariantViolation("extension does not respect concatenation on the sample")
    if (s.apt.matrix[values[:, None], values[None, :]] & ~apart).any():
        raise InvariantViolation("extension separates words that are not apart")
    return [int(v) for v in values]
