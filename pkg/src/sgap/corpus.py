"""Test corpus: small families, every associative table up to order 4, and
non-discrete variants of the small tables."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .errors import ValidationError
from .families import family_semigroup
from .relations import FiniteRelation, FiniteSetoid
from .semigroup import SemigroupWithApartness


@lru_cache(maxsize=None)
def associative_tables(n: int) -> tuple:
    """Every associative n x n table (labelled), by backtracking over cells."""
    if n == 0:
        return ((),)
    t = [[-1] * n for _ in range(n)]
    cells = [(x, y) for x in range(n) for y in range(n)]
    found = []

    def consistent(x, y):
        # every triple whose defining entries are now all known and that uses (x, y)
        for a, b, c in product(range(n), repeat=3):
            ab = t[a][b]
            bc = t[b][c]
            if ab < 0 or bc < 0:
                continue
            left, right = t[ab][c], t[a][bc]
            if left < 0 or right < 0:
                continue
            if (a, b) != (x, y) and (ab, c) != (x, y) and (b, c) != (x, y) and (a, bc) != (x, y):
                continue
            if left != right:
                return False
        return True

    def fill(k):
        if k == len(cells):
            found.append(tuple(tuple(row) for row in t))
            return
        x, y = cells[k]
        for v in range(n):
            t[x][y] = v
            if consistent(x, y):
                fill(k + 1)
        t[x][y] = -1

    fill(0)
    return tuple(found)


def family_specs(max_size: int = 6) -> list[str]:
    specs = []
    for k in range(1, max_size + 1):
        specs += [f"cyclic:{k}", f"leftzero:{k}", f"rightzero:{k}", f"null:{k}", f"meet_chain:{k}"]
    specs += [f"monogenic:{m}:{r}" for m in range(1, max_size + 1)
              for r in range(1, max_size + 2 - m)]
    specs += [f"fulltransform:{k}" for k in range(1, 5) if k ** k <= max_size]
    return specs


@lru_cache(maxsize=None)
def family_corpus(max_size: int = 6) -> tuple:
    return tuple((spec, family_semigroup(spec)) for spec in family_specs(max_size))


@lru_cache(maxsize=None)
def table_corpus(n: int) -> tuple:
    setoid = FiniteSetoid.discrete(n)
    return tuple(
        (f"table{n}:" + "".join(str(v) for row in t for v in row), SemigroupWithApartness(setoid, t))
        for t in associative_tables(n)
    )


def discrete_corpus(max_n: int = 4) -> list:
    out = list(family_corpus())
    for n in range(max_n + 1):
        out += table_corpus(n)
    return out


def _partitions(n):
    # equivalence relations on {0..n-1} as restricted growth strings
    def grow(prefix, top):
        if len(prefix) == n:
            yield prefix
            return
        for b in range(top + 2):
            yield from grow(prefix + [b], max(top, b))

    for labels in grow([], -1):
        lab = np.array(labels)
        yield FiniteRelation(lab[:, None] == lab[None, :])


@lru_cache(maxsize=None)
def nondiscrete_corpus(max_n: int = 3) -> tuple:
    """Tables of order <= max_n with every other valid (eq, apt) pair."""
    out = []
    for n in range(1, max_n + 1):
        parts = list(_partitions(n))
        for name, s in table_corpus(n):
            for rho in parts:
                off = [(i, j) for i, j in combinations(range(n), 2) if (i, j) not in rho]
                for k in range(len(off) + 1):
                    for chosen in combinations(off, k):
                        kappa = FiniteRelation.from_pairs(n, chosen + tuple((j, i) for i, j in chosen))
                        if rho == s.eq and kappa == s.apt:
                            continue
                        try:
                            q = SemigroupWithApartness(FiniteSetoid(rho, kappa), s.table)
                        except ValidationError:
                            continue
                        tag = "".join(str(i) + str(j) for i, j in chosen)
                        out.append((f"{name}/eq{len(rho)}/apt{tag}", q))
    return tuple(out)


def full_corpus() -> list:
    return discrete_corpus() + list(nondiscrete_corpus())


def is_discrete(s: SemigroupWithApartness) -> bool:
    return (s.eq | s.apt) == FiniteRelation.full(s.n)
