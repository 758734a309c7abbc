"""Reference evaluations in plain Python over sets of pairs.

Nothing here touches the matrix routines; the acceptance suites compare the
two routes against each other.
"""

from __future__ import annotations

from itertools import combinations, product


def pair_set(rel) -> set:
    return set(rel.pairs())


def compose(a: set, b: set, n: int) -> set:
    return {(x, z) for x in range(n) for z in range(n)
            if any((x, y) in a and (y, z) in b for y in range(n))}


def filled(a: set, b: set, n: int) -> set:
    return {(x, y) for x in range(n) for y in range(n)
            if all((x, z) in a or (z, y) in b for z in range(n))}


def is_cotransitive(a: set, n: int) -> bool:
    return all((x, y) in a or (y, z) in a for (x, z) in a for y in range(n))


class Tables:
    """Plain-list view of a semigroup with an identity slot ``None``."""

    def __init__(self, s):
        self.n = s.n
        self.t = s.table.tolist()
        self.eq = s.eq.matrix.tolist()
        self.apt = s.apt.matrix.tolist()

    def mul(self, x, y):
        if x is None:
            return y
        if y is None:
            return x
        return self.t[x][y]

    def monoid(self):
        return [None] + list(range(self.n))


def is_co_congruence(pairs: set, tb: Tables) -> bool:
    n = tb.n
    if any(not tb.apt[x][y] for x, y in pairs):
        return False
    if any((y, x) not in pairs for x, y in pairs):
        return False
    if not is_cotransitive(pairs, n):
        return False
    for a, b, x, y in product(range(n), repeat=4):
        if (tb.t[a][x], tb.t[b][y]) in pairs and (a, b) not in pairs and (x, y) not in pairs:
            return False
    return True


def co_congruences(s) -> list[frozenset]:
    """Every co-congruence of s, by enumerating symmetric subsets of apt."""
    tb = Tables(s)
    base = [(x, y) for x, y in combinations(range(s.n), 2) if tb.apt[x][y]]
    out = []
    for k in range(len(base) + 1):
        for chosen in combinations(base, k):
            pairs = set(chosen) | {(y, x) for x, y in chosen}
            if is_co_congruence(pairs, tb):
                out.append(frozenset(pairs))
    return out


def eta(alpha: set, s) -> set:
    tb = Tables(s)
    n = tb.n
    one = tb.monoid()
    keep = set()
    for x, y in product(range(n), repeat=2):
        ok = True
        for u, v in product(range(n), repeat=2):
            if (u, v) in alpha:
                continue
            for a, c in product(one, repeat=2):
                p = tb.mul(tb.mul(a, u), c)
                q = tb.mul(tb.mul(a, v), c)
                if not (tb.apt[x][p] or tb.apt[y][q]):
                    ok = False
                    break
            if not ok:
                break
        if ok:
            keep.add((x, y))
    return keep


def green_preorders(s):
    """(leqL, leqR, leqJ) as pair sets, by listing principal ideals."""
    tb = Tables(s)
    n = tb.n
    one = tb.monoid()
    out = []
    for ideal in (
        lambda b: {tb.mul(u, b) for u in one},
        lambda b: {tb.mul(b, u) for u in one},
        lambda b: {tb.mul(tb.mul(u, b), v) for u in one for v in one},
    ):
        members = [ideal(b) for b in range(n)]
        out.append({(a, b) for a in range(n) for b in range(n)
                    if any(tb.eq[a][c] for c in members[b])})
    return tuple(out)


def relation_apartness_complement(alpha: set, s) -> set:
    tb = Tables(s)
    n = tb.n
    return {(x, y) for x in range(n) for y in range(n)
            if all(tb.apt[x][a] or tb.apt[y][b] for a, b in alpha)}
