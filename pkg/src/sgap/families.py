"""Built-in semigroup families, all with the denial apartness."""

from __future__ import annotations

from itertools import product

from .errors import SgapError
from .relations import FiniteRelation
from .sgapfile import SgapDocument

MAX_CARRIER = 4096


def _cyclic(k):
    return [[(i + j) % k for j in range(k)] for i in range(k)]


def _monogenic(m, r):
    # index i is a^(i+1); exponents past the tail wrap round the cycle
    def red(e):
        return e if e < m else (e - m) % r + m

    size = m + r - 1
    return [[red(i + j + 2) - 1 for j in range(size)] for i in range(size)]


def _full_transform(k):
    # maps listed in lexicographic order of their value tuples; fg means f then g
    maps = list(product(range(k), repeat=k))
    pos = {f: i for i, f in enumerate(maps)}
    return [[pos[tuple(g[f[x]] for x in range(k))] for g in maps] for f in maps]


FAMILIES = {
    "cyclic": (1, lambda k: _cyclic(k)),
    "monogenic": (2, _monogenic),
    "leftzero": (1, lambda k: [[i] * k for i in range(k)]),
    "rightzero": (1, lambda k: [list(range(k)) for _ in range(k)]),
    "null": (1, lambda k: [[0] * k for _ in range(k)]),
    "fulltransform": (1, _full_transform),
    "meet_chain": (1, lambda k: [[min(i, j) for j in range(k)] for i in range(k)]),
}


def family_size(name: str, params: list[int]) -> int:
    if name == "monogenic":
        return params[0] + params[1] - 1
    if name == "fulltransform":
        return params[0] ** params[0]
    return params[0]


def generate_family(spec: str) -> SgapDocument:
    name, *raw = spec.strip().split(":")
    if name not in FAMILIES:
        raise SgapError(f"unknown family {name!r}")
    arity, build = FAMILIES[name]
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise SgapError(f"bad parameters in {spec!r}") from None
    if len(params) != arity or any(p < 1 for p in params):
        raise SgapError(f"{name} takes {arity} positive integer parameter(s)")
    if name == "fulltransform" and params[0] > 4:
        raise SgapError("fulltransform is limited to k <= 4")
    size = family_size(name, params)
    if size > MAX_CARRIER:
        raise SgapError(f"carrier size {size} exceeds {MAX_CARRIER}")
    table = tuple(tuple(row) for row in build(*params))
    eq = FiniteRelation.identity(size)
    return SgapDocument(size, table, eq, ~eq, spec.strip())


def family_semigroup(spec: str):
    return generate_family(spec).semigroup()
