"""Finite binary relations, subsets and setoids over the carrier {0..n-1}.

Relations are immutable boolean matrices. Every quantifier is evaluated
exhaustively; the existential and universal sums behind composition and the
filled product are computed by counting witnesses with a float32 matrix
product, which is exact for carriers far beyond 4096 elements.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterable, Optional

import numpy as np

from .errors import CarrierMismatch, IndexOutOfRange, InvalidSetoid, SgapError


def _count(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # number of z with a[x, z] and b[z, y]
    return a.astype(np.float32) @ b.astype(np.float32)


class FiniteRelation:
    """A set of ordered pairs of {0..n-1}, stored as a read-only bool matrix."""

    __slots__ = ("_m",)

    def __init__(self, matrix):
        m = np.array(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise SgapError(f"relation matrix must be square, got shape {m.shape}")
        m.setflags(write=False)
        self._m = m

    @classmethod
    def _wrap(cls, m: np.ndarray) -> "FiniteRelation":
        # skips the defensive copy for freshly computed arrays
        r = cls.__new__(cls)
        m.setflags(write=False)
        r._m = m
        return r

    @classmethod
    def empty(cls, n: int) -> "FiniteRelation":
        return cls._wrap(np.zeros((n, n), dtype=bool))

    @classmethod
    def full(cls, n: int) -> "FiniteRelation":
        return cls._wrap(np.ones((n, n), dtype=bool))

    @classmethod
    def identity(cls, n: int) -> "FiniteRelation":
        return cls._wrap(np.eye(n, dtype=bool))

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable) -> "FiniteRelation":
        m = np.zeros((n, n), dtype=bool)
        for x, y in pairs:
            if not (0 <= x < n and 0 <= y < n):
                raise IndexOutOfRange(f"pair ({x},{y}) outside carrier of size {n}")
            m[x, y] = True
        return cls._wrap(m)

    @classmethod
    def from_square_subset(cls, subset: "FiniteSubset") -> "FiniteRelation":
        n = int(round(subset.n ** 0.5))
        if n * n != subset.n:
            raise CarrierMismatch(f"{subset.n} is not a square carrier size")
        return cls._wrap(subset.mask.reshape(n, n).copy())

    @property
    def n(self) -> int:
        return self._m.shape[0]

    @property
    def matrix(self) -> np.ndarray:
        return self._m

    def pairs(self) -> list[tuple[int, int]]:
        return [(int(x), int(y)) for x, y in np.argwhere(self._m)]

    def as_square_subset(self) -> "FiniteSubset":
        """The relation as a subset of the square carrier, encoded x*n + y."""
        return FiniteSubset._wrap(self._m.reshape(-1).copy())

    def row(self, x: int) -> "FiniteSubset":
        return FiniteSubset._wrap(self._m[x].copy())

    def is_empty(self) -> bool:
        return not self._m.any()

    def inverse(self) -> "FiniteRelation":
        return FiniteRelation._wrap(self._m.T.copy())

    def _check(self, other: "FiniteRelation") -> np.ndarray:
        if not isinstance(other, FiniteRelation):
            raise TypeError(f"expected FiniteRelation, got {type(other).__name__}")
        if other.n != self.n:
            raise CarrierMismatch(f"carrier sizes {self.n} and {other.n} differ")
        return other._m

    def __or__(self, other):
        return FiniteRelation._wrap(self._m | self._check(other))

    def __and__(self, other):
        return FiniteRelation._wrap(self._m & self._check(other))

    def __sub__(self, other):
        return FiniteRelation._wrap(self._m & ~self._check(other))

    def __invert__(self):
        return FiniteRelation._wrap(~self._m)

    def __matmul__(self, other):
        return compose(self, other)

    def __le__(self, other):
        return not (self._m & ~self._check(other)).any()

    def __ge__(self, other):
        return other <= self

    def __lt__(self, other):
        return self <= other and self != other

    def __gt__(self, other):
        return other < self

    def __eq__(self, other):
        if not isinstance(other, FiniteRelation):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._m, other._m)

    def __hash__(self):
        return hash((self.n, np.packbits(self._m).tobytes()))

    def __contains__(self, pair) -> bool:
        x, y = pair
        return 0 <= x < self.n and 0 <= y < self.n and bool(self._m[x, y])

    def __len__(self) -> int:
        return int(self._m.sum())

    def __iter__(self):
        return iter(self.pairs())

    def __repr__(self):
        return f"FiniteRelation({format_relation(self)!r})"


class FiniteSubset:
    """A subset of {0..n-1}, stored as a read-only bool vector."""

    __slots__ = ("_v",)

    def __init__(self, mask):
        v = np.array(mask, dtype=bool)
        if v.ndim != 1:
            raise SgapError("subset mask must be one-dimensional")
        v.setflags(write=False)
        self._v = v

    @classmethod
    def _wrap(cls, v: np.ndarray) -> "FiniteSubset":
        s = cls.__new__(cls)
        v.setflags(write=False)
        s._v = v
        return s

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "FiniteSubset":
        v = np.zeros(n, dtype=bool)
        for i in indices:
            if not 0 <= i < n:
                raise IndexOutOfRange(f"index {i} outside carrier of size {n}")
            v[i] = True
        return cls._wrap(v)

    @classmethod
    def empty(cls, n: int) -> "FiniteSubset":
        return cls._wrap(np.zeros(n, dtype=bool))

    @classmethod
    def full(cls, n: int) -> "FiniteSubset":
        return cls._wrap(np.ones(n, dtype=bool))

    @property
    def n(self) -> int:
        return self._v.shape[0]

    @property
    def mask(self) -> np.ndarray:
        return self._v

    def indices(self) -> list[int]:
        return [int(i) for i in np.flatnonzero(self._v)]

    def is_empty(self) -> bool:
        return not self._v.any()

    def _check(self, other: "FiniteSubset") -> np.ndarray:
        if not isinstance(other, FiniteSubset):
            raise TypeError(f"expected FiniteSubset, got {type(other).__name__}")
        if other.n != self.n:
            raise CarrierMismatch(f"carrier sizes {self.n} and {other.n} differ")
        return other._v

    def __or__(self, other):
        return FiniteSubset._wrap(self._v | self._check(other))

    def __and__(self, other):
        return FiniteSubset._wrap(self._v & self._check(other))

    def __sub__(self, other):
        return FiniteSubset._wrap(self._v & ~self._check(other))

    def __invert__(self):
        return FiniteSubset._wrap(~self._v)

    def __le__(self, other):
        return not (self._v & ~self._check(other)).any()

    def __eq__(self, other):
        if not isinstance(other, FiniteSubset):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._v, other._v)

    def __hash__(self):
        return hash((self.n, np.packbits(self._v).tobytes()))

    def __contains__(self, x) -> bool:
        return 0 <= x < self.n and bool(self._v[x])

    def __len__(self) -> int:
        return int(self._v.sum())

    def __iter__(self):
        return iter(self.indices())

    def __repr__(self):
        return f"FiniteSubset(n={self.n}, {self.indices()})"


def _triple_violation(viol: np.ndarray, left: np.ndarray, right: np.ndarray):
    """First (x, y, z) with viol[x, z] and left[x, y] and right[y, z]."""
    x, z = np.argwhere(viol)[0]
    y = int(np.flatnonzero(left[x] & right[:, z])[0])
    return int(x), y, int(z)


def _cotransitivity_violation(m: np.ndarray) -> Optional[tuple[int, int, int]]:
    # (x, z) in the relation but some y has neither xy nor yz
    viol = m & (_count(~m, ~m) > 0)
    if not viol.any():
        return None
    return _triple_violation(viol, ~m, ~m)


def _transitivity_violation(m: np.ndarray) -> Optional[tuple[int, int, int]]:
    viol = ~m & (_count(m, m) > 0)
    if not viol.any():
        return None
    return _triple_violation(viol, m, m)


@dataclass(frozen=True)
class FiniteSetoid:
    """A carrier with an equality (an equivalence) and an apartness.

    The constructor checks every axiom and raises InvalidSetoid with a witness.
    """

    eq: FiniteRelation
    apt: FiniteRelation

    def __post_init__(self):
        eq, apt = self.eq.matrix, self.apt.matrix
        if eq.shape != apt.shape:
            raise CarrierMismatch("eq and apt live on different carriers")
        n = eq.shape[0]
        diag = np.flatnonzero(~eq[np.arange(n), np.arange(n)])
        if diag.size:
            raise InvalidSetoid("eq is not reflexive", (diag[0], diag[0]))
        asym = np.argwhere(eq & ~eq.T)
        if asym.size:
            raise InvalidSetoid("eq is not symmetric", asym[0])
        w = _transitivity_violation(eq)
        if w:
            raise InvalidSetoid("eq is not transitive", w)
        both = np.argwhere(eq & apt)
        if both.size:
            raise InvalidSetoid("eq and apt overlap", both[0])
        asym = np.argwhere(apt & ~apt.T)
        if asym.size:
            raise InvalidSetoid("apt is not symmetric", asym[0])
        w = _cotransitivity_violation(apt)
        if w:
            raise InvalidSetoid("apt is not cotransitive", w)
        # x eq x' and x apt y but not x' apt y
        bad = apt & (_count(eq, ~apt) > 0)
        if bad.any():
            x, y = np.argwhere(bad)[0]
            x2 = int(np.flatnonzero(eq[x] & ~apt[:, y])[0])
            raise InvalidSetoid("apt is not extensional over eq", (x, x2, y))

    @classmethod
    def discrete(cls, n: int) -> "FiniteSetoid":
        """Identity equality with the denial apartness."""
        eq = FiniteRelation.identity(n)
        return cls(eq, ~eq)

    @property
    def n(self) -> int:
        return self.eq.n

    @property
    def coarse_eq(self) -> FiniteRelation:
        """The negation of apartness."""
        return ~self.apt

    def square(self) -> "FiniteSetoid":
        return product_setoid(self, self)

    def complement_of(self, subset: FiniteSubset) -> FiniteSubset:
        """{x | x apt a for every a in subset}."""
        if subset.n != self.n:
            raise CarrierMismatch(f"subset on {subset.n} elements, setoid on {self.n}")
        return FiniteSubset._wrap(self.apt.matrix[:, subset.mask].all(axis=1))

    def complement_of_relation(self, alpha: FiniteRelation) -> FiniteRelation:
        """Apartness complement of alpha inside the square setoid.

        Same value as ``apartness_complement(alpha, product_apartness(s, s))``,
        without building the n^2 x n^2 product relation: (x, y) fails exactly
        when some (a, b) in alpha has x not apart from a and y not apart from b.
        """
        if alpha.n != self.n:
            raise CarrierMismatch(f"relation on {alpha.n} elements, setoid on {self.n}")
        near = ~self.apt.matrix
        hits = _count(_count(near, alpha.matrix) > 0, near)
        return FiniteRelation._wrap(hits == 0)


def make_relation(n: int, pair_list) -> FiniteRelation:
    return FiniteRelation.from_pairs(n, pair_list)


def pointwise_ops(alpha: FiniteRelation, beta: Optional[FiniteRelation], which: str) -> FiniteRelation:
    if which == "complement":
        return ~alpha
    if which == "inverse":
        return alpha.inverse()
    ops = {
        "union": FiniteRelation.__or__,
        "intersection": FiniteRelation.__and__,
        "difference": FiniteRelation.__sub__,
    }
    if which not in ops:
        raise SgapError(f"unknown pointwise operation {which!r}")
    return ops[which](alpha, beta)


def compose(alpha: FiniteRelation, beta: FiniteRelation) -> FiniteRelation:
    """(x, z) such that x alpha y and y beta z for some y."""
    b = alpha._check(beta)
    return FiniteRelation._wrap(_count(alpha.matrix, b) > 0)


def filled_product(alpha: FiniteRelation, beta: FiniteRelation) -> FiniteRelation:
    """(x, y) such that x alpha z or z beta y for every z.

    A pair is kept when no z falsifies both disjuncts.
    """
    b = alpha._check(beta)
    return FiniteRelation._wrap(_count(~alpha.matrix, ~b) == 0)


def product_setoid(s1: FiniteSetoid, s2: FiniteSetoid) -> FiniteSetoid:
    """The product setoid on pairs, encoded row-major as i1 * n2 + i2."""
    n = s1.n * s2.n

    def lift(a, b, op):
        return op(a[:, None, :, None], b[None, :, None, :]).reshape(n, n)

    eq = lift(s1.eq.matrix, s2.eq.matrix, np.logical_and)
    apt = lift(s1.apt.matrix, s2.apt.matrix, np.logical_or)
    return FiniteSetoid(FiniteRelation._wrap(eq), FiniteRelation._wrap(apt))


def product_apartness(s1: FiniteSetoid, s2: FiniteSetoid) -> FiniteRelation:
    return product_setoid(s1, s2).apt


def apartness_complement(alpha: FiniteRelation, apt_sq: FiniteRelation) -> FiniteRelation:
    """{(x, y) | (x, y) apt_sq (a, b) for every (a, b) in alpha}."""
    n = alpha.n
    if apt_sq.n != n * n:
        raise CarrierMismatch(f"apt_sq must live on {n * n} elements, got {apt_sq.n}")
    members = alpha.matrix.reshape(-1)
    kept = apt_sq.matrix[:, members].all(axis=1)
    return FiniteRelation._wrap(kept.reshape(n, n))


def transitive_closure(alpha: FiniteRelation) -> FiniteRelation:
    m = alpha.matrix
    while True:
        nxt = m | (_count(m, m) > 0)
        if np.array_equal(nxt, m):
            return FiniteRelation._wrap(m.copy())
        m = nxt


def equivalence_closure(alpha: FiniteRelation, eq: FiniteRelation) -> FiniteRelation:
    return transitive_closure(alpha | alpha.inverse() | eq)


@dataclass(frozen=True)
class RelationReport:
    reflexive: bool
    irreflexive: bool
    symmetric: bool
    transitive: bool
    cotransitive: bool
    strongly_irreflexive: bool
    quasiorder: bool
    equivalence: bool
    co_quasiorder: bool
    coequivalence: bool
    # only filled in by classify_apartness
    tight: Optional[bool] = None
    standard: Optional[bool] = None
    discrete: Optional[bool] = None
    fine: Optional[bool] = None
    cotransitivity_witness: Optional[tuple[int, int, int]] = None


def classify_relation(alpha: FiniteRelation, ctx: FiniteSetoid) -> RelationReport:
    """Classify alpha; reflexivity and irreflexivity are relative to ctx.eq."""
    alpha._check(ctx.eq)
    m = alpha.matrix
    reflexive = ctx.eq <= alpha
    irreflexive = not (m & ctx.eq.matrix).any()
    symmetric = bool(np.array_equal(m, m.T))
    transitive = _transitivity_violation(m) is None
    witness = _cotransitivity_violation(m)
    cotransitive = witness is None
    strongly_irreflexive = alpha <= ctx.apt
    quasiorder = reflexive and transitive
    co_quasiorder = strongly_irreflexive and cotransitive
    return RelationReport(
        reflexive=reflexive,
        irreflexive=irreflexive,
        symmetric=symmetric,
        transitive=transitive,
        cotransitive=cotransitive,
        strongly_irreflexive=strongly_irreflexive,
        quasiorder=quasiorder,
        equivalence=quasiorder and symmetric,
        co_quasiorder=co_quasiorder,
        coequivalence=co_quasiorder and symmetric,
        cotransitivity_witness=witness,
    )


def classify_apartness(apt: FiniteRelation, eq: FiniteRelation) -> RelationReport:
    """Classify an apartness relative to eq. Raises InvalidSetoid if it is not one."""
    from .kernels import fine_apartness

    ctx = FiniteSetoid(eq, apt)
    full = FiniteRelation.full(apt.n)
    return replace(
        classify_relation(apt, ctx),
        tight=~apt == eq,
        standard=(~(apt | eq)).is_empty(),
        discrete=(apt | eq) == full,
        fine=apt == fine_apartness(eq),
    )


@dataclass(frozen=True)
class SubsetReport:
    strongly_extensional: bool
    closed: bool
    apartness_complement: FiniteSubset


def is_strongly_extensional(subset: FiniteSubset, ctx: FiniteSetoid) -> bool:
    """a in A implies x in A or x apt a, for all x."""
    if subset.n != ctx.n:
        raise CarrierMismatch(f"subset on {subset.n} elements, setoid on {ctx.n}")
    inside = subset.mask
    near = ~ctx.apt.matrix
    return not near[~inside][:, inside].any()


def subset_checks(subset: FiniteSubset, ctx: FiniteSetoid) -> SubsetReport:
    compl = ctx.complement_of(subset)
    return SubsetReport(
        strongly_extensional=is_strongly_extensional(subset, ctx),
        closed=is_strongly_extensional(compl, ctx),
        apartness_complement=compl,
    )


_PAIR = re.compile(r"\((\d+),(\d+)\)")


def parse_relation(text: str, n: Optional[int] = None) -> FiniteRelation:
    """Parse ``n=3; pairs=(0,1)(1,2)``. ``n=`` may be omitted if n is given."""
    body = re.sub(r"\s+", "", text)
    fields = {}
    for part in filter(None, body.split(";")):
        key, sep, value = part.partition("=")
        if not sep or key not in ("n", "pairs") or key in fields:
            raise SgapError(f"bad relation literal {text!r}")
        fields[key] = value
    if "n" in fields:
        if not fields["n"].isdigit():
            raise SgapError(f"bad carrier size in {text!r}")
        size = int(fields["n"])
        if n is not None and size != n:
            raise CarrierMismatch(f"literal has n={size}, expected {n}")
        n = size
    if n is None:
        raise SgapError(f"relation literal {text!r} needs n=")
    spec = fields.get("pairs", "")
    if _PAIR.sub("", spec):
        raise SgapError(f"bad pair list {spec!r}")
    return FiniteRelation.from_pairs(n, ((int(a), int(b)) for a, b in _PAIR.findall(spec)))


def format_relation(alpha: FiniteRelation) -> str:
    return f"n={alpha.n}; pairs=" + "".join(f"({x},{y})" for x, y in alpha.pairs())
