"""Finite semigroups with apartness, their closures, kernels and quotients."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Optional

import numpy as np

from .errors import (
    CarrierMismatch,
    IndexOutOfRange,
    InvariantViolation,
    NonAssociative,
    NotExtensional,
    NotHomomorphism,
    NotStronglyExtensional,
    PreconditionError,
)
from .kernels import coequivalence_kernel
from .relations import (
    FiniteRelation,
    FiniteSetoid,
    FiniteSubset,
    _count,
    classify_relation,
    equivalence_closure,
    is_strongly_extensional,
)


class SemigroupWithApartness:
    """A multiplication table over a setoid, validated on construction.

    Checks associativity modulo eq, extensionality of the multiplication over
    eq and strong extensionality over apt, raising with a witness otherwise.
    """

    def __init__(self, setoid: FiniteSetoid, table):
        n = setoid.n
        t = np.array(table, dtype=np.int64)
        if n == 0:
            t = t.reshape(0, 0)
        if t.shape != (n, n):
            raise CarrierMismatch(f"table shape {t.shape} does not match carrier size {n}")
        if t.size and (t.min() < 0 or t.max() >= n):
            bad = np.argwhere((t < 0) | (t >= n))[0]
            raise IndexOutOfRange(f"table entry at {tuple(int(i) for i in bad)} is out of range")
        t.setflags(write=False)
        self.setoid = setoid
        self.table = t
        _validate(self)

    @property
    def n(self) -> int:
        return self.setoid.n

    @property
    def eq(self) -> FiniteRelation:
        return self.setoid.eq

    @property
    def apt(self) -> FiniteRelation:
        return self.setoid.apt

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    @cached_property
    def monoid_table(self) -> np.ndarray:
        """Table of S with a fresh identity adjoined at index n."""
        n = self.n
        t = np.empty((n + 1, n + 1), dtype=np.int64)
        t[:n, :n] = self.table
        t[n, :] = np.arange(n + 1)
        t[:, n] = np.arange(n + 1)
        t.setflags(write=False)
        return t

    @cached_property
    def translates(self) -> np.ndarray:
        """translates[s, u, t] = s u t for s, t in S with identity and u in S."""
        t1 = self.monoid_table
        out = t1[t1[:, : self.n], :]
        out.setflags(write=False)
        return out

    def __eq__(self, other):
        if not isinstance(other, SemigroupWithApartness):
            return NotImplemented
        return self.setoid == other.setoid and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.setoid, self.table.tobytes()))

    def __repr__(self):
        return f"SemigroupWithApartness(n={self.n}, table={self.table.tolist()})"


def build_semigroup(setoid: FiniteSetoid, table) -> SemigroupWithApartness:
    return SemigroupWithApartness(setoid, table)


def _validate(s: SemigroupWithApartness):
    n, t = s.n, s.table
    eq, apt = s.eq.matrix, s.apt.matrix
    if n == 0:
        return
    ar = np.arange(n)
    left = t[t]  # (xy)z
    right = t[ar[:, None, None], t[None, :, :]]  # x(yz)
    bad = ~eq[left, right]
    if bad.any():
        raise NonAssociative("multiplication is not associative", np.argwhere(bad)[0])
    # Since eq is transitive, two-sided extensionality reduces to one side at a time.
    x, x2 = np.nonzero(eq)
    bad = ~eq[t[x], t[x2]]
    if bad.any():
        i, y = np.argwhere(bad)[0]
        raise NotExtensional("multiplication is not extensional", (x[i], y, x2[i], y))
    bad = ~eq[t[:, x], t[:, x2]]
    if bad.any():
        y, i = np.argwhere(bad)[0]
        raise NotExtensional("multiplication is not extensional", (y, x[i], y, x2[i]))
    # apt is cotransitive, so xy apt zw forces xy apt zy or zy apt zw; checking
    # each factor separately is therefore exhaustive.
    bad = apt[t[:, None, :], t[None, :, :]] & ~apt[:, :, None]  # [x, z, y]
    if bad.any():
        a, c, y = np.argwhere(bad)[0]
        raise NotStronglyExtensional("multiplication is not strongly extensional", (a, y, c, y))
    bad = apt[t[:, :, None], t[:, None, :]] & ~apt[None, :, :]  # [z, y, w]
    if bad.any():
        z, y, w = np.argwhere(bad)[0]
        raise NotStronglyExtensional("multiplication is not strongly extensional", (z, y, z, w))


def adjoin_identity(s: SemigroupWithApartness) -> SemigroupWithApartness:
    n = s.n
    eq = np.zeros((n + 1, n + 1), dtype=bool)
    eq[:n, :n] = s.eq.matrix
    eq[n, n] = True
    apt = np.ones((n + 1, n + 1), dtype=bool)
    apt[:n, :n] = s.apt.matrix
    apt[n, n] = False
    setoid = FiniteSetoid(FiniteRelation(eq), FiniteRelation(apt))
    return SemigroupWithApartness(setoid, s.monoid_table)


def _same_carrier(alpha: FiniteRelation, s: SemigroupWithApartness):
    if alpha.n != s.n:
        raise CarrierMismatch(f"relation on {alpha.n} elements, semigroup on {s.n}")


def _translate_pairs(s: SemigroupWithApartness, mask: np.ndarray) -> np.ndarray:
    """Bool matrix of all (sut, svt) with mask[u, v], s and t ranging over S^1."""
    out = np.zeros((s.n, s.n), dtype=bool)
    us, vs = np.nonzero(mask)
    if us.size:
        m = s.translates
        out[m[:, us, :].ravel(), m[:, vs, :].ravel()] = True
    return out


def compatible_closure(alpha: FiniteRelation, s: SemigroupWithApartness) -> FiniteRelation:
    _same_carrier(alpha, s)
    return FiniteRelation._wrap(_translate_pairs(s, alpha.matrix))


def congruence_closure(alpha: FiniteRelation, s: SemigroupWithApartness) -> FiniteRelation:
    return equivalence_closure(compatible_closure(alpha, s), s.eq)


@dataclass(frozen=True)
class CompatibilityReport:
    left_compatible: bool
    right_compatible: bool
    congruence: bool
    left_co_compatible: bool
    right_co_compatible: bool
    co_compatible: bool
    co_congruence: bool


def _co_compatible(z: np.ndarray, t: np.ndarray) -> bool:
    # (ax) z (by) implies a z b or x z y, for all a, b, x, y
    n = z.shape[0]
    for a in range(n):
        bs = np.flatnonzero(~z[a])
        if bs.size == 0:
            continue
        hit = z[t[a][None, :, None], t[bs][:, None, :]]  # [b, x, y]
        if (hit & ~z[None, :, :]).any():
            return False
    return True


def classify_compatibility(alpha: FiniteRelation, s: SemigroupWithApartness) -> CompatibilityReport:
    _same_carrier(alpha, s)
    m, t = alpha.matrix, s.table
    ss, ts = np.nonzero(m)
    left = bool(m[t[:, ss], t[:, ts]].all())
    right = bool(m[t[ss, :], t[ts, :]].all())
    report = classify_relation(alpha, s.setoid)
    left_co = not (m[t[:, :, None], t[:, None, :]] & ~m[None]).any()
    tt = t.T
    right_co = not (m[tt[:, :, None], tt[:, None, :]] & ~m[None]).any()
    co = _co_compatible(m, t)
    return CompatibilityReport(
        left_compatible=left,
        right_compatible=right,
        congruence=report.equivalence and left and right,
        left_co_compatible=left_co,
        right_co_compatible=right_co,
        co_compatible=co,
        co_congruence=report.coequivalence and co,
    )


def eta(alpha: FiniteRelation, s: SemigroupWithApartness) -> FiniteRelation:
    """Pairs apart from every translate (sut, svt) of a pair (u, v) outside alpha.

    (x, y) fails to be apart from (p, q) exactly when x is not apart from p
    and y is not apart from q, so the pairs dropped are those joined to some
    such translate on both sides by the coarse equality.
    """
    _same_carrier(alpha, s)
    forbidden = _translate_pairs(s, ~alpha.matrix)
    near = ~s.apt.matrix
    dropped = _count(_count(near, forbidden) > 0, near) > 0
    return FiniteRelation._wrap(~dropped)


def co_congruence_kernel(alpha: FiniteRelation, s: SemigroupWithApartness) -> FiniteRelation:
    return coequivalence_kernel(eta(alpha, s), s.setoid)


class Morphism:
    """An index map between semigroups with apartness, checked to be a
    homomorphism that respects equality."""

    def __init__(self, source: SemigroupWithApartness, target: SemigroupWithApartness, mapping):
        f = np.array(mapping, dtype=np.int64).reshape(-1)
        if f.shape != (source.n,):
            raise CarrierMismatch(f"map has {f.size} entries, source has {source.n} elements")
        if f.size and (f.min() < 0 or f.max() >= target.n):
            raise IndexOutOfRange("map value outside target carrier")
        f.setflags(write=False)
        teq = target.eq.matrix
        bad = ~teq[f[source.table], target.table[f[:, None], f[None, :]]]
        if bad.any():
            raise NotHomomorphism("map is not a homomorphism", np.argwhere(bad)[0])
        bad = source.eq.matrix & ~teq[f[:, None], f[None, :]]
        if bad.any():
            raise NotHomomorphism("map does not respect equality", np.argwhere(bad)[0])
        self.source = source
        self.target = target
        self.map = f

    @classmethod
    def identity(cls, s: SemigroupWithApartness) -> "Morphism":
        return cls(s, s, np.arange(s.n))

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    @property
    def ker(self) -> FiniteRelation:
        f = self.map
        return FiniteRelation._wrap(self.target.eq.matrix[f[:, None], f[None, :]])

    @property
    def cker(self) -> FiniteRelation:
        f = self.map
        return FiniteRelation._wrap(self.target.apt.matrix[f[:, None], f[None, :]])


@dataclass(frozen=True)
class MorphismReport:
    strongly_extensional: bool
    apartness_injective: bool
    ker: FiniteRelation
    cker: FiniteRelation
    injective: bool
    surjective: bool


def morphism_checks(f: Morphism) -> MorphismReport:
    ker, cker = f.ker, f.cker
    hit = f.target.eq.matrix[:, f.map].any(axis=1) if f.source.n else np.zeros(f.target.n, bool)
    return MorphismReport(
        strongly_extensional=cker <= f.source.apt,
        apartness_injective=f.source.apt <= cker,
        ker=ker,
        cker=cker,
        injective=ker <= f.source.eq,
        surjective=bool(hit.all()),
    )


@dataclass(frozen=True)
class QuotientResult:
    Q: SemigroupWithApartness
    projection: Morphism


def quotient(s: SemigroupWithApartness, rho: FiniteRelation, kappa: FiniteRelation) -> QuotientResult:
    """Same carrier and table, with rho as equality and kappa as apartness."""
    _same_carrier(rho, s)
    _same_carrier(kappa, s)
    if not (s.eq <= rho and classify_compatibility(rho, s).congruence):
        raise PreconditionError("rho is not a congruence containing eq")
    if not classify_compatibility(kappa, s).co_congruence:
        raise PreconditionError("kappa is not a co-congruence")
    both = rho & kappa
    if not both.is_empty():
        raise PreconditionError(f"rho and kappa overlap at {both.pairs()[0]}")
    q = SemigroupWithApartness(FiniteSetoid(rho, kappa), s.table)
    return QuotientResult(q, Morphism(s, q, np.arange(s.n)))


def class_representatives(eq: FiniteRelation) -> list[int]:
    """Least index of every eq-class, in increasing order."""
    m = eq.matrix
    return [x for x in range(eq.n) if not m[x, :x].any()]


def collapse(s: SemigroupWithApartness) -> tuple[SemigroupWithApartness, list[int]]:
    """Re-index s on its least class representatives, with identity equality."""
    reps = class_representatives(s.eq)
    r = np.array(reps, dtype=np.int64)
    if s.n == 0:
        return s, reps
    which = s.eq.matrix[:, r].argmax(axis=1)
    table = which[s.table[r[:, None], r[None, :]]]
    apt = s.apt.matrix[r[:, None], r[None, :]]
    setoid = FiniteSetoid(FiniteRelation.identity(len(reps)), FiniteRelation(apt))
    return SemigroupWithApartness(setoid, table), reps


def coarse_quotient(s: SemigroupWithApartness) -> SemigroupWithApartness:
    return quotient(s, ~s.apt, s.apt).Q


@dataclass(frozen=True)
class IdempotentData:
    E: FiniteSubset
    C: FiniteSubset
    E_closed: bool


def idempotents_and_C(s: SemigroupWithApartness) -> IdempotentData:
    ar = np.arange(s.n)
    sq = s.table[ar, ar]
    e = FiniteSubset._wrap(s.eq.matrix[sq, ar].copy())
    c = FiniteSubset._wrap(s.apt.matrix[ar, sq].copy())
    return IdempotentData(e, c, is_strongly_extensional(s.setoid.complement_of(e), s.setoid))


def _index(s: SemigroupWithApartness, a: int):
    if not 0 <= a < s.n:
        raise IndexOutOfRange(f"element {a} outside carrier of size {s.n}")


@dataclass(frozen=True)
class RegularityData:
    inverses: FiniteSubset
    regular: bool


def regularity(s: SemigroupWithApartness, a: int) -> RegularityData:
    _index(s, a)
    t, eq = s.table, s.eq.matrix
    ax = t[a]
    xa = t[:, a]
    axa = t[ax, a]
    xax = t[xa, np.arange(s.n)]
    inv = eq[axa, a] & eq[xax, np.arange(s.n)]
    return RegularityData(FiniteSubset._wrap(inv), bool(eq[axa, a].any()))


def is_regular(s: SemigroupWithApartness) -> bool:
    t, eq = s.table, s.eq.matrix
    ar = np.arange(s.n)
    # axa for all a, x
    return bool(eq[t[t[ar[:, None], ar[None, :]], ar[:, None]], ar[:, None]].any(axis=1).all())


@dataclass(frozen=True)
class MonogenicData:
    index: int
    period: int
    idempotent_power: int
    orbit: list


def index_period(s: SemigroupWithApartness, a: int) -> MonogenicData:
    _index(s, a)
    eq = s.eq.matrix
    powers = [a]
    while True:
        nxt = s.mul(powers[-1], a)
        earlier = [j for j, p in enumerate(powers) if eq[p, nxt]]
        if earlier:
            m = earlier[0] + 1
            r = len(powers) + 1 - m
            break
        powers.append(nxt)
    idem = next(k + 1 for k, p in enumerate(powers) if eq[s.mul(p, p), p])
    return MonogenicData(m, r, idem, powers)


@dataclass(frozen=True)
class CoIdealReport:
    strongly_extensional: bool
    left_convex: bool
    right_convex: bool
    co_ideal: bool
    co_subsemigroup: bool


def co_ideal_check(subset: FiniteSubset, s: SemigroupWithApartness) -> CoIdealReport:
    if subset.n != s.n:
        raise CarrierMismatch(f"subset on {subset.n} elements, semigroup on {s.n}")
    inside = subset.mask
    prod_in = inside[s.table]  # [a, b] : ab in A
    se = is_strongly_extensional(subset, s.setoid)
    left = not (prod_in & ~inside[:, None]).any()
    right = not (prod_in & ~inside[None, :]).any()
    sub = not (prod_in & ~inside[:, None] & ~inside[None, :]).any()
    return CoIdealReport(se, left, right, se and left and right, se and sub)


@dataclass(frozen=True)
class ReesResult:
    Q: SemigroupWithApartness
    kappa: FiniteRelation
    rees_congruence: FiniteRelation
    ideal: FiniteSubset


def rees_factor(s: SemigroupWithApartness, subset: FiniteSubset) -> ReesResult:
    """Factor by the ideal complementary to a co-ideal, apartness kappa_A."""
    if not co_ideal_check(subset, s).co_ideal:
        raise PreconditionError("subset is not a co-ideal")
    inside = subset.mask
    ideal = ~subset
    if ideal != s.setoid.complement_of(subset):
        raise InvariantViolation("complement of a co-ideal differs from its apartness complement")
    rho = s.eq | FiniteRelation._wrap(ideal.mask[:, None] & ideal.mask[None, :])
    kappa = s.apt & FiniteRelation._wrap(inside[:, None] | inside[None, :])
    if not rho <= ~kappa:
        raise InvariantViolation("Rees congruence meets kappa_A")
    q = quotient(s, rho, kappa).Q
    return ReesResult(q, kappa, rho, ideal)


def is_group(s: SemigroupWithApartness) -> bool:
    """Every row and every column of the table meets every eq-class.

    The empty semigroup has no identity and is not a group.
    """
    n = s.n
    if n == 0:
        return False
    eq = s.eq.matrix
    reps = class_representatives(s.eq)
    cls = eq[:, reps].argmax(axis=1)
    k = len(reps)
    rows = np.zeros((n, k), dtype=bool)
    rows[np.arange(n)[:, None], cls[s.table]] = True
    cols = np.zeros((n, k), dtype=bool)
    cols[np.arange(n)[:, None], cls[s.table.T]] = True
    return bool(rows.all() and cols.all())


def restrict(s: SemigroupWithApartness, members: list[int]) -> Optional[SemigroupWithApartness]:
    """Subsemigroup on the given indices, or None if they are not closed."""
    idx = np.array(members, dtype=np.int64)
    pos = {int(x): i for i, x in enumerate(members)}
    sub = s.table[idx[:, None], idx[None, :]]
    if not all(int(v) in pos for v in sub.ravel()):
        return None
    table = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub) if sub.size else sub
    eq = s.eq.matrix[idx[:, None], idx[None, :]]
    apt = s.apt.matrix[idx[:, None], idx[None, :]]
    return SemigroupWithApartness(FiniteSetoid(FiniteRelation(eq), FiniteRelation(apt)), table)

