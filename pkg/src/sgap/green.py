"""Green's relations and their apartness counterparts.

Principal ideals are first computed as raw membership matrices, e.g.
``mem[b, c]`` says c = s b for some s in S^1. The classical preorders hold
when a is eq to such a c; the co-preorders hold when a is apart from every c.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .errors import IndexOutOfRange, InvariantViolation, PreconditionError
from .relations import FiniteRelation, FiniteSubset, _count, equivalence_closure, filled_product
from .semigroup import (
    SemigroupWithApartness,
    class_representatives,
    classify_compatibility,
    co_ideal_check,
    idempotents_and_C,
    is_group,
    restrict,
)


def _principal_ideals(s: SemigroupWithApartness, side: str) -> np.ndarray:
    n = s.n
    t1 = s.monoid_table
    mem = np.zeros((n, n), dtype=bool)
    b = np.arange(n)
    if side == "left":
        mem[b[None, :], t1[:, :n]] = True
    elif side == "right":
        mem[b[:, None], t1[:n, :]] = True
    else:
        mem[b[None, :, None], s.translates] = True
    return mem


def _preorders(s: SemigroupWithApartness):
    eq = s.eq.matrix
    near = ~s.apt.matrix
    leq, succ = {}, {}
    for side in ("left", "right", "two-sided"):
        mem_t = _principal_ideals(s, side).T  # [c, b]
        leq[side] = FiniteRelation._wrap(_count(eq, mem_t) > 0)
        succ[side] = FiniteRelation._wrap(_count(near, mem_t) == 0)
    return leq, succ


@dataclass(frozen=True)
class CoGreenQuasiorders:
    succ_l: FiniteRelation
    succ_r: FiniteRelation
    succ_j: FiniteRelation


def co_green_quasiorders(s: SemigroupWithApartness) -> CoGreenQuasiorders:
    """a succ_l b iff a is apart from every sb with s in S^1 (likewise r, j)."""
    _, succ = _preorders(s)
    return CoGreenQuasiorders(succ["left"], succ["right"], succ["two-sided"])


@dataclass(frozen=True)
class CoGreenRelations:
    coL: FiniteRelation
    coR: FiniteRelation
    coJ: FiniteRelation
    coH: FiniteRelation
    coD: FiniteRelation


def _co_relations(s: SemigroupWithApartness, q: CoGreenQuasiorders) -> CoGreenRelations:
    coL = q.succ_l | q.succ_l.inverse()
    coR = q.succ_r | q.succ_r.inverse()
    coJ = q.succ_j | q.succ_j.inverse()
    coH = coL | coR
    coD = filled_product(coL, coR)
    if filled_product(coR, coL) != coD:
        raise InvariantViolation("coR * coL differs from coL * coR")
    if not (coJ <= coD <= (coL & coR) and (coL & coR) <= coH):
        raise InvariantViolation("co-Green inclusions fail")
    return CoGreenRelations(coL, coR, coJ, coH, coD)


def co_green_relations(s: SemigroupWithApartness) -> CoGreenRelations:
    return _co_relations(s, co_green_quasiorders(s))


@dataclass(frozen=True)
class DClass:
    # rows are R-classes, columns L-classes, cells H-class members
    rows: list

    def members(self) -> list[int]:
        return sorted(x for row in self.rows for cell in row for x in cell)


@dataclass(frozen=True)
class EggBox:
    d_classes: list

    def to_json(self) -> dict:
        return {"d_classes": [{"rows": d.rows} for d in self.d_classes]}


def _classes(rel: np.ndarray, within: list[int]) -> list[list[int]]:
    out, seen = [], set()
    for x in within:
        if x in seen:
            continue
        cls = [y for y in within if rel[x, y]]
        seen.update(cls)
        out.append(cls)
    return out


def _eggbox(L: FiniteRelation, R: FiniteRelation, D: FiniteRelation) -> EggBox:
    dcls = _classes(D.matrix, list(range(D.n)))
    boxes = []
    for members in dcls:
        rows = _classes(R.matrix, members)
        cols = _classes(L.matrix, members)
        grid = [[sorted(set(r) & set(c)) for c in cols] for r in rows]
        boxes.append(DClass(grid))
    return EggBox(boxes)


@dataclass(frozen=True)
class GreenData:
    leqL: FiniteRelation
    leqR: FiniteRelation
    leqJ: FiniteRelation
    L: FiniteRelation
    R: FiniteRelation
    J: FiniteRelation
    H: FiniteRelation
    D: FiniteRelation
    succ_l: FiniteRelation
    succ_r: FiniteRelation
    succ_j: FiniteRelation
    coL: FiniteRelation
    coR: FiniteRelation
    coJ: FiniteRelation
    coH: FiniteRelation
    coD: FiniteRelation
    eggbox: EggBox = field(repr=False)


def green_relations(s: SemigroupWithApartness) -> GreenData:
    leq, succ = _preorders(s)
    leqL, leqR, leqJ = leq["left"], leq["right"], leq["two-sided"]
    L = leqL & leqL.inverse()
    R = leqR & leqR.inverse()
    J = leqJ & leqJ.inverse()
    H = L & R
    D = L @ R
    if D != R @ L:
        raise InvariantViolation("L R and R L differ")
    if D != equivalence_closure(L | R, s.eq):
        raise InvariantViolation("L R is not the join of L and R")
    q = CoGreenQuasiorders(succ["left"], succ["right"], succ["two-sided"])
    co = _co_relations(s, q)
    return GreenData(
        leqL, leqR, leqJ, L, R, J, H, D,
        q.succ_l, q.succ_r, q.succ_j,
        co.coL, co.coR, co.coJ, co.coH, co.coD,
        _eggbox(L, R, D),
    )


def periodic_dj_check(s: SemigroupWithApartness) -> bool:
    co = co_green_relations(s)
    return co.coD == co.coJ


@dataclass(frozen=True)
class HClassVerdict:
    is_group: bool
    reason: str

    def __bool__(self):
        return self.is_group


def h_class_group_test(s: SemigroupWithApartness, h: FiniteSubset,
                       green: Optional[GreenData] = None) -> HClassVerdict:
    green = green or green_relations(s)
    members = h.indices()
    if not members or h != green.H.row(members[0]):
        raise PreconditionError("subset is not an H-class")
    inside = h.mask
    idx = np.array(members)
    if not inside[s.table[idx[:, None], idx[None, :]]].any():
        return HClassVerdict(False, "H meets H^2 in no element")
    sub = restrict(s, members)
    if sub is None:
        return HClassVerdict(False, "H is not closed under multiplication")
    if not is_group(sub):
        return HClassVerdict(False, "restricted table is not a group")
    return HClassVerdict(True, "group")


def h_classes(green: GreenData) -> list[FiniteSubset]:
    return [green.H.row(x) for x in class_representatives(green.H)]


def regular_class_inverse(s: SemigroupWithApartness, a: int, e: int, f: int,
                          green: Optional[GreenData] = None) -> int:
    """Inverse a* of a with a a* = e and a* a = f, built as y e."""
    for x in (a, e, f):
        if not 0 <= x < s.n:
            raise IndexOutOfRange(f"element {x} outside carrier of size {s.n}")
    green = green or green_relations(s)
    eq, t = s.eq.matrix, s.table
    idem = idempotents_and_C(s).E
    if e not in idem or f not in idem:
        raise PreconditionError("e and f must be idempotents")
    if (e, a) not in green.R or (f, a) not in green.L:
        raise PreconditionError("need e R a and f L a")
    xs = np.flatnonzero(eq[t[a], e])
    ys = np.flatnonzero(eq[t[:, a], f])
    if not xs.size or not ys.size:
        raise InvariantViolation("no solution of a x = e or y a = f")
    inv = s.mul(int(ys[0]), e)
    ok = (
        eq[t[a, inv], e] and eq[t[inv, a], f]
        and eq[t[t[a, inv], a], a] and eq[t[t[inv, a], inv], inv]
        and (inv, e) in green.L and (inv, f) in green.R
    )
    if not ok:
        raise InvariantViolation(f"constructed inverse {inv} fails its postcondition")
    return inv


@dataclass(frozen=True)
class SeparationReport:
    definitional: bool
    characterization: bool
    regular: bool

    @property
    def agree(self) -> bool:
        return self.definitional == self.characterization


def idempotent_separating(s: SemigroupWithApartness, rel: FiniteRelation, kind: str,
                          green: Optional[GreenData] = None) -> SeparationReport:
    from .semigroup import is_regular

    report = classify_compatibility(rel, s)
    idem = idempotents_and_C(s).E.mask
    pair = idem[:, None] & idem[None, :]
    green = green or green_relations(s)
    if kind == "congruence":
        if not (report.congruence and s.eq <= rel):
            raise PreconditionError("relation is not a congruence")
        definitional = not (rel.matrix & pair & ~s.eq.matrix).any()
        characterization = rel <= green.H
    elif kind == "co-congruence":
        if not report.co_congruence:
            raise PreconditionError("relation is not a co-congruence")
        definitional = not (s.apt.matrix & pair & ~rel.matrix).any()
        characterization = green.coH <= rel
    else:
        raise PreconditionError(f"unknown relation kind {kind!r}")
    return SeparationReport(bool(definitional), bool(characterization), is_regular(s))


def co_subsemigroup_check(s: SemigroupWithApartness, e: int,
                          green: Optional[GreenData] = None) -> bool:
    if not 0 <= e < s.n:
        raise IndexOutOfRange(f"element {e} outside carrier of size {s.n}")
    if e not in idempotents_and_C(s).E:
        raise PreconditionError(f"{e} is not an idempotent")
    green = green or green_relations(s)
    return co_ideal_check(green.coH.row(e), s).co_subsemigroup


def eggbox_dot(s: SemigroupWithApartness, green: Optional[GreenData] = None) -> str:
    green = green or green_relations(s)
    lines = ["digraph eggbox {", "  node [shape=box];"]
    for i, d in enumerate(green.eggbox.d_classes):
        lines.append(f"  subgraph cluster_d{i} {{")
        lines.append(f'    label="D{i}";')
        for r, row in enumerate(d.rows):
            for c, cell in enumerate(row):
                h = FiniteSubset.from_indices(s.n, cell)
                border = ", peripheries=2" if h_class_group_test(s, h, green) else ""
                label = " ".join(map(str, cell))
                lines.append(f'    d{i}_{r}_{c} [label="{label}"{border}];')
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
