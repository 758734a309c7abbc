"""Reading and writing ``.sgap`` documents.

::

    # comment
    name leftzero:2
    n 2
    table
    0 0
    1 1
    eq 0 1        optional, closed to an equivalence
    apt 0 1       optional, symmetrised; ``apt none`` means empty

Without apt lines the apartness is the complement of eq.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import SgapError
from .relations import FiniteRelation, FiniteSetoid, equivalence_closure
from .semigroup import SemigroupWithApartness


class SgapSyntaxError(SgapError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


@dataclass(frozen=True)
class SgapDocument:
    n: int
    table: tuple
    eq: FiniteRelation
    apt: FiniteRelation
    name: str = ""

    def semigroup(self) -> SemigroupWithApartness:
        return SemigroupWithApartness(FiniteSetoid(self.eq, self.apt), self.table)

    @classmethod
    def from_semigroup(cls, s: SemigroupWithApartness, name: str = "") -> "SgapDocument":
        table = tuple(tuple(int(v) for v in row) for row in s.table)
        return cls(s.n, table, s.eq, s.apt, name)


def _ints(tokens, line_no, count=None):
    try:
        vals = [int(t) for t in tokens]
    except ValueError:
        raise SgapSyntaxError(line_no, f"expected integers, got {' '.join(tokens)!r}") from None
    if count is not None and len(vals) != count:
        raise SgapSyntaxError(line_no, f"expected {count} integers, got {len(vals)}")
    return vals


def parse_sgap(text: str, validate: bool = True) -> SgapDocument:
    n = None
    rows = None
    name = ""
    eq_pairs, apt_pairs = [], []
    apt_given = False
    pending = 0
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if pending:
            rows.append(_ints(tokens, line_no, n))
            pending -= 1
            continue
        key, args = tokens[0], tokens[1:]
        if key == "name":
            name = " ".join(args)
        elif key == "n":
            if n is not None:
                raise SgapSyntaxError(line_no, "duplicate n")
            (n,) = _ints(args, line_no, 1)
            if n < 0:
                raise SgapSyntaxError(line_no, "n must be non-negative")
        elif key == "table":
            if n is None:
                raise SgapSyntaxError(line_no, "table before n")
            if rows is not None or args:
                raise SgapSyntaxError(line_no, "malformed or duplicate table")
            rows, pending = [], n
        elif key in ("eq", "apt"):
            if n is None:
                raise SgapSyntaxError(line_no, f"{key} before n")
            if key == "apt" and args == ["none"]:
                apt_given = True
                continue
            i, j = _ints(args, line_no, 2)
            if not (0 <= i < n and 0 <= j < n):
                raise SgapSyntaxError(line_no, f"index out of range in {key} {i} {j}")
            (eq_pairs if key == "eq" else apt_pairs).append((i, j))
            apt_given |= key == "apt"
        else:
            raise SgapSyntaxError(line_no, f"unknown directive {key!r}")
    if pending:
        raise SgapSyntaxError(line_no if text else 0, f"table is missing {pending} rows")
    if n is None or rows is None:
        raise SgapSyntaxError(0, "document needs n and table")
    for r, row in enumerate(rows):
        if any(not 0 <= v < n for v in row):
            raise SgapSyntaxError(0, f"table row {r} has an entry out of range")
    eq = equivalence_closure(FiniteRelation.from_pairs(n, eq_pairs), FiniteRelation.identity(n))
    if apt_given:
        apt = FiniteRelation.from_pairs(n, apt_pairs)
        apt = apt | apt.inverse()
    else:
        apt = ~eq
    doc = SgapDocument(n, tuple(tuple(r) for r in rows), eq, apt, name)
    if validate:
        doc.semigroup()
    return doc


def emit_sgap(doc: SgapDocument) -> str:
    out = []
    if doc.name:
        out.append(f"name {doc.name}")
    out.append(f"n {doc.n}")
    out.append("table")
    out.extend(" ".join(str(v) for v in row) for row in doc.table)
    out.extend(f"eq {i} {j}" for i, j in doc.eq.pairs() if i < j)
    if doc.apt != ~doc.eq:
        if doc.apt.is_empty():
            out.append("apt none")
        out.extend(f"apt {i} {j}" for i, j in doc.apt.pairs() if i < j)
    return "\n".join(out) + "\n"


def table_array(doc: SgapDocument) -> np.ndarray:
    return np.array(doc.table, dtype=np.int64).reshape(doc.n, doc.n)
