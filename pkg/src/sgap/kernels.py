"""Kernel operators: cotransitive kernel, coequivalence kernel, fine apartness.

The cotransitive kernel of a relation is the intersection of its filled
powers. On an n-element carrier the running intersection stops changing after
at most n + 2 powers, so the iteration stops at the first repeat.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import InvariantViolation, PreconditionError, SgapError
from .relations import FiniteRelation, FiniteSetoid, classify_relation, filled_product


@dataclass(frozen=True)
class KernelResult:
    kernel: FiniteRelation
    # least k where intersecting powers 1..k equals intersecting powers 1..k+1
    fixpoint_step: int


def filled_power(alpha: FiniteRelation, k: int) -> FiniteRelation:
    if k < 1:
        raise PreconditionError(f"filled power needs k >= 1, got {k}")
    power = alpha
    for _ in range(k - 1):
        power = filled_product(alpha, power)
    return power


def cotransitive_kernel(alpha: FiniteRelation) -> KernelResult:
    n = alpha.n
    power = alpha
    running = alpha
    for step in range(1, n + 3):
        power = filled_product(alpha, power)
        nxt = running & power
        if nxt == running:
            return KernelResult(running, step)
        running = nxt
    raise InvariantViolation(f"filled powers did not stabilise within {n + 2} steps")


def _cotransitive_pairs(pairs: frozenset, n: int) -> bool:
    return all((x, y) in pairs or (y, z) in pairs for (x, z) in pairs for y in range(n))


def cotransitive_kernel_oracle(alpha: FiniteRelation, strategy: str = "auto") -> FiniteRelation:
    """Greatest cotransitive subrelation, found without filled products.

    ``subsets`` unions every cotransitive subset of alpha (n <= 3 only).
    ``removal`` deletes pairs that break cotransitivity until none do.
    """
    n = alpha.n
    if strategy == "auto":
        strategy = "subsets" if n <= 3 else "removal"
    members = alpha.pairs()
    if strategy == "subsets":
        if n > 3:
            raise PreconditionError("subset enumeration is limited to n <= 3")
        kept = set()
        for choice in product((False, True), repeat=len(members)):
            sub = frozenset(p for p, c in zip(members, choice) if c)
            if _cotransitive_pairs(sub, n):
                kept |= sub
        return FiniteRelation.from_pairs(n, kept)
    if strategy == "removal":
        current = set(members)
        while True:
            bad = {
                (x, z) for (x, z) in current
                if any((x, y) not in current and (y, z) not in current for y in range(n))
            }
            if not bad:
                return FiniteRelation.from_pairs(n, current)
            current -= bad
    raise SgapError(f"unknown oracle strategy {strategy!r}")


def coequivalence_kernel(alpha: FiniteRelation, ctx: FiniteSetoid) -> FiniteRelation:
    return cotransitive_kernel(alpha & alpha.inverse() & ctx.apt).kernel


def fine_apartness(eq: FiniteRelation) -> FiniteRelation:
    """Cotransitive kernel of the complement of eq."""
    ident = FiniteSetoid(FiniteRelation.identity(eq.n), FiniteRelation.empty(eq.n))
    if not classify_relation(eq, ident).equivalence:
        raise PreconditionError("fine apartness needs an equivalence")
    return cotransitive_kernel(~eq).kernel


def hamming2_relation(k: int) -> FiniteRelation:
    """Pairs of k-bit words at Hamming distance at least 2. Bit i is coordinate i."""
    if not 1 <= k <= 12:
        raise PreconditionError(f"hamming cube dimension must be in 1..12, got {k}")
    words = np.arange(1 << k, dtype=np.uint16)
    dist = np.bitwise_count(words[:, None] ^ words[None, :])
    return FiniteRelation(dist >= 2)
