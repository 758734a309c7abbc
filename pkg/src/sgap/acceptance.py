"""Property and oracle sweeps backing ``sgap oracle``.

Each suite returns a SuiteResult; ``passed`` requires both the property and
the time budget to hold.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import product

import numpy as np

from . import brute
from .corpus import family_corpus, full_corpus, is_discrete
from .families import family_semigroup
from .free import all_words, extend_morphism
from .green import (
    co_subsemigroup_check,
    green_relations,
    h_class_group_test,
    h_classes,
    idempotent_separating,
)
from .kernels import cotransitive_kernel, cotransitive_kernel_oracle, filled_power, hamming2_relation
from .errors import PreconditionError
from .relations import (
    FiniteRelation,
    FiniteSetoid,
    FiniteSubset,
    classify_apartness,
    equivalence_closure,
    filled_product,
)
from .semigroup import (
    co_congruence_kernel,
    co_ideal_check,
    coarse_quotient,
    congruence_closure,
    idempotents_and_C,
    is_regular,
    rees_factor,
    regularity,
)
from .sgapfile import SgapDocument, emit_sgap, parse_sgap

SEED = 20240917


@dataclass(frozen=True)
class SuiteResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"[{verdict}] {self.number:2d} {self.name}: {self.detail} "
                f"({self.seconds:.2f}s, budget {self.budget:g}s)")


SUITES = {}


def suite(number, name, budget):
    def register(fn):
        SUITES[name] = (number, budget, fn)
        return fn
    return register


def run_suite(name: str) -> SuiteResult:
    number, budget, fn = SUITES[name]
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    if ok and elapsed > budget:
        detail += "; over time budget"
    return SuiteResult(number, name, ok and elapsed <= budget, detail, elapsed, budget)


def suite_names(upto: int = 14) -> list[str]:
    return sorted((n for n in SUITES if SUITES[n][0] <= upto), key=lambda n: SUITES[n][0])


def _random_relation(rng, n, p=None):
    p = rng.uniform(0.1, 0.9) if p is None else p
    return FiniteRelation(rng.random((n, n)) < p)


def _relation_from_bits(n, bits):
    return FiniteRelation(np.array([(bits >> i) & 1 for i in range(n * n)], dtype=bool).reshape(n, n))


@suite(1, "kernel_oracle", 5)
def kernel_oracle():
    bad = []
    for bits in range(512):
        alpha = _relation_from_bits(3, bits)
        res = cotransitive_kernel(alpha)
        if res.kernel != cotransitive_kernel_oracle(alpha, "subsets") or res.fixpoint_step > 5:
            bad.append(bits)
    return not bad, f"512 relations on 3 points, {len(bad)} mismatches"


@suite(2, "shortness", 10)
def shortness():
    rng = np.random.default_rng(SEED)
    worst = {}
    bad = 0
    for n in range(2, 7):
        worst[n] = 0
        for _ in range(1000):
            alpha = _random_relation(rng, n)
            res = cotransitive_kernel(alpha)
            worst[n] = max(worst[n], res.fixpoint_step)
            if res.fixpoint_step > n + 2 or not res.kernel <= alpha:
                bad += 1
    spread = ", ".join(f"n={n}: max step {k}" for n, k in worst.items())
    return bad == 0, f"5000 relations, {bad} over bound; {spread}"


@suite(3, "filled_product_laws", 10)
def filled_product_laws():
    rng = np.random.default_rng(SEED + 3)
    failures = {}

    def fail(law):
        failures[law] = failures.get(law, 0) + 1

    for n in range(2, 6):
        ident = FiniteRelation.identity(n)
        for _ in range(1000):
            a, b, c = (_random_relation(rng, n) for _ in range(3))
            ab = filled_product(a, b)
            pa, pb = brute.pair_set(a), brute.pair_set(b)
            if brute.pair_set(ab) != brute.filled(pa, pb, n):
                fail("direct evaluation")
            # 1: complements turn composition into the filled product
            lhs = filled_product(~a, ~b)
            full = {(x, y) for x in range(n) for y in range(n)}
            if brute.pair_set(lhs) != full - brute.compose(pa, pb, n):
                fail("item 1")
            # 2: inverse reverses the factors
            if ab.inverse() != filled_product(b.inverse(), a.inverse()):
                fail("item 2")
            # 3: an irreflexive factor bounds the product by the other factor
            ai, bi = a - ident, b - ident
            if not filled_product(ai, b) <= b or not filled_product(a, bi) <= a:
                fail("item 3")
            # 4: cotransitivity is containment in the filled square
            for r in (a, cotransitive_kernel(a).kernel):
                if brute.is_cotransitive(brute.pair_set(r), n) != (r <= filled_product(r, r)):
                    fail("item 4")
            # 6: monotone in both factors
            g, d = a | _random_relation(rng, n), b | _random_relation(rng, n)
            if not ab <= filled_product(g, d):
                fail("item 6")
            if filled_product(a, filled_product(b, c)) != filled_product(ab, c):
                fail("associativity")
    detail = "4000 triples" + ("" if not failures else f"; failures {failures}")
    return not failures, detail


@suite(4, "green_consistency", 120)
def green_consistency():
    bad = []
    members = full_corpus()
    for name, s in members:
        g = green_relations(s)
        ok = (g.D == g.L @ g.R == g.R @ g.L == equivalence_closure(g.L | g.R, s.eq)
              and g.D == g.J)
        if ok and s.n <= 3:
            leq = brute.green_preorders(s)
            ok = (brute.pair_set(g.leqL), brute.pair_set(g.leqR), brute.pair_set(g.leqJ)) == leq
        if not ok:
            bad.append(name)
    return not bad, f"{len(members)} semigroups, {len(bad)} failures {bad[:3]}"


@suite(5, "cogreen_duality", 120)
def cogreen_duality():
    bad = []
    members = full_corpus()
    discrete = 0
    for name, s in members:
        g = green_relations(s)
        ok = filled_product(g.coR, g.coL) == filled_product(g.coL, g.coR) and g.coD == g.coJ
        if is_discrete(s):
            discrete += 1
            ok = ok and g.coL == ~g.L and g.coR == ~g.R and g.coJ == ~g.J and g.coD == ~g.D
        ok = ok and g.succ_l == s.setoid.complement_of_relation(g.leqL)
        if not ok:
            bad.append(name)
    return not bad, f"{len(members)} semigroups ({discrete} discrete), {len(bad)} failures {bad[:3]}"


@suite(6, "greens_theorem", 30)
def greens_theorem():
    bad, groups, checked = [], 0, 0
    for spec in ("fulltransform:2", "fulltransform:3"):
        s = family_semigroup(spec)
        g = green_relations(s)
        idem = idempotents_and_C(s).E
        t = s.table
        for h in h_classes(g):
            idx = np.array(h.indices())
            inhabited = h.mask[t[idx[:, None], idx[None, :]]].any()
            verdict = h_class_group_test(s, h, g)
            checked += 1
            groups += bool(verdict)
            if inhabited != bool(verdict) or (not (h & idem).is_empty() and not verdict):
                bad.append((spec, h.indices(), verdict.reason))
    return not bad, f"{checked} H-classes, {groups} groups, {len(bad)} failures {bad[:2]}"


def _small_members(max_n=3):
    return [(name, s) for name, s in full_corpus() if s.n <= max_n]


@suite(7, "cocongruence_maximality", 120)
def cocongruence_maximality():
    rng = np.random.default_rng(SEED + 7)
    bad, count = [], 0
    for name, s in _small_members():
        n = s.n
        masks = [sum(1 << (x * n + y) for x, y in c) for c in brute.co_congruences(s)]
        total = 1 << (n * n)
        sample = range(total) if total <= 200 else rng.choice(total, 200, replace=False)
        for bits in sample:
            bits = int(bits)
            alpha = _relation_from_bits(n, bits)
            union = 0
            for m in masks:
                if m & ~bits == 0:
                    union |= m
            count += 1
            if co_congruence_kernel(alpha, s) != _relation_from_bits(n, union):
                bad.append((name, bits))
    return not bad, f"{count} relations, {len(bad)} mismatches {bad[:3]}"


@suite(8, "rees_soundness", 60)
def rees_soundness():
    bad, factors = [], 0
    for name, s in full_corpus():
        if s.n > 5:
            continue
        for bits in range(1 << s.n):
            subset = FiniteSubset([(bits >> i) & 1 for i in range(s.n)])
            if not co_ideal_check(subset, s).co_ideal:
                continue
            try:
                res = rees_factor(s, subset)
            except Exception as exc:  # any failure is a counterexample
                bad.append((name, bits, repr(exc)))
                continue
            factors += 1
            if not res.rees_congruence <= ~res.kappa:
                bad.append((name, bits, "overlap"))
    return not bad, f"{factors} co-ideals factored, {len(bad)} failures {bad[:2]}"


@suite(9, "hamming_stress", 10)
def hamming_stress():
    problems = []
    for k in range(1, 5):
        alpha = hamming2_relation(k)
        if not cotransitive_kernel(alpha).kernel.is_empty():
            problems.append(f"kernel k={k}")
        if k <= 3:
            words = np.arange(1 << k)
            dist = np.bitwise_count(words[:, None] ^ words[None, :])
            for d in range(1, k + 2):
                if filled_power(alpha, d) != FiniteRelation(dist >= d + 1):
                    problems.append(f"power k={k} d={d}")
    start = time.perf_counter()
    res = cotransitive_kernel(hamming2_relation(8))
    big = time.perf_counter() - start
    if not res.kernel.is_empty():
        problems.append("kernel k=8")
    if big >= 10:
        problems.append("k=8 too slow")
    return not problems, f"k<=4 kernels empty, powers checked; k=8 in {big:.2f}s step {res.fixpoint_step} {problems}"


def _regular_members():
    return [(name, s) for name, s in full_corpus() if is_regular(s)]


@suite(10, "idempotent_structure", 120)
def idempotent_structure():
    bad, members = [], _regular_members()
    for name, s in members:
        data = idempotents_and_C(s)
        ok = s.setoid.complement_of(data.E) == data.C
        t, apt = s.table, s.apt.matrix
        for a in range(s.n):
            sq = t[a, a]
            for x in regularity(s, sq).inverses.indices():
                axa = t[t[a, x], a]
                # co-Lallement for the apartness, and its idempotent reading
                if apt[a, axa] and not apt[a, sq]:
                    ok = False
                if not (a in data.C) == bool(apt[a, axa]) == bool(apt[a, sq]):
                    ok = False
        if not ok:
            bad.append(name)
    return not bad, f"{len(members)} regular semigroups, {len(bad)} failures {bad[:3]}"


@suite(11, "idempotent_separating", 120)
def idempotent_separating_suite():
    rng = np.random.default_rng(SEED + 11)
    bad, n_cong, n_co = [], 0, 0
    for name, s in _small_members():
        if not is_regular(s):
            continue
        g = green_relations(s)
        congruences = {s.eq}
        for _ in range(100):
            congruences.add(congruence_closure(_random_relation(rng, s.n, rng.uniform(0, 0.3)), s))
        cocongruences = [FiniteRelation.from_pairs(s.n, c) for c in brute.co_congruences(s)]
        for rho in congruences:
            n_cong += 1
            if not idempotent_separating(s, rho, "congruence", g).agree:
                bad.append((name, "cong", rho.pairs()))
        for kappa in cocongruences:
            n_co += 1
            if not idempotent_separating(s, kappa, "co-congruence", g).agree:
                bad.append((name, "co", kappa.pairs()))
        for e in idempotents_and_C(s).E:
            if not co_subsemigroup_check(s, e, g):
                bad.append((name, "co-subsemigroup", e))
    return not bad, f"{n_cong} congruences, {n_co} co-congruences, {len(bad)} failures {bad[:2]}"


@suite(12, "tightening", 120)
def tightening():
    bad, members = [], full_corpus()
    empty_apt = 0
    for name, s in members:
        empty_apt += s.apt.is_empty()
        q = coarse_quotient(s)
        if not classify_apartness(q.apt, q.eq).tight:
            bad.append(name)
    return not bad, f"{len(members)} semigroups ({empty_apt} with empty apartness), {len(bad)} failures"


@suite(13, "free_extension", 30)
def free_extension():
    setoids = [FiniteSetoid.discrete(2),
               FiniteSetoid(FiniteRelation.identity(2), FiniteRelation.empty(2))]
    samples = [all_words(x, 4) for x in setoids]
    bad, maps = [], 0
    for name, s in full_corpus():
        if s.n > 4 or s.n == 0:
            continue
        for x, words in zip(setoids, samples):
            for f in product(range(s.n), repeat=2):
                try:
                    values = extend_morphism(f, words, s)
                except PreconditionError:
                    continue  # f not strongly extensional for this generator setoid
                except Exception as exc:
                    bad.append((name, f, repr(exc)))
                    continue
                maps += 1
                # a morphism is forced letter by letter from the right as well
                right = {}
                for w in sorted(words, key=len):
                    tail = w.letters[1:]
                    right[w.letters] = f[w.letters[0]] if not tail else s.mul(f[w.letters[0]], right[tail])
                if any(not s.eq.matrix[v, right[w.letters]] for w, v in zip(words, values)):
                    bad.append((name, f, "not unique"))
                if values[:2] != list(f):
                    bad.append((name, f, "letters"))
    return not bad, f"{maps} generator maps over words of length <= 4, {len(bad)} failures {bad[:2]}"


@suite(14, "cli_roundtrip", 60)
def cli_roundtrip():
    rng = np.random.default_rng(SEED + 14)
    docs = [SgapDocument.from_semigroup(s, name) for name, s in family_corpus()[:20]]
    pool = full_corpus()
    for i in rng.choice(len(pool), 50 - len(docs), replace=False):
        name, s = pool[int(i)]
        docs.append(SgapDocument.from_semigroup(s, name))
    bad = [d.name for d in docs if parse_sgap(emit_sgap(d)) != d
           or emit_sgap(parse_sgap(emit_sgap(d))) != emit_sgap(d)]
    return not bad, f"{len(docs)} documents, {len(bad)} round-trip failures {bad[:3]}"
