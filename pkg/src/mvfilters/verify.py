"""Statement registry and batch verification runner.

Every checkable statement of the calculus carries a stable identifier
(e.g. ``prop:inclOne``); the runner evaluates each one exhaustively on a
finite algebra, or with seeded randomised suites on the dense chain, and
collects witnesses for any failure.  Reports are deterministic given
(algebra, scope, seed).
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations

from . import calculus, densechain as dc, filters, spectra
from .core import (
    MvAlgebra,
    check_mv_axioms,
    is_linear,
    iter_mask,
    quotient_by,
)
from .errors import InvalidArgument, InvariantViolation, MvError


@dataclass
class StatementResult:
    id: str
    status: str  # pass | fail | skip
    detail: str = ""
    witnesses: list = field(default_factory=list)
    elapsed: float = 0.0


@dataclass
class Report:
    target: str
    seed: int
    results: list[StatementResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(r.status != "fail" for r in self.results)

    def to_text(self) -> str:
        lines = [f"target: {self.target}    seed: {self.seed}"]
        for r in self.results:
            line = f"{r.id:<24} {r.status:<5} ({r.elapsed:.3f}s)"
            if r.detail:
                line += f"  {r.detail}"
            lines.append(line)
            for w in r.witnesses[:5]:
                lines.append(f"    witness: {w}")
        n_fail = sum(1 for r in self.results if r.status == "fail")
        lines.append(
            f"{len(self.results)} statements, "
            f"{sum(1 for r in self.results if r.status == 'pass')} passed, "
            f"{n_fail} failed, "
            f"{sum(1 for r in self.results if r.status == 'skip')} skipped"
        )
        return "\n".join(lines)

    def to_json(self) -> str:
        return json.dumps(
            {
                "target": self.target,
                "seed": self.seed,
                "ok": self.ok,
                "results": [
                    {
                        "id": r.id,
                        "status": r.status,
                        "detail": r.detail,
                        "witnesses": [str(w) for w in r.witnesses],
                    }
                    for r in self.results
                ],
            },
            indent=2,
            sort_keys=True,
        )


class Ctx:
    """Cached enumerations for one finite algebra."""

    def __init__(self, a: MvAlgebra):
        self.a = a
        self.lattice = filters.enumerate_lattice_filters(a)
        self.primes = [m for m in self.lattice if filters.is_prime_lattice_filter(a, m)]
        self.impl = filters.enumerate_implication_filters(a)
        self.prime_impl = [
            m for m in self.impl if filters.is_prime_implication_filter(a, m)
        ]
        self.linear = is_linear(a)

    def show(self, mask: int) -> str:
        return self.a.label_set(mask)


FINITE_STATEMENTS: dict[str, tuple[str, callable]] = {}
DENSE_STATEMENTS: dict[str, tuple[str, callable]] = {}


def finite(stmt_id: str, blurb: str):
    def deco(fn):
        FINITE_STATEMENTS[stmt_id] = (blurb, fn)
        return fn

    return deco


def dense(stmt_id: str, blurb: str):
    def deco(fn):
        DENSE_STATEMENTS[stmt_id] = (blurb, fn)
        return fn

    return deco


def _nested_prime_pairs(ctx: Ctx):
    for f in ctx.primes:
        for g in ctx.primes:
            if f & ~g == 0:
                yield f, g


# ---------------------------------------------------------------------------
# structural statements


@finite("axioms:mv", "operation tables satisfy every MV axiom")
def _axioms(ctx, out):
    rep = check_mv_axioms(ctx.a)
    if not rep.ok:
        out.extend(rep.failures)


@finite("order:partial", "derived order is a partial order, total on chains")
def _order(ctx, out):
    a = ctx.a
    for x in range(a.size):
        if not a.leq(x, x):
            out.append(("reflexivity", x))
        for y in range(a.size):
            if a.leq(x, y) and a.leq(y, x) and x != y:
                out.append(("antisymmetry", x, y))
            for z in range(a.size):
                if a.leq(x, y) and a.leq(y, z) and not a.leq(x, z):
                    out.append(("transitivity", x, y, z))


@finite("identity:otimes-imp", "negated implication equals truncated product")
def _otimes_imp(ctx, out):
    a = ctx.a
    for x in range(a.size):
        for y in range(a.size):
            if a.neg[a.imp[x][y]] != a.otimes[x][a.neg[y]]:
                out.append(("neg-imp", x, y))
            if a.neg[a.imp[x][a.neg[y]]] != a.otimes[x][y]:
                out.append(("neg-imp-neg", x, y))


@finite("enum:crosscheck", "filter enumeration matches a naive power-set scan")
def _enum_crosscheck(ctx, out):
    a = ctx.a
    if a.size > 12:
        return "skip"
    naive = [
        m for m in range(1 << a.size) if filters.is_lattice_filter(a, m)
    ]
    if naive != ctx.lattice:
        out.append(("lattice filter lists differ", len(naive), len(ctx.lattice)))
    naive_impl = [
        m for m in range(1 << a.size) if filters.is_implication_filter(a, m)
    ]
    if naive_impl != ctx.impl:
        out.append(("implication filter lists differ",))


@finite("impl:lattice-otimes", "implication filters = ⊗-closed lattice filters with 1")
def _impl_vs_lattice(ctx, out):
    a = ctx.a
    if a.size > 12:
        return "skip"
    for m in range(1, 1 << a.size):
        lhs = filters.is_implication_filter(a, m)
        rhs = (
            filters.is_lattice_filter(a, m)
            and (m >> a.one) & 1
            and all(
                (m >> a.otimes[x][y]) & 1
                for x in iter_mask(m)
                for y in iter_mask(m)
            )
        )
        if lhs != bool(rhs):
            out.append((ctx.show(m), lhs, bool(rhs)))


# ---------------------------------------------------------------------------
# subordinates and kernels


@finite("fact:a", "relative kernels are lattice filters")
def _fact_a(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        comp = list(iter_mask(a.full_mask & ~f))
        for r in range(1, len(comp) + 1):
            for xs in combinations(comp, r):
                k = calculus.kernel_rel(a, f, sum(1 << x for x in xs))
                if not filters.is_lattice_filter(a, k):
                    out.append((ctx.show(f), xs))


@finite("fact:b", "the singleton relative kernel is the subordinate")
def _fact_b(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        for x in iter_mask(a.full_mask & ~f):
            if calculus.kernel_rel(a, f, 1 << x) != calculus.subordinate(a, f, x):
                out.append((ctx.show(f), x))


@finite("fact:c", "the kernel is the relative kernel at the whole complement")
def _fact_c(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        if calculus.kernel(a, f) != calculus.kernel_rel(a, f, a.full_mask & ~f):
            out.append((ctx.show(f),))


@finite("fact:d", "subordinates coincide exactly on kernel cosets")
def _fact_d(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        k = calculus.kernel(a, f)
        coset_of, _, _ = filters.prime_congruence_classes(a, k)
        outside = list(iter_mask(a.full_mask & ~f))
        for x in outside:
            for y in outside:
                same_coset = coset_of[x] == coset_of[y]
                same_sub = calculus.subordinate(a, f, x) == calculus.subordinate(
                    a, f, y
                )
                if same_coset != same_sub:
                    out.append((ctx.show(f), x, y))


@finite("fact:e", "relative kernels see only the join-ideal closure")
def _fact_e(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        comp = list(iter_mask(a.full_mask & ~f))
        for r in range(1, len(comp) + 1):
            for xs in combinations(comp, r):
                xm = sum(1 << x for x in xs)
                closed = filters.down_closure_joins(a, xm)
                if closed & f:
                    out.append(("closure escaped the complement", ctx.show(f), xs))
                    continue
                if calculus.kernel_rel(a, f, xm) != calculus.kernel_rel(a, f, closed):
                    out.append((ctx.show(f), xs))


@finite("fact:subord-monotone", "subordinates reverse order; joins pick one side")
def _subord_monotone(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        subs = {x: calculus.subordinate(a, f, x) for x in range(a.size)}
        for z in range(a.size):
            for x in range(a.size):
                if a.leq(z, x) and subs[x] & ~subs[z]:
                    out.append(("monotone", ctx.show(f), z, x))
        for x in iter_mask(a.full_mask & ~f):
            for y in iter_mask(a.full_mask & ~f):
                j = a.join[x][y]
                if subs[j] not in (subs[x], subs[y]):
                    out.append(("join", ctx.show(f), x, y))


@finite("prop:SubAEq", "a subordinate keeps the kernel of its parent")
def _subaeq(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        k = calculus.kernel(a, f)
        for x in iter_mask(a.full_mask & ~f):
            if calculus.kernel(a, calculus.subordinate(a, f, x)) != k:
                out.append((ctx.show(f), x))


@finite("prop:subord-prime", "subordinates of prime filters are prime")
def _subord_prime(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        for x in iter_mask(a.full_mask & ~f):
            s = calculus.subordinate(a, f, x)
            if s and not filters.is_prime_lattice_filter(a, s):
                out.append((ctx.show(f), x, ctx.show(s)))


@finite("prop:plus-involution", "⁺ is an involution on prime filters")
def _plus_inv(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        if calculus.set_plus(a, calculus.set_plus(a, f)) != f:
            out.append((ctx.show(f),))


@finite("kernel:inside", "the kernel is an implication filter inside its filter")
def _kernel_inside(ctx, out):
    a = ctx.a
    for f in ctx.lattice:
        k = calculus.kernel(a, f)
        if k & ~f:
            out.append(("containment", ctx.show(f)))
        if not filters.is_implication_filter(a, k):
            out.append(("not an implication filter", ctx.show(f)))


@finite("kernel:prime-iff", "kernels are prime exactly when the filter is")
def _kernel_prime_iff(ctx, out):
    a = ctx.a
    for f in ctx.lattice:
        if f == a.full_mask:
            continue
        k = calculus.kernel(a, f)
        if filters.is_prime_lattice_filter(a, f) != filters.is_prime_implication_filter(
            a, k
        ):
            out.append((ctx.show(f), ctx.show(k)))


# ---------------------------------------------------------------------------
# basic sqto propositions


@finite("prop:fastform", "definitional and product forms of ⊸ agree")
def _fastform(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        for g in ctx.primes:
            if calculus.sqto(a, f, g) != calculus.sqto_fast(a, f, g):
                out.append((ctx.show(f), ctx.show(g)))


@finite("prop:incl", "F⊸G lands inside G")
def _incl(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        for g in ctx.primes:
            if calculus.sqto(a, f, g) & ~g:
                out.append((ctx.show(f), ctx.show(g)))


@finite("prop:inclOne", "a nested pair collapses to the kernel")
def _incl_one(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        for g in ctx.primes:
            if g & ~f == 0:
                if calculus.sqto(a, f, g) != calculus.kernel(a, g):
                    out.append((ctx.show(f), ctx.show(g)))


@finite("prop:monotone", "⊸ is monotone in its right argument")
def _monotone(ctx, out):
    a = ctx.a
    for f, g1 in _nested_prime_pairs(ctx):
        for g2 in ctx.primes:
            if g1 & ~g2 == 0:
                lhs = calculus.sqto(a, f, g1)
                rhs = calculus.sqto(a, f, g2)
                if lhs & ~rhs:
                    out.append((ctx.show(f), ctx.show(g1), ctx.show(g2)))


@finite("prop:revIncl", "⊸ is antitone in its left argument")
def _rev_incl(ctx, out):
    a = ctx.a
    for f1, f2 in _nested_prime_pairs(ctx):
        for g in ctx.primes:
            if f2 & ~g == 0:
                if calculus.sqto(a, f2, g) & ~calculus.sqto(a, f1, g):
                    out.append((ctx.show(f1), ctx.show(f2), ctx.show(g)))


@finite("prop:plus", "⊸ is self-dual under ⁺")
def _prop_plus(ctx, out):
    a = ctx.a
    for f, g in _nested_prime_pairs(ctx):
        lhs = calculus.sqto(a, f, g)
        rhs = calculus.sqto(a, calculus.set_plus(a, g), calculus.set_plus(a, f))
        if lhs != rhs:
            out.append((ctx.show(f), ctx.show(g)))


@finite("prop:OneOne", "the kernel is a left unit for ⊸")
def _one_one(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        if calculus.sqto(a, calculus.kernel(a, f), f) != f:
            out.append((ctx.show(f),))


@finite("prop:adjunction", "the two containments into ⊸ swap symmetrically")
def _adjunction(ctx, out):
    a = ctx.a
    for g in ctx.primes:
        below = [f for f in ctx.primes if f & ~g == 0]
        for f in below:
            for h in below:
                lhs = f & ~calculus.sqto(a, h, g) == 0
                rhs = h & ~calculus.sqto(a, f, g) == 0
                if lhs != rhs:
                    out.append((ctx.show(f), ctx.show(h), ctx.show(g)))


@finite("prop:axiomC", "left arguments of nested ⊸ exchange")
def _axiom_c(ctx, out):
    a = ctx.a
    for g in ctx.primes:
        below = [f for f in ctx.primes if f & ~g == 0]
        for f in below:
            for h in below:
                lhs = calculus.sqto(a, f, calculus.sqto(a, h, g))
                rhs = calculus.sqto(a, h, calculus.sqto(a, f, g))
                if lhs != rhs:
                    out.append((ctx.show(f), ctx.show(h), ctx.show(g)))


@finite("lem:FFg", "F sits inside the double application")
def _ffg(ctx, out):
    a = ctx.a
    for f, g in _nested_prime_pairs(ctx):
        if f & ~calculus.sqto(a, calculus.sqto(a, f, g), g):
            out.append((ctx.show(f), ctx.show(g)))


@finite("cor:sqto-triple", "three applications collapse to one")
def _triple(ctx, out):
    a = ctx.a
    for f, g in _nested_prime_pairs(ctx):
        once = calculus.sqto(a, f, g)
        thrice = calculus.sqto(a, calculus.sqto(a, once, g), g)
        if once != thrice:
            out.append((ctx.show(f), ctx.show(g)))


@finite("prop:phi", "the union form of Φ matches the ⁺/⊸ encoding")
def _phi(ctx, out):
    a = ctx.a
    for f in ctx.lattice:
        for g in ctx.lattice:
            lhs = calculus.phi(a, f, g)
            rhs = calculus.set_plus(
                a, calculus.sqto_full(a, f, calculus.set_plus(a, g))
            )
            if lhs != rhs:
                out.append((ctx.show(f), ctx.show(g)))


# ---------------------------------------------------------------------------
# J-operators and quotient interaction


@finite("prop:small", "J_u is the least enlargement whose kernel absorbs P")
def _small(ctx, out):
    a = ctx.a
    for f in ctx.lattice:
        for p in ctx.impl:
            ju = calculus.j_up(a, f, p)
            if f & ~ju:
                out.append(("does not contain F", ctx.show(f), ctx.show(p)))
                continue
            if not filters.is_lattice_filter(a, ju):
                out.append(("not a lattice filter", ctx.show(f), ctx.show(p)))
                continue
            if p & ~calculus.kernel(a, ju):
                out.append(("kernel misses P", ctx.show(f), ctx.show(p)))
                continue
            for h in ctx.lattice:
                if f & ~h == 0 and not (p & ~calculus.kernel(a, h)):
                    if ju & ~h:
                        out.append(("not minimal", ctx.show(f), ctx.show(p)))


@finite("prop:large", "J_d is the largest shrinking whose kernel absorbs P")
def _large(ctx, out):
    a = ctx.a
    for f in ctx.lattice:
        for p in ctx.impl:
            jd = calculus.j_down(a, f, p)
            candidates = [
                h
                for h in ctx.lattice
                if h & ~f == 0 and not (p & ~calculus.kernel(a, h))
            ]
            if jd == 0:
                if candidates:
                    out.append(("bottom despite candidates", ctx.show(f), ctx.show(p)))
                continue
            if jd & ~f or (p & ~calculus.kernel(a, jd)):
                out.append(("violates the two conditions", ctx.show(f), ctx.show(p)))
                continue
            for h in candidates:
                if h & ~jd:
                    out.append(("not maximal", ctx.show(f), ctx.show(p)))


@finite("prop:Ju-kernel", "the kernel of J_u is the kernel join")
def _ju_kernel(ctx, out):
    a = ctx.a
    for f in ctx.lattice:
        for p in ctx.impl:
            if not filters.is_prime_implication_filter(a, p):
                continue
            ju = calculus.j_up(a, f, p)
            if ju == a.full_mask:
                continue
            lhs = calculus.kernel(a, ju)
            rhs = calculus.kernel_join(a, calculus.kernel(a, f), p)
            if lhs != rhs:
                out.append((ctx.show(f), ctx.show(p)))


@finite("lem:Jd-lower", "a smaller prime survives J_d at its own kernel")
def _jd_lower(ctx, out):
    a = ctx.a
    for f, g in _nested_prime_pairs(ctx):
        if f & ~calculus.j_down(a, g, calculus.kernel(a, f)):
            out.append((ctx.show(f), ctx.show(g)))


@finite("thm:reduction", "⊸ only sees the common-kernel reduction")
def _reduction(ctx, out):
    a = ctx.a
    for f, g in _nested_prime_pairs(ctx):
        try:
            calculus.reduce_to_common_kernel(a, f, g)
        except InvariantViolation as e:
            out.append((ctx.show(f), ctx.show(g), str(e)))


@finite("prop:quot-commute", "⊸ commutes with quotients below the kernel")
def _quot_commute(ctx, out):
    a = ctx.a
    for f in ctx.lattice:
        for g in ctx.lattice:
            if f & ~g:
                continue
            kg = calculus.kernel(a, g)
            for p in ctx.impl:
                if p & ~kg:
                    continue
                q = quotient_by(a, p)
                rep = calculus.sqto_quotient_commutes(a, f, g, q)
                if not rep["quotient_commutes"]:
                    out.append(("commute", ctx.show(f), ctx.show(g), ctx.show(p)))
                if rep["preimage_identity"] is False:
                    out.append(("preimage", ctx.show(f), ctx.show(g), ctx.show(p)))


@finite("thm:kernel-sqto", "⊸ keeps the common kernel")
def _kernel_sqto(ctx, out):
    a = ctx.a
    for f, g in _nested_prime_pairs(ctx):
        if calculus.kernel(a, f) != calculus.kernel(a, g):
            continue
        try:
            calculus.kernel_of_sqto(a, f, g)
        except InvariantViolation as e:
            out.append((ctx.show(f), ctx.show(g), str(e)))


@finite("def:boundary", "one coset straddles, and ⁺ negates it")
def _boundary(ctx, out):
    a = ctx.a
    for f in ctx.primes:
        kf = calculus.kernel(a, f)
        for p in ctx.impl:
            if not (kf & ~p == 0 and kf != p):
                continue
            if p != a.full_mask and not filters.is_prime_implication_filter(a, p):
                continue
            try:
                c = calculus.boundary_coset(a, f, p)
            except InvariantViolation as e:
                out.append((ctx.show(f), ctx.show(p), str(e)))
                continue
            cplus = calculus.boundary_coset(a, calculus.set_plus(a, f), p)
            neg_image = 0
            for x in iter_mask(c):
                neg_image |= 1 << a.neg[x]
            if cplus != neg_image:
                out.append(("plus-negation", ctx.show(f), ctx.show(p)))


# ---------------------------------------------------------------------------
# convexity and the discrete case


def _convex_sets(a: MvAlgebra):
    order = sorted(range(a.size), key=lambda x: bin(a.up_mask[x]).count("1"),
                   reverse=True)
    for i in range(len(order)):
        for j in range(i, len(order)):
            yield sum(1 << x for x in order[i : j + 1])


@finite("lem:convex-imp", "implication images of convex sets are convex")
def _convex_imp(ctx, out):
    if not ctx.linear:
        return "skip"
    a = ctx.a
    for c in _convex_sets(a):
        for x in range(a.size):
            rep = calculus.convex_image_checks(a, c, x)
            if not rep["imp"]["ok"]:
                out.append((ctx.show(c), x))


@finite("lem:convex-neg", "negation images of convex sets are convex")
def _convex_neg(ctx, out):
    if not ctx.linear:
        return "skip"
    a = ctx.a
    for c in _convex_sets(a):
        rep = calculus.convex_image_checks(a, c, a.zero)
        if not rep["neg"]["ok"]:
            out.append((ctx.show(c),))


@finite("lem:convex-otimes", "product images of convex sets are convex")
def _convex_otimes(ctx, out):
    if not ctx.linear:
        return "skip"
    a = ctx.a
    for c in _convex_sets(a):
        for x in range(a.size):
            rep = calculus.convex_image_checks(a, c, x)
            if not rep["otimes"]["ok"]:
                out.append((ctx.show(c), x))


@finite("thm:discrete-principal", "trivial-kernel filters of a chain are principal")
def _discrete(ctx, out):
    if not ctx.linear:
        return "skip"
    a = ctx.a
    if filters.successor_structure(a) is None:
        out.append(("no successor structure",))
        return
    for f in ctx.lattice:
        if f == a.full_mask:
            continue
        if calculus.kernel(a, f) == a.one_mask:
            cls = filters.principality(a, f)
            if not cls.is_principal:
                out.append((ctx.show(f),))


@finite("prop:successor", "⊕c and ⊖c step to immediate neighbours")
def _successor(ctx, out):
    if not ctx.linear:
        return "skip"
    a = ctx.a
    res = filters.successor_structure(a)
    if res is None:
        out.append(("absent",))
        return
    c, succ, pred = res
    for x, s in succ.items():
        if pred.get(s) != x:
            out.append(("succ/pred mismatch", x, s))


@finite("equiv:discrete", "on a finite chain cut equivalence is equality")
def _equiv_discrete(ctx, out):
    if not ctx.linear:
        return "skip"
    a = ctx.a
    for f in ctx.primes:
        for g in ctx.primes:
            if calculus.equiv(a, f, g) != (f == g):
                out.append((ctx.show(f), ctx.show(g)))


# ---------------------------------------------------------------------------
# spectra


@finite("thm:hat", "each spectrum packages into a linear MV-algebra")
def _hat(ctx, out):
    a = ctx.a
    for p in ctx.prime_impl:
        spec = spectra.prime_spectrum(a, p)
        if not spec.members:
            continue
        try:
            spectra.build_hat(spec)
        except MvError as e:
            out.append((ctx.show(p), str(e)))


@finite("prop:T-phi", "the three faces of ⊗ coincide on spectra")
def _t_phi(ctx, out):
    a = ctx.a
    for p in ctx.prime_impl:
        spec = spectra.prime_spectrum(a, p)
        for f in spec.members:
            for g in spec.members:
                t = calculus.tensor_up(a, f, g)
                ph = calculus.phi(a, f, g)
                enc = calculus.set_plus(
                    a, calculus.sqto_full(a, f, calculus.set_plus(a, g))
                )
                if not (t == ph == enc):
                    out.append((ctx.show(p), ctx.show(f), ctx.show(g)))


@finite("prop:axiomG", "double application is cut-equivalent to the original")
def _axiom_g(ctx, out):
    a = ctx.a
    for p in ctx.prime_impl:
        spec = spectra.prime_spectrum(a, p)
        for f in spec.members:
            for g in spec.members:
                if f & ~g:
                    continue
                fg = calculus.sqto(a, calculus.sqto(a, f, g), g)
                if not spectra.spectrum_equiv(spec, f, fg):
                    out.append((ctx.show(p), ctx.show(f), ctx.show(g)))


@finite("thm:iota", "cosets map onto the derived algebra as subordinates")
def _iota(ctx, out):
    a = ctx.a
    for p in ctx.prime_impl:
        spec = spectra.prime_spectrum(a, p)
        if not spec.members:
            continue
        h = spectra.build_hat(spec)
        rep = spectra.iota(h, quotient_by(a, p))
        if not rep["sqto_closure"]:
            out.append(("sqto closure identity", ctx.show(p)))
        if not rep["plus_closure"]:
            out.append(("plus closure identity", ctx.show(p)))
        if not rep["is_surjective"]:
            out.append(("surjectivity", ctx.show(p)))


@finite("thm:hat-eta", "boundary cosets give a morphism to larger quotients")
def _hat_eta(ctx, out):
    a = ctx.a
    for p in ctx.prime_impl:
        spec = spectra.prime_spectrum(a, p)
        if not spec.members:
            continue
        h = spectra.build_hat(spec)
        targets = [
            q for q in ctx.prime_impl + [a.full_mask]
            if p & ~q == 0 and p != q
        ]
        for q in targets:
            rep = spectra.hat_eta(h, q)
            if not rep["is_morphism"]:
                out.append((ctx.show(p), ctx.show(q)))


@finite("thm:composite", "the composite map is the canonical coset map")
def _composite(ctx, out):
    a = ctx.a
    for p in ctx.prime_impl:
        spec = spectra.prime_spectrum(a, p)
        if not spec.members:
            continue
        h = spectra.build_hat(spec)
        targets = [
            q for q in ctx.prime_impl + [a.full_mask]
            if p & ~q == 0 and p != q
        ]
        for q in targets:
            if not spectra.composite_is_canonical(h, q):
                out.append((ctx.show(p), ctx.show(q)))


# ---------------------------------------------------------------------------
# dense-chain statements


class DenseCtx:
    def __init__(self, seed: int, pairs: int = 10_000, triples: int = 1_000,
                 max_den: int = 1000):
        self.seed = seed
        self.pairs = pairs
        self.triples = triples
        self.max_den = max_den

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


def _boundary_templates():
    from fractions import Fraction

    ps = [Fraction(0), Fraction(1, 2), Fraction(1)]
    cuts = []
    for p in ps:
        for kind in (dc.Kind.OPEN, dc.Kind.CLOSED):
            c = dc.Cut(p, kind)
            if c.is_proper:
                cuts.append(c)
    pairs = [(f, g) for f in cuts for g in cuts]
    # adjacent kinds at a shared interior endpoint
    q = Fraction(1, 3)
    pairs += [
        (dc.open_cut(q), dc.closed_cut(q)),
        (dc.closed_cut(q), dc.open_cut(q)),
    ]
    return pairs


@dense("dense:closed-forms", "closed forms match the elimination oracle")
def _dense_closed_forms(ctx, out):
    rng = ctx.rng("closed-forms")
    for f, g in _boundary_templates():
        if dc.cut_sqto(f, g) != dc.oracle_sqto(f, g):
            out.append((str(f), str(g)))
    for _ in range(ctx.pairs):
        f = dc.random_proper_cut(rng, ctx.max_den)
        g = dc.random_proper_cut(rng, ctx.max_den)
        if dc.cut_sqto(f, g) != dc.oracle_sqto(f, g):
            out.append((str(f), str(g)))
        if dc.cut_plus(f) != dc.oracle_plus(f):
            out.append(("plus", str(f)))


@dense("dense:negate", "⊸ against the least filter is ⁺")
def _dense_negate(ctx, out):
    rng = ctx.rng("negate")
    for _ in range(ctx.triples):
        f = dc.random_proper_cut(rng, ctx.max_den)
        if dc.oracle_sqto(f, dc.BOTTOM_FILTER) != dc.cut_plus(f):
            out.append((str(f),))


@dense("dense:equiv-thm", "collapse to {1} happens exactly on nested or split cuts")
def _dense_equiv(ctx, out):
    rng = ctx.rng("equiv")
    cases = list(_boundary_templates())
    for _ in range(ctx.triples):
        cases.append(
            (dc.random_proper_cut(rng, ctx.max_den),
             dc.random_proper_cut(rng, ctx.max_den))
        )
        p = dc.random_fraction(rng, ctx.max_den)
        for kf in (dc.Kind.OPEN, dc.Kind.CLOSED):
            for kg in (dc.Kind.OPEN, dc.Kind.CLOSED):
                f, g = dc.Cut(p, kf), dc.Cut(p, kg)
                if f.is_proper and g.is_proper:
                    cases.append((f, g))
    for f, g in cases:
        collapsed = dc.oracle_sqto(f, g) == dc.TOP
        expected = g.issubset(f) or (
            f.kind is dc.Kind.OPEN
            and g.kind is dc.Kind.CLOSED
            and f.endpoint == g.endpoint
        )
        if collapsed != expected:
            out.append((str(f), str(g)))


@dense("dense:separation", "two strictly separated cuts give different ⊸ values")
def _dense_separation(ctx, out):
    rng = ctx.rng("separation")
    for _ in range(ctx.triples):
        f2 = dc.random_proper_cut(rng, ctx.max_den)
        # widen to guarantee at least two points strictly between the endpoints
        gap = dc.Fraction(1, rng.randint(2, ctx.max_den))
        e1 = f2.endpoint + gap
        if e1 >= 1:
            continue
        f1 = dc.Cut(e1, rng.choice((dc.Kind.OPEN, dc.Kind.CLOSED)))
        g_end = dc.Fraction(rng.randint(0, f2.endpoint.numerator), max(
            f2.endpoint.denominator, 1))
        g = dc.Cut(min(g_end, f2.endpoint), dc.Kind.OPEN)
        if not (g.is_proper and f1.is_proper):
            continue
        if not (f1.issubset(f2) and f2.issubset(g)):
            continue
        if dc.oracle_sqto(f1, g) == dc.oracle_sqto(f2, g):
            out.append((str(f1), str(f2), str(g)))


@dense("dense:trans", "cut equivalence is transitive")
def _dense_trans(ctx, out):
    rng = ctx.rng("trans")

    def eq(x, y):
        return dc.oracle_sqto(x, y) == dc.TOP and dc.oracle_sqto(y, x) == dc.TOP

    for _ in range(ctx.triples):
        p = dc.random_fraction(rng, ctx.max_den)
        cuts = [
            c
            for c in (
                dc.Cut(p, dc.Kind.OPEN),
                dc.Cut(p, dc.Kind.CLOSED),
                dc.random_proper_cut(rng, ctx.max_den),
            )
            if c.is_proper
        ]
        for f in cuts:
            for g in cuts:
                for h in cuts:
                    if eq(f, g) and eq(g, h) and not eq(f, h):
                        out.append((str(f), str(g), str(h)))


@dense("dense:congruence", "collapse on the left propagates through ⊸")
def _dense_congruence(ctx, out):
    rng = ctx.rng("congruence")
    for _ in range(ctx.triples):
        p = dc.random_fraction(rng, ctx.max_den)
        f, g = dc.Cut(p, dc.Kind.OPEN), dc.Cut(p, dc.Kind.CLOSED)
        if not (f.is_proper and g.is_proper):
            continue
        if dc.oracle_sqto(f, g) != dc.TOP:
            out.append(("premise", str(f), str(g)))
            continue
        h = dc.random_proper_cut(rng, ctx.max_den)
        lhs = dc.oracle_sqto(dc.oracle_sqto(g, h), dc.oracle_sqto(f, h))
        if lhs != dc.TOP:
            out.append((str(f), str(g), str(h)))


@dense("dense:props", "the basic proposition suite holds for cuts")
def _dense_props(ctx, out):
    rng = ctx.rng("props")
    for _ in range(ctx.triples):
        f = dc.random_proper_cut(rng, ctx.max_den)
        g = dc.random_proper_cut(rng, ctx.max_den)
        h = dc.random_proper_cut(rng, ctx.max_den)
        s = dc.oracle_sqto(f, g)
        # incl
        if not s.issubset(g):
            out.append(("incl", str(f), str(g)))
        # inclOne
        if g.issubset(f) and s != dc.TOP:
            out.append(("inclOne", str(f), str(g)))
        # OneOne: {1}⊸F = F
        if dc.oracle_sqto(dc.TOP, f) != f:
            out.append(("OneOne", str(f)))
        # plus duality for nested pairs
        if f.issubset(g):
            if s != dc.oracle_sqto(dc.cut_plus(g), dc.cut_plus(f)):
                out.append(("plus", str(f), str(g)))
            # FFg + triple corollary
            ffg = dc.oracle_sqto(s, g)
            if not f.issubset(ffg):
                out.append(("FFg", str(f), str(g)))
            if dc.oracle_sqto(ffg, g) != s:
                out.append(("triple", str(f), str(g)))
        # revIncl
        if f.issubset(g) and g.issubset(h):
            big = dc.oracle_sqto(f, h)
            small = dc.oracle_sqto(g, h)
            if not small.issubset(big):
                out.append(("revIncl", str(f), str(g), str(h)))
        # axiomG: (F⊸G)⊸G is cut-equivalent to F when F ⊆ G
        if f.issubset(g):
            fg = dc.oracle_sqto(dc.oracle_sqto(f, g), g)
            if not (dc.oracle_sqto(f, fg) == dc.TOP
                    and dc.oracle_sqto(fg, f) == dc.TOP):
                out.append(("axiomG", str(f), str(g)))
        # axiomC
        lhs = dc.oracle_sqto(f, dc.oracle_sqto(h, g))
        rhs = dc.oracle_sqto(h, dc.oracle_sqto(f, g))
        if lhs != rhs:
            out.append(("axiomC", str(f), str(g), str(h)))


@dense("dense:kernel", "every proper cut filter has trivial kernel")
def _dense_kernel(ctx, out):
    rng = ctx.rng("kernel")
    for _ in range(ctx.triples):
        f = dc.random_proper_cut(rng, ctx.max_den)
        if dc.oracle_sqto(f, f) != dc.TOP:
            out.append((str(f),))


@dense("dense:hat-embed", "finite subchains embed into the class algebra")
def _dense_hat_embed(ctx, out):
    from fractions import Fraction

    for d in range(1, 13):
        pts = [Fraction(k, d) for k in range(d + 1)]
        for x in pts:
            if dc.hat_plus(x) != 1 - x:
                out.append(("plus", d, str(x)))
            for y in pts:
                if dc.hat_sqto(x, y) != dc.chain_imp(x, y):
                    out.append(("sqto", d, str(x), str(y)))
                if dc.hat_oplus(x, y) != min(1, x + y):
                    out.append(("oplus", d, str(x), str(y)))
        # the embedding a ↦ class([a,1]) is injective and mirrors ⊸ and ⁺
        classes = [dc.hat_class(dc.canonical_member(x)) for x in pts]
        if len(set(classes)) != len(pts):
            out.append(("injectivity", d))
        for x in pts:
            for y in pts:
                want = dc.chain_imp(x, y)
                got = dc.hat_class(
                    dc.oracle_sqto(dc.canonical_member(x), dc.canonical_member(y))
                )
                if got != want:
                    out.append(("morphism", d, str(x), str(y)))


# ---------------------------------------------------------------------------
# runners


def _run(statements, ctx, only, target, seed) -> Report:
    if only:
        unknown = [s for s in only if s not in statements]
        if unknown:
            raise InvalidArgument(f"unknown statement ids: {', '.join(unknown)}")
    report = Report(target=target, seed=seed)
    for stmt_id, (blurb, fn) in statements.items():
        if only and stmt_id not in only:
            continue
        out: list = []
        t0 = time.perf_counter()
        verdict = fn(ctx, out)
        elapsed = time.perf_counter() - t0
        if verdict == "skip":
            report.results.append(
                StatementResult(stmt_id, "skip", blurb, [], elapsed)
            )
        elif out:
            report.results.append(
                StatementResult(stmt_id, "fail", blurb, out, elapsed)
            )
        else:
            report.results.append(
                StatementResult(stmt_id, "pass", blurb, [], elapsed)
            )
    return report


def run_finite(a: MvAlgebra, only=None, seed: int = 0) -> Report:
    ctx = Ctx(a)
    return _run(FINITE_STATEMENTS, ctx, only, a.name or "finite algebra", seed)


def run_dense(seed: int = 0, only=None, pairs: int = 10_000,
              triples: int = 1_000, max_den: int = 1000) -> Report:
    ctx = DenseCtx(seed, pairs=pairs, triples=triples, max_den=max_den)
    return _run(DENSE_STATEMENTS, ctx, only, "dense rational chain", seed)
