"""Bounded-degree Gröbner–Shirshov certification for operated Lie systems.

A system (a :class:`~lsgsb.rewrite.LieRuleSet`) is checked by
enumerating every composition among its instances whose business word
has degree <= bound -- intersection compositions from overlaps of two
leading words and including compositions from one leading word sitting
inside another -- computing each value through special normal words,
and reducing it with the system itself.  A composition that reduces to
zero is trivial; the aggregate verdict is the all-trivial conjunction.

A nonzero residue is always reported as "nontrivial by reduction": the
reduction test is sufficient for triviality but in principle not
necessary, so a residue falsifies confluence of the *reduction
strategy* rather than proving non-GSB-ness outright.  The independent
cross-checks (:func:`equivalence_crosschecks`) corroborate the verdict:
fork joinability, rewriting-strategy independence, an exact
rank/dimension audit of the bounded ideal slices, random
ideal-membership reductions, and the associative twin's verdict.
"""

from __future__ import annotations

import os
import random
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import lyndon, poly, rewrite, words
from .words import STAR


def thread_count():
    """Worker count from LSGSB_THREADS (default 1 = sequential)."""
    raw = os.environ.get("LSGSB_THREADS", "").strip()
    if not raw:
        return 1
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


# ---------------------------------------------------------------------------
# compositions


class Composition:
    """One composition of two instances with respect to a word w.

    * intersection: w = a·u = v·b for leading words a, b sharing a
      proper top-level overlap (max breadth < breadth of w < sum);
      value = [f·u]_a - [v·g]_b, both sides via special normal words.
    * including: w = a = q|_b; value = f - [q|_g]_b.
    """

    __slots__ = ("kind", "w", "left", "right", "q_left", "q_right")

    def __init__(self, kind, w, left, right, q_left, q_right):
        self.kind = kind
        self.w = w
        self.left = left
        self.right = right
        self.q_left = q_left
        self.q_right = q_right

    def value(self, system):
        if self.kind == "intersection":
            return system.snw(self.q_left, self.left) - system.snw(
                self.q_right, self.right
            )
        return system.instance(self.left) - system.snw(self.q_right, self.right)

    def __repr__(self):
        return "Composition(%s at %r)" % (self.kind, (self.w,))


def enumerate_instances(system, degree_bound):
    """Descriptors of every instance whose leading word has degree
    <= degree_bound, in a fixed deterministic order."""
    order = system.order
    pc = order.prime_compare
    table = lyndon.lsbw_by_degree(order.alphabet, order, max(0, degree_bound - 1))
    out = []
    if system.shape == "diff":
        # leads |_m_| with m LS of breadth >= 2; one descriptor per
        # valid split (both halves LS, u >_lex v)
        for d in range(2, degree_bound):
            for m in table[d]:
                if len(m) < 2:
                    continue
                for j in range(1, len(m)):
                    u, v = m[:j], m[j:]
                    if (
                        lyndon._is_lsbw(u, pc)
                        and lyndon._is_lsbw(v, pc)
                        and lyndon.lex_compare(u, v, pc) > 0
                    ):
                        out.append(("diff", u, v))
    elif system.shape == "rb":
        # leads |_u_||_v_| with u, v LS and u > v in the monomial order
        pool = [w for d in range(1, degree_bound - 1) for w in table[d]]
        for u in pool:
            for v in pool:
                if (
                    words.degree(u) + words.degree(v) + 2 <= degree_bound
                    and order.compare(u, v) > 0
                ):
                    out.append(("rb", u, v))
    else:
        out = [("raw", i) for i in range(len(system.raw))]
    return out


def _intersections(leads, degree_bound, ls_filter=None):
    """Proper top-level overlaps a[-k:] == b[:k]; yields composition
    data (w, d1, d2, q1, q2).  ls_filter drops non-LS w (Lie side)."""
    out = []
    for d1, a in leads:
        for d2, b in leads:
            for k in range(1, min(len(a), len(b))):
                if a[len(a) - k :] != b[:k]:
                    continue
                w = a + b[k:]
                if words.degree(w) > degree_bound:
                    continue
                if ls_filter is not None and not ls_filter(w):
                    continue
                q1 = (STAR,) + b[k:]
                q2 = a[: len(a) - k] + (STAR,)
                out.append((w, d1, d2, q1, q2))
    return out


def _includings(leads, same_poly=None):
    """Embeddings of b = lead(d2) inside a = lead(d1); the identity
    embedding q = star only counts for distinct relations."""
    out = []
    for d1, a in leads:
        for d2, b in leads:
            for q in words.find_placements(a, b):
                if q == (STAR,):
                    if d1 == d2 or (same_poly is not None and same_poly(d1, d2)):
                        continue
                out.append((a, d1, d2, q))
    return out


def enumerate_compositions(system, degree_bound):
    """All compositions among the system's instances with deg(w) <= bound."""
    order = system.order
    descs = enumerate_instances(system, degree_bound)
    leads = [(d, system.expected_lead(d)) for d in descs]
    comps = []
    for w, d1, d2, q1, q2 in _intersections(
        leads, degree_bound, ls_filter=lambda w: lyndon.is_lsbw(w, order)
    ):
        comps.append(Composition("intersection", w, d1, d2, q1, q2))
    for w, d1, d2, q in _includings(leads):
        comps.append(Composition("including", w, d1, d2, None, q))
    return comps


def find_compositions(f, g, order):
    """All compositions of two monic polynomials: overlaps of their
    leading words and embeddings of g's lead into f's.  Returns
    (compositions, system) where the throwaway raw system computes
    values: ``comp.value(system)``."""
    system = rewrite.LieRuleSet(order, "raw", raw=[f, g], name="pair")
    d1, d2 = ("raw", 0), ("raw", 1)
    a, b = system.expected_lead(d1), system.expected_lead(d2)
    comps = []
    for k in range(1, min(len(a), len(b))):
        if a[len(a) - k :] != b[:k]:
            continue
        w = a + b[k:]
        if not lyndon.is_lsbw(w, order):
            continue
        comps.append(
            Composition(
                "intersection", w, d1, d2, (STAR,) + b[k:], a[: len(a) - k] + (STAR,)
            )
        )
    same = system.raw[0] == system.raw[1]
    for q in words.find_placements(a, b):
        if q == (STAR,) and same:
            continue
        comps.append(Composition("including", a, d1, d2, None, q))
    return comps, system


def is_trivial_mod(system, h, w):
    """Reduce h by rules applied strictly below w; (is_zero, residue).

    Sound for the triviality test: every rewriting step rewrites a word
    <= the current leading word < w, which the trace re-checks.
    """
    order = system.order
    if h.is_zero():
        return True, None
    assert order.less(h.leading_word(order), w)
    nf, trace = system.normal_form(h, want_trace=True)
    for tw, _q, _desc, _c in trace:
        assert order.less(tw, w)
    if nf.is_zero():
        return True, None
    return False, nf


# ---------------------------------------------------------------------------
# the bounded GSB check


class GsbReport:
    """Per-composition verdicts, aggregate verdict, bound, order, timing.

    ``entries`` is a list of (Composition, trivial: bool, residue or
    None); the aggregate verdict is the all-trivial conjunction.
    """

    def __init__(self, system, degree_bound, entries, verdict, elapsed, crosschecks=None):
        self.system_name = system.name
        self.params = dict(system.params)
        self.order_kind = system.order.kind
        self.alphabet = system.order.alphabet
        self.order = system.order
        self.degree_bound = degree_bound
        self.entries = entries
        self.verdict = verdict
        self.elapsed = elapsed
        self.crosschecks = crosschecks

    def counterexamples(self):
        return [(c, r) for c, ok, r in self.entries if not ok]

    def to_json_dict(self):
        comps = []
        for comp, ok, residue in self.entries:
            entry = {
                "kind": comp.kind,
                "w": words.format_word(comp.w, self.alphabet),
                "verdict": "trivial" if ok else "nontrivial",
            }
            if residue is not None:
                entry["residue"] = poly.format_lie_poly(residue, self.alphabet, self.order)
            comps.append(entry)
        return {
            "opi": {
                "name": self.system_name,
                "params": {k: str(v) for k, v in sorted(self.params.items())},
            },
            "order": self.order_kind,
            "alphabet": list(self.alphabet.names),
            "degree_bound": self.degree_bound,
            "compositions": comps,
            "verdict": self.verdict,
            "equivalence_crosschecks": self.crosschecks or {},
        }


def check_gsb(system, degree_bound, threads=None, with_crosschecks=False, seed=0):
    """Verify every composition with deg(w) <= degree_bound.

    Compositions are independent work items; with LSGSB_THREADS > 1 (or
    an explicit ``threads``) they are reduced on a thread pool, results
    collected in submission order so reports stay deterministic.
    """
    t0 = time.perf_counter()
    rewrite.validate_lead_shape(system)
    comps = enumerate_compositions(system, degree_bound)
    if threads is None:
        threads = thread_count()

    def _reduce(comp):
        return is_trivial_mod(system, comp.value(system), comp.w)

    if threads > 1 and len(comps) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_reduce, comps))
    else:
        results = [_reduce(c) for c in comps]
    entries = [(c, ok, res) for c, (ok, res) in zip(comps, results)]
    verdict = all(ok for _, ok, _ in entries)
    crosschecks = None
    if with_crosschecks:
        crosschecks = equivalence_crosschecks(
            system, degree_bound, seed=seed, lie_verdict=verdict
        )
    return GsbReport(
        system, degree_bound, entries, verdict, time.perf_counter() - t0, crosschecks
    )


# ---------------------------------------------------------------------------
# irreducible words


def enumerate_irr(system, degree_bound):
    """All basis trees [w] with w LS of degree <= bound containing no
    instance leading word; for the empty system this is every LS word."""
    order = system.order
    table = lyndon.lsbw_by_degree(order.alphabet, order, degree_bound)
    out = []
    for d in range(1, degree_bound + 1):
        for w in table[d]:
            if not system.is_reducible(w):
                out.append(lyndon.bracketing_of(w, order))
    return out


# ---------------------------------------------------------------------------
# independent characterizations


def check_forks(system, degree_bound):
    """Join every one-step fork from a single basis element [w],
    deg(w) <= bound.  Returns (all_joinable, witness, forks_checked)."""
    order = system.order
    table = lyndon.lsbw_by_degree(order.alphabet, order, degree_bound)
    checked = 0
    for d in range(1, degree_bound + 1):
        for w in table[d]:
            matches = system.find_matches(w, all_splits=True)
            if len(matches) < 2:
                continue
            f = poly.LiePolynomial.from_tree(lyndon.bracketing_of(w, order))
            reducts = [f - system.snw(q, desc) for q, desc in matches]
            base = system.normal_form(reducts[0])
            checked += 1
            for g in reducts[1:]:
                if system.normal_form(g) != base:
                    return False, w, checked
    return True, None, checked


def _random_elements(system, degree_bound, count, seed, max_terms=4):
    order = system.order
    rng = random.Random(seed)
    table = lyndon.lsbw_by_degree(order.alphabet, order, degree_bound)
    pool = [w for d in range(1, degree_bound + 1) for w in table[d]]
    out = []
    for _ in range(count):
        f = poly.LiePolynomial.zero()
        for _ in range(rng.randint(1, max_terms)):
            w = pool[rng.randrange(len(pool))]
            c = Fraction(rng.choice((1, -1)) * rng.randint(1, 5), rng.randint(1, 3))
            f = f + poly.LiePolynomial.from_tree(lyndon.bracketing_of(w, order), c)
        out.append(f)
    return out


def check_strategy_independence(system, degree_bound, seed=0, samples=12):
    """Normal forms of random elements must not depend on the rewriting
    strategy.  Returns (independent, samples_checked)."""
    for i, f in enumerate(_random_elements(system, degree_bound, samples, seed)):
        base = system.normal_form(f, strategy="leading")
        for strategy in ("leading-last", "smallest"):
            if system.normal_form(f, strategy=strategy) != base:
                return False, i + 1
    return True, samples


def random_ideal_members(system, degree_bound, count=50, seed=0):
    """Random combinations of special normal s-words (ideal members by
    construction) built from matches of in-bound LS words."""
    order = system.order
    rng = random.Random(seed)
    table = lyndon.lsbw_by_degree(order.alphabet, order, degree_bound)
    sites = []
    for d in range(1, degree_bound + 1):
        for w in table[d]:
            for q, desc in system.find_matches(w, all_splits=True):
                sites.append((q, desc))
    if not sites:
        return []
    out = []
    for _ in range(count):
        h = poly.LiePolynomial.zero()
        for _ in range(rng.randint(1, 3)):
            q, desc = sites[rng.randrange(len(sites))]
            c = Fraction(rng.choice((1, -1)) * rng.randint(1, 5), rng.randint(1, 3))
            h = h + system.snw(q, desc).scale(c)
        out.append(h)
    return out


def check_random_ideal_members(system, degree_bound, count=50, seed=0):
    """Every random ideal member must reduce to 0 (membership
    criterion for confluent systems).  Returns (all_zero, checked)."""
    members = random_ideal_members(system, degree_bound, count, seed)
    for i, h in enumerate(members):
        if not system.normal_form(h).is_zero():
            return False, i + 1
    return True, len(members)


def cd_crosscheck(system, degree_bound):
    """Rank/dimension audit of the bounded ideal slices.

    The span of all special normal words with designated lead of degree
    <= bound is triangularized by exact Gaussian elimination in the
    word basis; for a GSB the pivots land exactly on the reducible LS
    words, giving the cumulative identity
    #LS_{<=d} = #Irr_{<=d} + #pivots_{<=d} at every d <= bound.
    Cumulative slices (not per-degree) because weighted families are
    degree-inhomogeneous.  Pivots beyond the bound can occur for the
    same reason; each such survivor is itself reduced by the system and
    must reach 0, else the verdict is falsified.

    Returns (ok, rows) with one {degree, ls, irr, pivots, ok} row per
    cumulative degree.
    """
    order = system.order
    key = order.key()
    table = lyndon.lsbw_by_degree(order.alphabet, order, degree_bound)
    in_box = [w for d in range(1, degree_bound + 1) for w in table[d]]
    reducible = {w for w in in_box if system.is_reducible(w)}

    vectors = []
    for w in in_box:
        for q, desc in system.find_matches(w, all_splits=True):
            s = system.snw(q, desc)
            vec = {words.forget_brackets(t): c for t, c in s.terms.items()}
            vectors.append((w, vec))
    vectors.sort(key=lambda p: key(p[0]), reverse=True)

    pivots = {}
    bad = []
    boundary = []
    for _dw, vec in vectors:
        v = dict(vec)
        while v:
            lw = max(v, key=key)
            piv = pivots.get(lw)
            if piv is None:
                break
            c = v[lw]
            for k, ck in piv.items():
                nc = v.get(k, 0) - c * ck
                if nc:
                    v[k] = nc
                else:
                    v.pop(k, None)
        if not v:
            continue
        lw = max(v, key=key)
        c = v[lw]
        pivots[lw] = {k: ck / c for k, ck in v.items()}
        if words.degree(lw) > degree_bound:
            boundary.append(lw)
        elif lw not in reducible:
            bad.append(lw)

    for lw in boundary:
        f = poly.LiePolynomial(
            {lyndon.bracketing_of(k, order): ck for k, ck in pivots[lw].items()}
        )
        if not system.normal_form(f).is_zero():
            bad.append(lw)

    rows = []
    n_ls = n_irr = n_piv = 0
    for d in range(1, degree_bound + 1):
        n_ls += len(table[d])
        n_irr += sum(1 for w in table[d] if w not in reducible)
        n_piv += sum(1 for w in pivots if words.degree(w) == d)
        rows.append(
            {
                "degree": d,
                "ls": n_ls,
                "irr": n_irr,
                "pivots": n_piv,
                "ok": n_ls == n_irr + n_piv,
            }
        )
    ok = not bad and all(r["ok"] for r in rows)
    return ok, rows


def check_gsb_assoc(system, degree_bound):
    """The associative twin's verdict over the commutator-expanded
    instance set.  Values are plain products/substitutions (no special
    normal words on this side); w need not be LS.  Returns
    (verdict, entries)."""
    assoc = system.associative()
    descs = enumerate_instances(system, degree_bound)
    leads = [(d, system.expected_lead(d)) for d in descs]
    entries = []
    verdict = True

    def _settle(kind, w, value):
        nonlocal verdict
        nf = assoc.normal_form(value)
        ok = nf.is_zero()
        verdict = verdict and ok
        entries.append((kind, w, ok))

    for w, d1, d2, q1, q2 in _intersections(leads, degree_bound):
        u = w[len(system.expected_lead(d1)) :]
        v = w[: len(w) - len(system.expected_lead(d2))]
        f = assoc.instance_expansion(d1)
        g = assoc.instance_expansion(d2)
        value = f * poly.OpPolynomial.from_word(u) - poly.OpPolynomial.from_word(v) * g
        _settle("intersection", w, value)
    for w, d1, d2, q in _includings(leads):
        f = assoc.instance_expansion(d1)
        g = assoc.instance_expansion(d2)
        value = f - poly.OpPolynomial(
            {words.substitute(q, uw): c for uw, c in g.terms.items()}
        )
        _settle("including", w, value)
    return verdict, entries


def equivalence_crosschecks(system, degree_bound, seed=0, lie_verdict=None):
    """Run the independent characterizations and compare.

    For a positive verdict all of them must come back true; the
    dimension audit is only meaningful (and only run) when the
    composition check passed.  For a negative verdict the bounded
    equivalences require the fork check and the associative twin to
    flag the failure too.
    """
    if lie_verdict is None:
        lie_verdict = check_gsb(system, degree_bound).verdict
    forks_ok, _fw, forks_n = check_forks(system, degree_bound)
    strat_ok, strat_n = check_strategy_independence(system, degree_bound, seed=seed)
    members_ok, members_n = check_random_ideal_members(
        system, degree_bound, count=50, seed=seed
    )
    cd_ok = None
    if lie_verdict:
        cd_ok, _rows = cd_crosscheck(system, degree_bound)
    assoc_ok, assoc_entries = check_gsb_assoc(system, degree_bound)
    if lie_verdict:
        agree = forks_ok and strat_ok and members_ok and bool(cd_ok) and assoc_ok
    else:
        agree = (not forks_ok) and (not assoc_ok)
    return {
        "compositions_trivial": lie_verdict,
        "forks_joinable": forks_ok,
        "forks_checked": forks_n,
        "strategy_independent": strat_ok,
        "strategies_sampled": strat_n,
        "random_ideal_members_reduce": members_ok,
        "random_members_checked": members_n,
        "cd_identity": cd_ok,
        "associative_verdict": assoc_ok,
        "associative_compositions": len(assoc_entries),
        "agree": agree,
    }
