"""Special normal words and the operator-identity rewriting engines.

Given a set S of monic Lie polynomials, each pair (q, s) of a star word
q and some s in S with q|_{s̄} a Lyndon-Shirshov bracketed word induces
the rewriting rule

    [q|_{s̄}]  ->  [q|_{s̄}] - [q|_s]_{s̄},

where [q|_s]_{s̄} is the *special normal s-word*: the canonical
Lie-bracketed placement of s inside the context q, built so that its
leading word is exactly q|_{s̄} with coefficient 1.  Rewriting a Lie
polynomial replaces its coefficient at the basis element [q|_{s̄}] by
strictly smaller terms; iterating yields normal forms.

Construction of [q|_s]_{s̄} (constructive, from the leading-word
analysis of Shirshov factorizations): at the level of q holding the
star, the substituted word W contains s̄ as the prime segment starting
at the star position.  In the standard bracketing of W, the minimal
Shirshov subtree that starts exactly at that position spans s̄ followed
by a tail c; the tail factors greedily into Lyndon-Shirshov words
c_1, ..., c_m (the factors must be strictly increasing in the induced
lex order -- a violation raises a diagnostic), and the subtree is
replaced by the left-normed bracketing [[...[[s][c_1]]...][c_m]].
Outer levels only require re-bracketing with the special operator leaf
substituted.  Finally s is substituted for [s̄] multilinearly and the
result is straightened.

Two engines share the matching logic:

* ``LieRuleSet``    -- rewriting in the free operated Lie algebra over
  the NLSW basis; it is lazy: rules are generated on demand from a
  *shape* ('diff' with leads |_uv_|, 'rb' with leads |_u_||_v_|, or
  'raw' with explicit s's), so letter-degree-graded systems whose
  rewriting raises the total degree still reduce correctly.
* ``OpRuleSet``     -- the associative twin over OpPolynomials, where
  replacement is plain context substitution by the commutator-expanded
  instances.
"""

from __future__ import annotations

from fractions import Fraction

from . import lyndon, poly, words

_ONE = Fraction(1)
STAR = words.STAR


class SnwError(ValueError):
    """Special-normal-word precondition failed (q|_{s̄} not LS, etc.)."""


class SnwFactorizationError(SnwError):
    """The tail factorization violated the strict ordering constraint."""


class OrderShapeError(ValueError):
    """An instance's leading word does not have the family's shape under
    the active order (wrong order for the family)."""


class StepCapExceeded(RuntimeError):
    """normal_form exceeded its step cap; never expected for the
    terminating systems this package ships."""


# ---------------------------------------------------------------------------
# special normal words


def _span_tree(w, lo, pc):
    """Standard bracketing of the ALSW w annotated with position spans.

    Nodes are ('L', lo, hi, prime) or ('N', lo, hi, left, right).
    """
    if len(w) == 1:
        return ("L", lo, lo + 1, w[0])
    u, v = lyndon.standard_split(w, pc)
    left = _span_tree(u, lo, pc)
    right = _span_tree(v, lo + len(u), pc)
    return ("N", lo, lo + len(w), left, right)


def _min_cover(tree, start, end):
    """Minimal subtree starting exactly at ``start`` and covering ``end``."""
    best = None
    stack = [tree]
    while stack:
        node = stack.pop()
        if node[1] == start and node[2] >= end:
            if best is None or node[2] < best[2]:
                best = node
        if node[0] == "N":
            stack.append(node[3])
            stack.append(node[4])
    return best


def _cfl_factors(w, pc):
    """Greedy Lyndon-Shirshov factorization (longest ALSW prefix first)."""
    out = []
    i = 0
    n = len(w)
    while i < n:
        j = n
        while j > i + 1 and not lyndon.is_alsw(w[i:j], pc):
            j -= 1
        out.append(w[i:j])  # a single prime is always an ALSW
        i = j
    return out


def _leaf_tree(p, order):
    if isinstance(p, int):
        return p
    return (lyndon.bracketing_of(p, order),)


def _bracket_factor(f, order):
    """Hereditary standard bracketing of an ALSW factor word."""
    return lyndon.shirshov_bracketing(
        f, order.prime_compare, leaf=lambda p: _leaf_tree(p, order)
    )


def _rebuild(node, target, replacement, order):
    if node is target:
        return replacement
    if node[0] == "L":
        return _leaf_tree(node[3], order)
    return (
        _rebuild(node[3], target, replacement, order),
        _rebuild(node[4], target, replacement, order),
    )


def _convert(node, special_pos, special_tree, order):
    if node[0] == "L":
        if node[1] == special_pos:
            return (special_tree,)
        return _leaf_tree(node[3], order)
    return (
        _convert(node[3], special_pos, special_tree, order),
        _convert(node[4], special_pos, special_tree, order),
    )


def _special_tree(q, sbar, order):
    """NA tree of q|_{s̄} with the sentinel leaf STAR in place of [s̄]."""
    pc = order.prime_compare
    path = words.star_path(q)
    level, idx = path[-1]
    W = level[:idx] + sbar + level[idx + 1 :]
    m = len(sbar)
    T = _span_tree(W, 0, pc)
    node = _min_cover(T, idx, idx + m)
    if node is None:
        raise SnwError(
            "no Shirshov factor of %r starts at the occurrence of %r" % (W, sbar)
        )
    tail = W[idx + m : node[2]]
    special = STAR
    if tail:
        factors = _cfl_factors(tail, pc)
        for a, b in zip(factors, factors[1:]):
            if lyndon.lex_compare(a, b, pc) > 0:
                raise SnwFactorizationError(
                    "tail factors %r are not non-decreasing in lex order"
                    % (factors,)
                )
        for f in factors:
            special = (special, _bracket_factor(f, order))
    current = _rebuild(T, node, special, order)
    inner_word = W
    for level, idx in reversed(path[:-1]):
        outer = level[:idx] + (inner_word,) + level[idx + 1 :]
        T = _span_tree(outer, 0, pc)
        current = _convert(T, idx, current, order)
        inner_word = outer
    return current


def _expand_with_sentinel(t, s_terms):
    """Raw commutator expansion with the sentinel leaf standing for s."""
    if isinstance(t, int):
        if t == STAR:
            return dict(s_terms)
        return {(t,): _ONE}
    if len(t) == 1:
        return {(w,): c for w, c in _expand_with_sentinel(t[0], s_terms).items()}
    f = _expand_with_sentinel(t[0], s_terms)
    g = _expand_with_sentinel(t[1], s_terms)
    out = {}
    for u, cu in f.items():
        for v, cv in g.items():
            c = cu * cv
            for key, sign in ((u + v, c), (v + u, -c)):
                new = out.get(key, 0) + sign
                if new:
                    out[key] = new
                else:
                    out.pop(key, None)
    return out


def special_normal_word(q, s, order):
    """The special normal s-word [q|_s]_{s̄} as a LiePolynomial.

    Preconditions: q is a star word, s is monic, and q|_{s̄} is a
    Lyndon-Shirshov bracketed word.  The result's expansion is
    q|_{s̄} + (strictly smaller terms); leading coefficient 1.
    """
    if not words.is_star_word(q):
        raise SnwError("not a star word: %r" % (q,))
    sbar = s.leading_word(order)
    if s.leading_coeff(order) != 1:
        raise SnwError("s must be monic")
    w = words.substitute(q, sbar)
    if not lyndon.is_lsbw(w, order):
        raise SnwError("q|_{sbar} = %r is not a Lyndon-Shirshov bracketed word" % (w,))
    if q == (STAR,):
        return s
    tree = _special_tree(q, sbar, order)
    raw = _expand_with_sentinel(tree, s.expand().terms)
    result = poly.lie_straighten(poly.OpPolynomial(raw), order)
    assert result.leading_word(order) == w and result.leading_coeff(order) == 1, (
        "special normal word must lead with q|_{sbar}"
    )
    return result


# ---------------------------------------------------------------------------
# rule sets


class RewriteRule:
    """One materialized rule [q|_{s̄}] -> rhs with its provenance."""

    __slots__ = ("lhs_word", "lhs_tree", "rhs", "context", "descriptor")

    def __init__(self, lhs_word, lhs_tree, rhs, context, descriptor):
        self.lhs_word = lhs_word
        self.lhs_tree = lhs_tree
        self.rhs = rhs
        self.context = context
        self.descriptor = descriptor

    def validate(self, order):
        for t in self.rhs.terms:
            w = words.forget_brackets(t)
            if w == self.lhs_word:
                raise ValueError("rule is not simple: lhs occurs in rhs")
            if not order.less(w, self.lhs_word):
                raise ValueError("rhs word %r not below lhs %r" % (w, self.lhs_word))
        return True

    def __repr__(self):
        return "RewriteRule(lhs=%r)" % (self.lhs_word,)


class LieRuleSet:
    """Lazy rewriting system in the free operated Lie algebra.

    ``shape`` fixes how reducible leading words look and how instance
    descriptors are read:

    * 'diff' -- leads |_uv_|; a match is an operator prime of breadth
      >= 2, split into LS halves (the standard split for rewriting, all
      splits for rule/composition listings); descriptor ('diff', u, v).
    * 'rb'   -- leads |_u_||_v_|; a match is an adjacent pair of
      operator primes whose contents are LS with u > v in the monomial
      order (adjacent pairs in the wrong order are *not* reducible);
      descriptor ('rb', u, v).
    * 'raw'  -- explicit list of monic polynomials; a match is an
      occurrence of some s̄ as a prime segment; descriptor ('raw', i).

    ``instance_fn(desc) -> monic LiePolynomial`` supplies the relation
    for a descriptor ('diff'/'rb' shapes); its leading word must equal
    the shape's lead, otherwise ``OrderShapeError`` is raised -- that is
    the "wrong order for this family" failure mode.
    """

    def __init__(self, order, shape, instance_fn=None, raw=None, name="", params=None):
        if shape not in ("diff", "rb", "raw"):
            raise ValueError("unknown shape %r" % (shape,))
        if shape == "raw":
            raw = [s if _is_monic(s, order) else s.monic(order) for s in (raw or [])]
            for s in raw:
                if s.is_zero():
                    raise ValueError("zero polynomial in a rule set")
        elif instance_fn is None:
            raise ValueError("shape %r needs an instance_fn" % (shape,))
        self.order = order
        self.shape = shape
        self.instance_fn = instance_fn
        self.raw = raw or []
        self.name = name or shape
        self.params = dict(params or {})
        self._instances = {}
        self._snw_cache = {}
        self._raw_leads = [s.leading_word(order) for s in self.raw]

    # -- matching -----------------------------------------------------------

    def find_matches(self, w, all_splits=False):
        """All (context, descriptor) matches in w, outermost-leftmost
        first; at one position, top-level matches precede descents."""
        out = []
        order = self.order
        pc = order.prime_compare
        shape = self.shape

        def scan(level, wrap):
            n = len(level)
            for i in range(n):
                p = level[i]
                if shape == "diff":
                    if isinstance(p, tuple) and len(p) >= 2:
                        # valid splits: both halves LS and u >_lex v (the
                        # instance-pair condition; for an ALSW prime the
                        # first valid split is the standard one)
                        q = None
                        for j in range(1, len(p)):
                            u, v = p[:j], p[j:]
                            if (
                                lyndon._is_lsbw(u, pc)
                                and lyndon._is_lsbw(v, pc)
                                and lyndon.lex_compare(u, v, pc) > 0
                            ):
                                if q is None:
                                    q = wrap(level[:i] + (STAR,) + level[i + 1 :])
                                out.append((q, ("diff", u, v)))
                                if not all_splits:
                                    break
                elif shape == "rb":
                    if (
                        i + 1 < n
                        and isinstance(p, tuple)
                        and isinstance(level[i + 1], tuple)
                        and lyndon._is_lsbw(p, pc)
                        and lyndon._is_lsbw(level[i + 1], pc)
                        and order.compare(p, level[i + 1]) > 0
                    ):
                        q = wrap(level[:i] + (STAR,) + level[i + 2 :])
                        out.append((q, ("rb", p, level[i + 1])))
                else:
                    for si, sbar in enumerate(self._raw_leads):
                        m = len(sbar)
                        if level[i : i + m] == sbar:
                            q = wrap(level[:i] + (STAR,) + level[i + m :])
                            out.append((q, ("raw", si)))
                if isinstance(p, tuple):
                    def wrap_inner(inner, _i=i, _level=level, _wrap=wrap):
                        return _wrap(_level[:_i] + (inner,) + _level[_i + 1 :])

                    scan(p, wrap_inner)

        scan(w, lambda x: x)
        return out

    def is_reducible(self, w):
        return bool(self.find_matches(w))

    # -- instances and special normal words ----------------------------------

    def expected_lead(self, desc):
        if desc[0] == "diff":
            return (desc[1] + desc[2],)  # |_uv_|
        if desc[0] == "rb":
            return (desc[1], desc[2])  # |_u_||_v_|
        return self._raw_leads[desc[1]]

    def instance(self, desc):
        """The monic relation for a descriptor, lead-shape validated."""
        cached = self._instances.get(desc)
        if cached is None:
            if desc[0] == "raw":
                cached = self.raw[desc[1]]
            else:
                cached = self.instance_fn(desc)
                lead = cached.leading_word(self.order)
                if lead != self.expected_lead(desc) or cached.leading_coeff(self.order) != 1:
                    raise OrderShapeError(
                        "instance %r leads with %r, expected %r: "
                        "the active order does not fit this family"
                        % (desc, lead, self.expected_lead(desc))
                    )
            self._instances[desc] = cached
        return cached

    def snw(self, q, desc):
        """Cached special normal word for (context, descriptor)."""
        key = (q, desc)
        cached = self._snw_cache.get(key)
        if cached is None:
            cached = special_normal_word(q, self.instance(desc), self.order)
            self._snw_cache[key] = cached
        return cached

    # -- rewriting ------------------------------------------------------------

    def rewrite_step(self, f, strategy="leading"):
        """One deterministic step, or None at a normal form.

        'leading': largest reducible support word, first match.
        'leading-last': largest reducible support word, last match.
        'smallest': smallest reducible support word, first match.
        """
        by_word = {}
        for t, c in f.terms.items():
            by_word[words.forget_brackets(t)] = c
        rev = strategy != "smallest"
        for w in self.order.sort(by_word, reverse=rev):
            matches = self.find_matches(w)
            if matches:
                q, desc = matches[-1] if strategy == "leading-last" else matches[0]
                c = by_word[w]
                g = f - self.snw(q, desc).scale(c)
                return g, (w, q, desc, c)
        return None

    def normal_form(self, f, step_cap=None, degree_bound=None, strategy="leading", want_trace=False):
        """Iterate rewrite_step to the unique irreducible form.

        The step cap (10 * support size * bound^2 by default) only
        guards against implementation bugs; the shipped systems
        terminate and never hit it.
        """
        if step_cap is None:
            if degree_bound is None:
                degree_bound = 2 * max(
                    [words.degree(w) for w in f.support_words()] or [1]
                ) + 4
            step_cap = 10 * max(1, len(f.terms)) * degree_bound * degree_bound
        trace = []
        g = f
        steps = 0
        while True:
            r = self.rewrite_step(g, strategy)
            if r is None:
                return (g, trace) if want_trace else g
            g, step = r
            if want_trace:
                trace.append(step)
            steps += 1
            if steps > step_cap:
                raise StepCapExceeded(
                    "exceeded %d rewriting steps; system %r may not terminate"
                    % (step_cap, self.name)
                )

    def joinable(self, f, g, step_cap=None):
        return self.normal_form(f, step_cap) == self.normal_form(g, step_cap)

    # -- materialized rules ----------------------------------------------------

    def rules(self, degree_bound):
        """All rules with deg(lhs) <= bound, as RewriteRule objects."""
        out = []
        table = lyndon.lsbw_by_degree(self.order.alphabet, self.order, degree_bound)
        for d in range(1, degree_bound + 1):
            for w in table[d]:
                for q, desc in self.find_matches(w, all_splits=True):
                    lhs_tree = lyndon.bracketing_of(w, self.order)
                    rhs = poly.LiePolynomial.from_tree(lhs_tree) - self.snw(q, desc)
                    rule = RewriteRule(w, lhs_tree, rhs, q, desc)
                    rule.validate(self.order)
                    out.append(rule)
        return out

    def associative(self):
        """The associative twin over commutator-expanded instances."""
        return OpRuleSet(self)

    def __repr__(self):
        return "LieRuleSet(%s, shape=%r)" % (self.name, self.shape)


def _is_monic(s, order):
    return (not s.is_zero()) and s.leading_coeff(order) == 1


class OpRuleSet:
    """Associative rewriting over OpPolynomials, sharing a Lie system's
    matcher shapes and instance set (commutator-expanded).

    Replacement is plain context substitution: the term c * q|_{s̄} is
    replaced by c * (q|_{s̄} - q|_{expand(s)}).
    """

    def __init__(self, lie_system):
        self.lie = lie_system
        self.order = lie_system.order
        self._expanded = {}

    def instance_expansion(self, desc):
        cached = self._expanded.get(desc)
        if cached is None:
            cached = self.lie.instance(desc).expand()
            self._expanded[desc] = cached
        return cached

    def find_matches(self, w, all_splits=False):
        return self.lie.find_matches(w, all_splits)

    def is_reducible(self, w):
        return bool(self.find_matches(w))

    def rewrite_step(self, f, strategy="leading"):
        rev = strategy != "smallest"
        for w in self.order.sort(f.terms, reverse=rev):
            matches = self.find_matches(w)
            if matches:
                q, desc = matches[-1] if strategy == "leading-last" else matches[0]
                c = f.terms[w]
                s_exp = self.instance_expansion(desc)
                repl = poly.OpPolynomial(
                    {words.substitute(q, u): cu for u, cu in s_exp.terms.items()}
                )
                g = f - repl.scale(c)
                return g, (w, q, desc, c)
        return None

    def normal_form(self, f, step_cap=None, degree_bound=None, strategy="leading", want_trace=False):
        if step_cap is None:
            if degree_bound is None:
                degree_bound = 2 * max(
                    [words.degree(w) for w in f.terms] or [1]
                ) + 4
            step_cap = 10 * max(1, len(f.terms)) * degree_bound * degree_bound
        trace = []
        g = f
        steps = 0
        while True:
            r = self.rewrite_step(g, strategy)
            if r is None:
                return (g, trace) if want_trace else g
            g, step = r
            if want_trace:
                trace.append(step)
            steps += 1
            if steps > step_cap:
                raise StepCapExceeded("exceeded %d associative steps" % (step_cap,))

    def joinable(self, f, g, step_cap=None):
        return self.normal_form(f, step_cap) == self.normal_form(g, step_cap)


# ---------------------------------------------------------------------------
# module-level conveniences matching the operation contracts


def build_rules_lie(S, alphabet, order, degree_bound):
    """Materialize the rule list of the raw system S up to the bound."""
    if alphabet != order.alphabet:
        raise ValueError("alphabet mismatch with the order handle")
    system = LieRuleSet(order, "raw", raw=list(S), name="raw")
    return system.rules(degree_bound)


def rewrite_step(f, system, strategy="leading"):
    return system.rewrite_step(f, strategy)


def normal_form(f, system, step_cap=None, **kw):
    return system.normal_form(f, step_cap=step_cap, **kw)


def joinable(f, g, system, step_cap=None):
    return system.joinable(f, g, step_cap)


def validate_lead_shape(system, degree_bound=2):
    """Eagerly build the letter-pair instances and check their leads.

    Raises OrderShapeError when the active order does not put the
    family's reducible shape on top (e.g. a differential family under
    the degree-first order).  Returns the number of instances checked.
    """
    if system.shape == "raw":
        return 0
    letters = system.order.alphabet.letters()
    count = 0
    for a in letters:
        for b in letters:
            u, v = (a,), (b,)
            if system.shape == "diff":
                ok = system.order.lex_compare(u, v) > 0
            else:
                ok = system.order.compare(u, v) > 0
            if ok:
                system.instance((system.shape, u, v))
                count += 1
    return count
