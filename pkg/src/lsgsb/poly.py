"""Exact polynomials over bracketed words, and Lie straightening.

Two layers share one coefficient type (``fractions.Fraction``; nothing
here ever touches floating point):

* ``OpPolynomial`` -- an element of the free operated associative
  algebra: a finite map from bracketed words to coefficients, with the
  concatenation product and the linear operator.

* ``LiePolynomial`` -- an element of the free operated Lie algebra,
  stored in the Lyndon-Shirshov monomial basis: a finite map from NLSW
  trees to coefficients.  The bracket expands through commutators and
  is straightened back.

Straightening rests on the triangularity of the basis: the commutator
expansion of the standard bracketing [w] of an LS word w is w plus
order-smaller words of the same degree, with leading coefficient 1.  So
``lie_straighten`` peels the largest word, emits its basis tree, and
subtracts the expansion; an input whose leading word is ever not an LS
bracketed word is not in the Lie subalgebra and is rejected.

The leading word of a Lie polynomial equals the largest underlying word
of its basis trees -- no expansion is needed (distinct NLSW trees have
distinct underlying words, and [w] leads with w).
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import lyndon, words

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NotLieElementError(ValueError):
    """Input to straightening lies outside the free Lie subalgebra."""


def _clean(terms):
    out = {}
    for k, c in terms.items():
        c = Fraction(c)
        if c:
            out[k] = c
    return out


def _add_into(acc, terms, scale=_ONE):
    for k, c in terms.items():
        new = acc.get(k, _ZERO) + scale * c
        if new:
            acc[k] = new
        else:
            acc.pop(k, None)


class OpPolynomial:
    """Element of the free operated associative algebra (nonunital)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean(terms) if terms else {}

    @classmethod
    def from_word(cls, w, coeff=1):
        return cls({w: Fraction(coeff)})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def support(self):
        return list(self.terms)

    def __eq__(self, other):
        return isinstance(other, OpPolynomial) and self.terms == other.terms

    def __add__(self, other):
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return OpPolynomial(acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        _add_into(acc, other.terms, -_ONE)
        return OpPolynomial(acc)

    def __neg__(self):
        return OpPolynomial({k: -c for k, c in self.terms.items()})

    def scale(self, a):
        a = Fraction(a)
        if not a:
            return OpPolynomial()
        return OpPolynomial({k: a * c for k, c in self.terms.items()})

    def __mul__(self, other):
        """Concatenation product, extended bilinearly."""
        acc = {}
        for u, cu in self.terms.items():
            for v, cv in other.terms.items():
                w = u + v
                new = acc.get(w, _ZERO) + cu * cv
                if new:
                    acc[w] = new
                else:
                    acc.pop(w, None)
        return OpPolynomial(acc)

    def op(self):
        """Apply the operator: each word w becomes the word |_w_|."""
        return OpPolynomial({(w,): c for w, c in self.terms.items()})

    def leading_word(self, order):
        if not self.terms:
            raise ValueError("leading word of the zero polynomial")
        return order.max(self.terms)

    def leading_coeff(self, order):
        return self.terms[self.leading_word(order)]

    def monic(self, order):
        c = self.leading_coeff(order)
        return self.scale(1 / c)

    def sorted_terms(self, order):
        ws = order.sort(self.terms, reverse=True)
        return [(w, self.terms[w]) for w in ws]

    def __repr__(self):
        return "OpPolynomial(%r)" % (self.terms,)


def commutator(f, g):
    """[f, g] = f g - g f in the associative layer."""
    return f * g - g * f


# ---------------------------------------------------------------------------
# commutator expansion of trees (memoized on raw dicts)

_EXPAND_CACHE = {}


def _expand_raw(t):
    """Commutator expansion of a tree as a raw dict word -> Fraction."""
    cached = _EXPAND_CACHE.get(t)
    if cached is not None:
        return cached
    if isinstance(t, int):
        out = {(t,): _ONE}
    elif len(t) == 1:
        out = {}
        for w, c in _expand_raw(t[0]).items():
            out[(w,)] = c
    else:
        f = _expand_raw(t[0])
        g = _expand_raw(t[1])
        out = {}
        for u, cu in f.items():
            for v, cv in g.items():
                c = cu * cv
                new = out.get(u + v, _ZERO) + c
                if new:
                    out[u + v] = new
                else:
                    out.pop(u + v, None)
                new = out.get(v + u, _ZERO) - c
                if new:
                    out[v + u] = new
                else:
                    out.pop(v + u, None)
    _EXPAND_CACHE[t] = out
    return out


def expand_tree(t):
    """Commutator expansion of a nonassociative bracketed word."""
    return OpPolynomial(dict(_expand_raw(t)))


class LiePolynomial:
    """Element of the free operated Lie algebra in the NLSW basis."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = _clean(terms) if terms else {}

    @classmethod
    def from_tree(cls, t, coeff=1):
        return cls({t: Fraction(coeff)})

    @classmethod
    def zero(cls):
        return cls()

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LiePolynomial) and self.terms == other.terms

    def __add__(self, other):
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return LiePolynomial(acc)

    def __sub__(self, other):
        acc = dict(self.terms)
        _add_into(acc, other.terms, -_ONE)
        return LiePolynomial(acc)

    def __neg__(self):
        return LiePolynomial({k: -c for k, c in self.terms.items()})

    def scale(self, a):
        a = Fraction(a)
        if not a:
            return LiePolynomial()
        return LiePolynomial({k: a * c for k, c in self.terms.items()})

    def op(self):
        """Apply the operator: |_t_| of an NLSW tree is again an NLSW."""
        return LiePolynomial({(t,): c for t, c in self.terms.items()})

    def expand(self):
        """Commutator expansion into the associative layer."""
        acc = {}
        for t, c in self.terms.items():
            _add_into(acc, _expand_raw(t), c)
        return OpPolynomial(acc)

    def bracket(self, other, order):
        """Lie bracket via expansion and straightening."""
        f = self.expand()
        g = other.expand()
        return lie_straighten(commutator(f, g), order)

    def support_words(self):
        return [words.forget_brackets(t) for t in self.terms]

    def leading_tree(self, order):
        if not self.terms:
            raise ValueError("leading tree of the zero polynomial")
        best = None
        best_w = None
        for t in self.terms:
            w = words.forget_brackets(t)
            if best_w is None or order.greater(w, best_w):
                best, best_w = t, w
        return best

    def leading_word(self, order):
        """Largest underlying word of the support trees.

        For NLSW keys this equals the leading word of the commutator
        expansion (the expansion of [w] leads with w, and distinct basis
        trees have distinct underlying words).
        """
        return words.forget_brackets(self.leading_tree(order))

    def leading_coeff(self, order):
        return self.terms[self.leading_tree(order)]

    def monic(self, order):
        return self.scale(1 / self.leading_coeff(order))

    def sorted_terms(self, order):
        ts = sorted(
            self.terms,
            key=lambda t: order.key()(words.forget_brackets(t)),
            reverse=True,
        )
        return [(t, self.terms[t]) for t in ts]

    def __repr__(self):
        return "LiePolynomial(%r)" % (self.terms,)


# ---------------------------------------------------------------------------
# straightening

_BASIS_EXPANSION_CACHE = {}


def _basis_expansion(w, order):
    """Raw expansion of the standard bracketing of the LS word w."""
    key = (order.kind, w)
    cached = _BASIS_EXPANSION_CACHE.get(key)
    if cached is None:
        cached = _expand_raw(lyndon.bracketing_of(w, order))
        assert cached.get(w) == _ONE, "basis expansion must lead with its own word"
        _BASIS_EXPANSION_CACHE[key] = cached
    return cached


def lie_straighten(f, order):
    """Rewrite a Lie element into the Lyndon-Shirshov monomial basis.

    ``f`` may be an ``OpPolynomial`` (commutator expansion of a Lie
    element), a ``LiePolynomial``, a single tree, or a dict from trees
    to coefficients (a formal bracket combination; the trees need not be
    NLSWs).  Raises ``NotLieElementError`` when the input is not in the
    Lie subalgebra.

    Loop invariant: rem is the expansion of (input - result).  Each pass
    peels the order-largest word w of rem; w must be an LS bracketed
    word (otherwise no Lie element has leading word w), contributes
    rem[w] * [w] to the result, and is eliminated by subtracting the
    basis expansion, which only reintroduces order-smaller words of the
    same degree.  Words of a fixed degree are finite, so this stops.
    """
    if isinstance(f, OpPolynomial):
        rem = dict(f.terms)
    elif isinstance(f, LiePolynomial):
        rem = {}
        for t, c in f.terms.items():
            _add_into(rem, _expand_raw(t), c)
    elif isinstance(f, dict):
        rem = {}
        for t, c in f.items():
            _add_into(rem, _expand_raw(t), Fraction(c))
    else:
        rem = dict(_expand_raw(f))

    result = {}
    while rem:
        w = order.max(rem)
        if not lyndon.is_lsbw(w, order):
            raise NotLieElementError(
                "leading word %r is not Lyndon-Shirshov; the input is not a Lie element" % (w,)
            )
        c = rem[w]
        t = lyndon.bracketing_of(w, order)
        result[t] = result.get(t, _ZERO) + c
        _add_into(rem, _basis_expansion(w, order), -c)
    return LiePolynomial(result)


# ---------------------------------------------------------------------------
# text and JSON formats


_COEFF_RE = re.compile(r"^(-?\d+(?:\s*/\s*\d+)?)\s*\*\s*")


def _split_terms(text):
    """Split a polynomial string on top-level + and - (paren aware).

    A +/- with nothing accumulated yet is a leading sign and stays with
    its term; ``_parse_term`` folds it into the coefficient.
    """
    parts = []
    depth = 0
    cur = []
    sign = 1
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if depth == 0 and ch in "+-" and "".join(cur).strip():
            parts.append((sign, "".join(cur).strip()))
            cur = []
            sign = 1 if ch == "+" else -1
        else:
            cur.append(ch)
    if "".join(cur).strip():
        parts.append((sign, "".join(cur).strip()))
    if not parts:
        raise words.WordSyntaxError("empty polynomial: %r" % (text,))
    return parts


def _parse_term(sign, term):
    """Split one term into (signed coefficient, word text)."""
    s = term.strip()
    if s.startswith("-"):
        sign = -sign
        s = s[1:].strip()
    elif s.startswith("+"):
        s = s[1:].strip()
    m = _COEFF_RE.match(s)
    if m:
        coeff = Fraction(m.group(1).replace(" ", ""))
        word_text = s[m.end() :].strip()
    else:
        coeff = _ONE
        word_text = s
    if not word_text:
        raise words.WordSyntaxError("term %r has no word part" % (term,))
    try:
        Fraction(word_text)
    except ValueError:
        pass
    else:
        raise words.WordSyntaxError("constant term %r not allowed (nonunital)" % (term,))
    return sign * coeff, word_text


def parse_op_poly(text, alphabet):
    """Parse ``c1*w1 + c2*w2 + ...`` into an ``OpPolynomial``.

    Coefficients are optional integers or fractions ``p/q``; words use
    the flat bracketed-word syntax.
    """
    acc = {}
    for sign, term in _split_terms(text):
        coeff, word_text = _parse_term(sign, term)
        w = words.parse_flat_word(word_text, alphabet)
        new = acc.get(w, _ZERO) + coeff
        if new:
            acc[w] = new
        else:
            acc.pop(w, None)
    return OpPolynomial(acc)


def _left_normed(w):
    """Formal tree reading a flat word as [[p1 p2] p3]...; operator
    contents are read the same way."""
    trees = []
    for p in w:
        if isinstance(p, int):
            trees.append(p)
        else:
            trees.append((_left_normed(p),))
    t = trees[0]
    for s in trees[1:]:
        t = (t, s)
    return t


def parse_lie_poly(text, alphabet, order):
    """Parse a Lie polynomial and straighten it into the NLSW basis.

    Terms may be trees in the pair syntax or flat words: a
    Lyndon-Shirshov flat word w is read as the basis element [w], any
    other flat word as the left-normed commutator of its primes (so
    ``P(y) P(x)`` is the bracket of P(y) with P(x), which straightens
    to -(P(x)P(y))).
    """
    formal = {}
    for sign, term in _split_terms(text):
        coeff, word_text = _parse_term(sign, term)
        if "(" in word_text.replace("P(", ""):
            t = words.parse_tree(word_text, alphabet)
        else:
            w = words.parse_flat_word(word_text, alphabet)
            if lyndon.is_lsbw(w, order):
                t = lyndon.bracketing_of(w, order)
            else:
                t = _left_normed(w)
        formal[t] = formal.get(t, _ZERO) + coeff
    return lie_straighten(formal, order)


def _format_coeff_word(coeff, word_text, first):
    if coeff < 0:
        lead = "-" if first else " - "
        coeff = -coeff
    else:
        lead = "" if first else " + "
    if coeff == 1:
        return "%s%s" % (lead, word_text)
    return "%s%s*%s" % (lead, coeff, word_text)


def format_op_poly(f, alphabet, order):
    """Render an ``OpPolynomial``; inverse of ``parse_op_poly``."""
    if f.is_zero():
        return "0"
    parts = []
    for w, c in f.sorted_terms(order):
        parts.append(_format_coeff_word(c, words.format_word(w, alphabet), not parts))
    return "".join(parts)


def format_lie_poly(f, alphabet, order):
    """Render a ``LiePolynomial`` over basis trees."""
    if f.is_zero():
        return "0"
    parts = []
    for t, c in f.sorted_terms(order):
        parts.append(_format_coeff_word(c, words.format_tree(t, alphabet), not parts))
    return "".join(parts)


def op_poly_to_json(f, alphabet, order):
    return [
        {"coeff": str(c), "word": words.format_word(w, alphabet)}
        for w, c in f.sorted_terms(order)
    ]


def lie_poly_to_json(f, alphabet, order):
    return [
        {"coeff": str(c), "word": words.format_tree(t, alphabet)}
        for t, c in f.sorted_terms(order)
    ]


def op_poly_from_json(items, alphabet):
    acc = {}
    for item in items:
        w = words.parse_flat_word(item["word"], alphabet)
        _add_into(acc, {w: Fraction(item["coeff"])})
    return OpPolynomial(acc)
