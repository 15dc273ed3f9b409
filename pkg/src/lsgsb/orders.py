"""The two invariant monomial orders and their checkable properties.

``dl`` (degree-first) and ``dt`` (letter-degree-first) are total orders
on bracketed words over a fixed alphabet; see ``_pure`` for the exact
recursions.  Both are *invariant*: u > v implies q|_u > q|_v for every
star word q, which is what makes leading terms behave under rewriting.
``dl`` is compatible with the total degree; ``dt`` is compatible with
the letter degree but not with the total degree (it trades operator
boxes for letters: |_xy_| > |_x_||_y_| under dt, the reverse under dl).

``check_monomial`` and ``check_invariant`` verify the two defining
properties exhaustively up to a degree bound and return counterexamples
when they fail, so a deliberately broken order is caught with a witness
rather than a bare False.
"""

from __future__ import annotations

import functools

from . import lyndon, words
from ._backend import kernel

LESS = -1
EQUAL = 0
GREATER = 1


def compare_dl(u, v):
    """Degree-first compare; returns LESS/EQUAL/GREATER (-1/0/+1)."""
    return kernel.cmp_dl(u, v)


def compare_dt(u, v):
    """Letter-degree-first compare; returns LESS/EQUAL/GREATER."""
    return kernel.cmp_dt(u, v)


class MonomialOrder:
    """Handle bundling an order kind with an alphabet.

    Words carry letter *ranks*, so the alphabet only matters for
    parsing/printing and for enumeration bounds; two handles compare
    equal when kind and alphabet agree (enumeration caches key on
    this).
    """

    def __init__(self, kind, alphabet):
        if kind not in ("dl", "dt"):
            raise ValueError("unknown order kind %r (want 'dl' or 'dt')" % (kind,))
        self.kind = kind
        self.alphabet = alphabet
        if kind == "dl":
            self._cmp = kernel.cmp_dl
            self._prime_cmp = kernel.cmp_prime_dl
            self._lex_cmp = kernel.lex_cmp_dl
            self._is_alsw = kernel.is_alsw_dl
        else:
            self._cmp = kernel.cmp_dt
            self._prime_cmp = kernel.cmp_prime_dt
            self._lex_cmp = kernel.lex_cmp_dt
            self._is_alsw = kernel.is_alsw_dt

    # -- raw comparators ----------------------------------------------------

    def compare(self, u, v):
        return self._cmp(u, v)

    def prime_compare(self, p, q):
        return self._prime_cmp(p, q)

    def lex_compare(self, u, v):
        """The induced lex comparator (empty word greatest)."""
        return self._lex_cmp(u, v)

    def is_alsw(self, w):
        return self._is_alsw(w)

    # -- conveniences ---------------------------------------------------------

    def greater(self, u, v):
        return self._cmp(u, v) > 0

    def less(self, u, v):
        return self._cmp(u, v) < 0

    def key(self):
        """A sort key; ``sorted(ws, key=order.key())`` sorts ascending."""
        return functools.cmp_to_key(self._cmp)

    def sort(self, ws, reverse=False):
        return sorted(ws, key=self.key(), reverse=reverse)

    def max(self, ws):
        ws = list(ws)
        if not ws:
            raise ValueError("max of no words")
        best = ws[0]
        for w in ws[1:]:
            if self._cmp(w, best) > 0:
                best = w
        return best

    def degree_weight(self, w):
        """The degree this order is compatible with (deg for dl, deg_X for dt)."""
        if self.kind == "dl":
            return kernel.word_deg(w)
        return kernel.word_deg_x(w)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and self.kind == other.kind
            and self.alphabet == other.alphabet
        )

    def __hash__(self):
        return hash((self.kind, self.alphabet))

    def __repr__(self):
        return "MonomialOrder(%r, %r)" % (self.kind, self.alphabet)


def get_order(kind, alphabet):
    return MonomialOrder(kind, alphabet)


# ---------------------------------------------------------------------------
# exhaustive property checks


def _iter_words(alphabet, bound, operated=True):
    by_deg = words.all_words(alphabet, bound, operated)
    out = []
    for d in range(1, bound + 1):
        out.extend(by_deg[d])
    return out


def check_total(order, degree_bound, operated=True):
    """Totality + antisymmetry + transitivity on all words <= bound.

    Totality and antisymmetry are checked on all pairs; transitivity on
    the sorted chain (sortedness under a total compare implies it).
    Returns (True, None) or (False, witness).
    """
    ws = _iter_words(order.alphabet, degree_bound, operated)
    for i, u in enumerate(ws):
        for v in ws[i + 1 :]:
            c1 = order.compare(u, v)
            c2 = order.compare(v, u)
            if c1 == 0 or c2 == 0 or c1 != -c2:
                return False, (u, v)
    return True, None


def check_monomial(order, degree_bound, operated=True, compare=None):
    """Invariance of the order under star substitution, exhaustively.

    For every context q and the list of all words sorted ascending, the
    mapped list (q|_w) must again be ascending; that is equivalent to
    u > v  =>  q|_u > q|_v over all pairs, but needs only |W| - 1
    comparisons per context.  Returns (True, None) or
    (False, (q, u, v)) with u > v yet q|_u <= q|_v.
    """
    if compare is None:
        compare = order.compare
    ws = order.sort(_iter_words(order.alphabet, degree_bound, operated))
    ctx_by_deg = words.all_contexts(order.alphabet, degree_bound, operated)
    for d in range(1, degree_bound + 1):
        for q in ctx_by_deg[d]:
            prev = None
            prev_word = None
            for w in ws:
                cur = words.substitute(q, w)
                if prev is not None and compare(cur, prev) <= 0:
                    return False, (q, w, prev_word)
                prev = cur
                prev_word = w
    return True, None


def check_invariant(order, degree_bound, operated=True):
    """Restriction property: on words u_1...u_n vs any permutation of the
    same primes, the monomial order agrees with the induced lex order.

    Returns (True, None) or (False, (w, sigma_w)).
    """
    import itertools

    ws = _iter_words(order.alphabet, degree_bound, operated)
    for w in ws:
        if len(w) < 2 or len(w) > 6:
            continue
        for perm in itertools.permutations(w):
            if perm == w:
                continue
            mono = order.compare(w, perm)
            lex = order.lex_compare(w, perm)
            if (mono > 0) != (lex > 0) or (mono == 0) != (lex == 0):
                return False, (w, perm)
    return True, None


def leading_word_of_map(order, q, ws):
    """Largest q|_w over w in ws; helper used by invariance diagnostics."""
    return order.max([words.substitute(q, w) for w in ws])
