"""Pure-Python hot kernels shared by the whole package.

Encoding of bracketed words (elements of the free operated monoid):

* a letter prime is a non-negative ``int``, its rank in the alphabet;
  rank 0 is the *largest* letter;
* the hole of a star word is the ``int`` ``-1`` and measures like a
  letter;
* an operator prime |_u_| is the ``tuple`` that encodes the inner word
  u;
* a word is a nonempty ``tuple`` of primes.

Two invariant monomial orders are implemented.

``cmp_dl`` (degree-first):  breadth-1 operator words compare by their
contents; otherwise the tuple (degree, breadth, primes...) decides
lexicographically, with primes comparing recursively.  At equal degree
a larger breadth wins, so |_x_||_y_| > |_x |_y_|_| > |_xy_|.

``cmp_dt`` (letter-degree-first):  breadth-1 operator words compare by
their contents, and an operator word beats a bare letter; otherwise the
tuple (letter degree, primes...) decides lexicographically.  If the
shared primes all tie, the longer prime sequence is greater -- that tie
rule is kept only for totality; it is unreachable in the nonunital
setting because every prime has letter degree at least one.

Each order induces a lexicographic comparator on prime sequences under
the convention that the empty word is *greatest*: a proper prefix is
greater than any of its extensions.  ``is_alsw_*`` then tests the
associative Lyndon-Shirshov property: w is an ALSW iff w >_lex v for
every proper suffix v of w.

All comparators return -1, 0, or +1, where +1 means the first argument
is greater.  ``_speedups.pyx`` is the compiled twin of this module; the
two must stay behaviourally identical (the test suite asserts this on
random words).
"""

from __future__ import annotations


def word_deg(w):
    """Degree deg(w): total count of letters and operator boxes in w."""
    d = 0
    for p in w:
        if isinstance(p, int):
            d += 1
        else:
            d += 1 + word_deg(p)
    return d


def word_deg_x(w):
    """Letter degree deg_X(w): letters only, operator boxes not counted."""
    d = 0
    for p in w:
        if isinstance(p, int):
            d += 1
        else:
            d += word_deg_x(p)
    return d


def cmp_prime_dl(a, b):
    """Compare two primes as breadth-1 words under the degree-first order."""
    if isinstance(a, int):
        if isinstance(b, int):
            if a == b:
                return 0
            return 1 if a < b else -1  # rank 0 is the largest letter
        return -1  # a letter has degree 1, an operator prime at least 2
    if isinstance(b, int):
        return 1
    return cmp_dl(a, b)


def cmp_dl(u, v):
    """Degree-first invariant monomial order; returns -1/0/+1."""
    if u == v:
        return 0
    if len(u) == 1 and len(v) == 1 and isinstance(u[0], tuple) and isinstance(v[0], tuple):
        return cmp_dl(u[0], v[0])
    du = word_deg(u)
    dv = word_deg(v)
    if du != dv:
        return 1 if du > dv else -1
    if len(u) != len(v):
        return 1 if len(u) > len(v) else -1
    for a, b in zip(u, v):
        c = cmp_prime_dl(a, b)
        if c:
            return c
    return 0


def cmp_prime_dt(a, b):
    """Compare two primes as breadth-1 words under the letter-degree order."""
    if isinstance(a, int):
        if isinstance(b, int):
            if a == b:
                return 0
            return 1 if a < b else -1
        return -1  # an operator word beats a bare letter
    if isinstance(b, int):
        return 1
    return cmp_dt(a, b)


def cmp_dt(u, v):
    """Letter-degree-first invariant monomial order; returns -1/0/+1."""
    if u == v:
        return 0
    u_op = len(u) == 1 and isinstance(u[0], tuple)
    v_op = len(v) == 1 and isinstance(v[0], tuple)
    if u_op and v_op:
        return cmp_dt(u[0], v[0])
    if u_op and len(v) == 1:
        return 1  # operator word beats a bare letter
    if v_op and len(u) == 1:
        return -1
    du = word_deg_x(u)
    dv = word_deg_x(v)
    if du != dv:
        return 1 if du > dv else -1
    for a, b in zip(u, v):
        c = cmp_prime_dt(a, b)
        if c:
            return c
    # All shared primes tie: the longer prime sequence is greater.  In the
    # nonunital setting this point is unreachable (every prime has letter
    # degree >= 1, so equal letter degree forces equal breadth here).
    if len(u) != len(v):
        return 1 if len(u) > len(v) else -1
    return 0


def lex_cmp_dl(u, v):
    """Lex comparator induced by the degree-first prime order.

    The empty word is greatest: if all shared primes tie, the shorter
    sequence is the greater one.
    """
    for a, b in zip(u, v):
        c = cmp_prime_dl(a, b)
        if c:
            return c
    if len(u) == len(v):
        return 0
    return 1 if len(u) < len(v) else -1


def lex_cmp_dt(u, v):
    """Lex comparator induced by the letter-degree prime order."""
    for a, b in zip(u, v):
        c = cmp_prime_dt(a, b)
        if c:
            return c
    if len(u) == len(v):
        return 0
    return 1 if len(u) < len(v) else -1


def is_alsw_dl(w):
    """ALSW test under the degree-first order: w >_lex every proper suffix."""
    n = len(w)
    if n == 0:
        return False
    for i in range(1, n):
        if lex_cmp_dl(w, w[i:]) <= 0:
            return False
    return True


def is_alsw_dt(w):
    """ALSW test under the letter-degree order."""
    n = len(w)
    if n == 0:
        return False
    for i in range(1, n):
        if lex_cmp_dt(w, w[i:]) <= 0:
            return False
    return True
