"""Lyndon-Shirshov bracketed words: tests, bracketing, enumeration.

Conventions (greatest-first throughout):

* the induced lex order on prime sequences puts the empty word on top,
  so a proper prefix is greater than any extension;
* w is an *associative* Lyndon-Shirshov word (ALSW) iff w >_lex v for
  every proper suffix v;
* a bracketed word is Lyndon-Shirshov (LSBW) when this holds
  hereditarily: the top-level prime sequence is an ALSW and the inner
  word of every operator prime is again an LSBW;
* the standard (Shirshov) bracketing of an ALSW w of breadth >= 2 is
  [w] = ([u][v]) where v is the longest proper suffix of w that is
  itself an ALSW; applied hereditarily it maps LSBWs to nonassociative
  LS bracketed words (NLSWs), the monomial basis of the free Lie
  algebra inside the free operated associative algebra.

The number of plain (operator-free) Lyndon-Shirshov words in k letters
with exactly n letters is Witt's necklace number
(1/n) sum_{d | n} mu(d) k^(n/d).
"""

from __future__ import annotations

import functools

from . import words


def _mobius(n):
    """Moebius function via trial-division factorization (n is small)."""
    if n == 1:
        return 1
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0  # squared prime factor
            result = -result
        else:
            p += 1
    if n > 1:
        result = -result
    return result


def witt_count(k, n):
    """Number of plain Lyndon-Shirshov words of length n over k letters."""
    if n < 1 or k < 1:
        raise ValueError("witt_count needs k >= 1, n >= 1")
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _mobius(d) * k ** (n // d)
    assert total % n == 0
    return total // n


# ---------------------------------------------------------------------------
# generic comparators (arbitrary prime order); the kernels cover dl/dt


def lex_compare(u, v, prime_cmp):
    """Induced lex compare of prime sequences; empty word greatest."""
    for a, b in zip(u, v):
        c = prime_cmp(a, b)
        if c:
            return c
    if len(u) == len(v):
        return 0
    return 1 if len(u) < len(v) else -1


def is_alsw(w, prime_cmp):
    """Associative LS test: w >_lex every proper suffix."""
    n = len(w)
    if n == 0:
        return False
    for i in range(1, n):
        if lex_compare(w, w[i:], prime_cmp) <= 0:
            return False
    return True


def standard_split(w, prime_cmp):
    """Split an ALSW of breadth >= 2 as u v with v the longest proper
    ALSW suffix (the Shirshov standard factorization)."""
    if len(w) < 2:
        raise ValueError("standard_split needs breadth >= 2")
    for i in range(1, len(w)):
        if is_alsw(w[i:], prime_cmp):
            return w[:i], w[i:]
    raise ValueError("no Lyndon-Shirshov suffix: %r is not an ALSW" % (w,))


def shirshov_bracketing(w, prime_cmp, leaf=None):
    """Standard bracketing of an ALSW over an ordered prime set.

    ``leaf`` maps each prime to its tree; by default letters map to
    themselves and operator primes are rejected (use ``bracketing_of``
    for the hereditary operated version).
    """
    if leaf is None:
        leaf = _letter_leaf
    if not is_alsw(w, prime_cmp):
        raise ValueError("not an ALSW: %r" % (w,))
    return _shirshov(w, prime_cmp, leaf)


def _letter_leaf(p):
    if isinstance(p, int):
        return p
    raise ValueError(
        "operator prime %r needs a hereditary bracketing; use bracketing_of" % (p,)
    )


def _shirshov(w, prime_cmp, leaf):
    if len(w) == 1:
        return leaf(w[0])
    u, v = standard_split(w, prime_cmp)
    return (_shirshov(u, prime_cmp, leaf), _shirshov(v, prime_cmp, leaf))


# ---------------------------------------------------------------------------
# hereditary (operated) versions


def is_lsbw(w, order):
    """Hereditary LS test for bracketed words under the given order."""
    return _is_lsbw(w, order.prime_compare)


def _is_lsbw(w, prime_cmp):
    for p in w:
        if isinstance(p, tuple) and not _is_lsbw(p, prime_cmp):
            return False
    return is_alsw(w, prime_cmp)


def bracketing_of(w, order):
    """Hereditary standard bracketing of an LS bracketed word.

    Operator primes are bracketed recursively, then the top-level ALSW
    is Shirshov-bracketed with those trees as leaves.  Results are
    memoized per order kind.
    """
    key = (order.kind, w)
    cached = _BRACKETING_CACHE.get(key)
    if cached is not None:
        return cached
    pc = order.prime_compare

    def leaf(p):
        if isinstance(p, int):
            return p
        return (bracketing_of(p, order),)

    if not _is_lsbw(w, pc):
        raise ValueError("not a Lyndon-Shirshov bracketed word: %r" % (w,))
    tree = _shirshov(w, pc, leaf)
    _BRACKETING_CACHE[key] = tree
    return tree


_BRACKETING_CACHE = {}


def is_nlsw(t, order):
    """Nonassociative LS test for a bracketed tree.

    A letter is an NLSW; |_t_| is an NLSW iff t is; a pair (u v) is an
    NLSW iff both halves are, the underlying word is an ALSW, and when
    u = (u1 u2) the underlying word of v is >=_lex that of u2.
    """
    pc = order.prime_compare
    return _is_nlsw(t, pc)


def _is_nlsw(t, pc):
    if isinstance(t, int):
        return t != words.STAR
    if len(t) == 1:
        return _is_nlsw(t[0], pc)
    left, right = t
    if not (_is_nlsw(left, pc) and _is_nlsw(right, pc)):
        return False
    if not is_alsw(words.forget_brackets(t), pc):
        return False
    if isinstance(left, tuple) and len(left) == 2:
        u2 = words.forget_brackets(left[1])
        v = words.forget_brackets(right)
        if lex_compare(v, u2, pc) < 0:
            return False
    return True


# ---------------------------------------------------------------------------
# enumeration, degree by degree


class _LsbwTable:
    """Incrementally extended table of LS bracketed words for one
    (alphabet, order, operated) triple, grouped and sorted by degree."""

    def __init__(self, alphabet, order, operated):
        self.alphabet = alphabet
        self.order = order
        self.operated = operated
        self.by_degree = {}
        self.max_done = 0

    def extend(self, max_degree):
        pool = {1: list(self.alphabet.letters())}
        for d in range(2, self.max_done + 1):
            if self.operated:
                pool[d] = list(self.by_degree[d - 1])
        is_top = self.order.is_alsw
        for d in range(self.max_done + 1, max_degree + 1):
            if self.operated and d >= 2:
                pool[d] = list(self.by_degree[d - 1])
            found = [w for w in words._prime_sequences(d, pool) if is_top(w)]
            found.sort(key=self.order.key(), reverse=True)
            self.by_degree[d] = found
        self.max_done = max(self.max_done, max_degree)


_LSBW_TABLES = {}


def _table(alphabet, order, operated):
    key = (alphabet.names, order.kind, operated)
    table = _LSBW_TABLES.get(key)
    if table is None:
        table = _LsbwTable(alphabet, order, operated)
        _LSBW_TABLES[key] = table
    return table


def lsbw_by_degree(alphabet, order, max_degree, operated=True):
    """LS bracketed words grouped by degree (dict degree -> sorted list).

    Soundness of the sieve: every operator prime of an LSBW wraps an
    LSBW of smaller degree, so building the degree-d prime pool from the
    degree-(d-1) LS words and filtering prime sequences by the top-level
    ALSW test enumerates exactly the hereditary LS words.
    """
    table = _table(alphabet, order, operated)
    if table.max_done < max_degree:
        table.extend(max_degree)
    return {d: list(table.by_degree[d]) for d in range(1, max_degree + 1)}


def enumerate_lsbw(alphabet, order, max_degree, operated=True, prime_cmp=None):
    """All LS bracketed words of degree <= max_degree with bracketings.

    Returns a list of pairs (word, standard bracketing), degree by
    degree, each degree sorted descending in the order.  A caller
    supplied ``prime_cmp`` overrides the order's own prime comparator
    (the enumeration then bypasses the shared cache).
    """
    if prime_cmp is not None:
        return _enumerate_custom(alphabet, max_degree, operated, prime_cmp)
    by_degree = lsbw_by_degree(alphabet, order, max_degree, operated)
    out = []
    for d in range(1, max_degree + 1):
        for w in by_degree[d]:
            out.append((w, bracketing_of(w, order)))
    return out


def _enumerate_custom(alphabet, max_degree, operated, prime_cmp):
    pool = {1: list(alphabet.letters())}
    by_degree = {}
    for d in range(1, max_degree + 1):
        if operated and d >= 2:
            pool[d] = list(by_degree[d - 1])
        found = [w for w in words._prime_sequences(d, pool) if is_alsw(w, prime_cmp)]
        found.sort(key=functools.cmp_to_key(lambda a, b: lex_compare(a, b, prime_cmp)), reverse=True)
        by_degree[d] = found

    def leaf(p):
        if isinstance(p, int):
            return p
        return (_bracket_custom(p),)

    def _bracket_custom(w):
        return _shirshov(w, prime_cmp, leaf)

    out = []
    for d in range(1, max_degree + 1):
        for w in by_degree[d]:
            out.append((w, _bracket_custom(w)))
    return out
