"""Shared oracles for the test suite.

Frozen constants in the tests were derived independently of the library
(classical and generalized Witt counting, direct recursive enumeration);
the functions here recompute them from first principles so a regression
in either the library or a frozen value is caught.
"""

from __future__ import annotations

from hypothesis import settings

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")


def mobius(n):
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


def classical_witt(k, n):
    """Dimension of the degree-n part of the free Lie algebra on k letters."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += mobius(d) * k ** (n // d)
    assert total % n == 0
    return total // n


def _poly_mul(a, b, cap):
    out = [0] * (cap + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > cap:
            continue
        for j, bj in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += ai * bj
    return out


def _poly_pow(base, exp, cap):
    result = [1] + [0] * cap
    for _ in range(exp):
        result = _poly_mul(result, base, cap)
    return result


def operated_lsbw_counts(k, max_degree):
    """Counts of Lyndon-Shirshov bracketed words by degree, via Witt counting.

    The free operated Lie algebra is the free Lie algebra on the graded
    set with k generators in degree 1 (the letters) and, in each degree
    n >= 2, one generator per basis word of degree n - 1 (the operator
    applied to it).  PBW for that graded free Lie algebra gives

        prod_n (1 - t^n)^{L_n} = 1 - a(t),   a_1 = k, a_n = L_{n-1},

    which determines L_n degree by degree.
    """
    cap = max_degree
    counts = {}
    gens = {1: k}
    prod = [1] + [0] * cap  # running product over degrees < n
    for n in range(1, max_degree + 1):
        if n >= 2:
            gens[n] = counts[n - 1]
        # [t^n] prod - L_n must equal -a_n
        counts[n] = prod[n] + gens[n]
        factor = [0] * (cap + 1)
        factor[0] = 1
        factor[n] = -1
        prod = _poly_mul(prod, _poly_pow(factor, counts[n], cap), cap)
    return counts


def operated_word_counts(k, max_degree):
    """Counts of all bracketed words by degree.

    Words are nonempty sequences of primes; a prime of degree 1 is a
    letter and a prime of degree n >= 2 is the operator applied to any
    word of degree n - 1:  c_n = p_n + sum_{j<n} p_j c_{n-j} with
    p_1 = k, p_n = c_{n-1}.
    """
    c = {}
    p = {1: k}
    for n in range(1, max_degree + 1):
        if n >= 2:
            p[n] = c[n - 1]
        c[n] = p[n] + sum(p[j] * c[n - j] for j in range(1, n))
    return c


def na_trees(letters, max_degree):
    """All nonassociative bracketed words by degree, enumerated directly.

    A tree is a letter, an operator application (child,), or a pair
    (left, right); the degree adds one per letter and per operator.
    """
    by_deg = {1: list(letters)}
    for n in range(2, max_degree + 1):
        level = [(t,) for t in by_deg[n - 1]]
        for i in range(1, n):
            for left in by_deg[i]:
                for right in by_deg[n - i]:
                    level.append((left, right))
        by_deg[n] = level
    return by_deg
