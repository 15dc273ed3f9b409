# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``lsgsb._pure``.

Same encoding, same contracts: words are nested tuples, letter primes
are small ints (rank 0 largest, -1 is the star), operator primes are
the tuples of their inner words.  Comparators return -1/0/+1 with +1
meaning "first argument greater".  Behavioural equality with the pure
kernels is asserted by the test suite; any change must be made in both
modules.
"""


cpdef int word_deg(tuple w):
    cdef int d = 0
    for p in w:
        if type(p) is tuple:
            d += 1 + word_deg(<tuple> p)
        else:
            d += 1
    return d


cpdef int word_deg_x(tuple w):
    cdef int d = 0
    for p in w:
        if type(p) is tuple:
            d += word_deg_x(<tuple> p)
        else:
            d += 1
    return d


cpdef int cmp_prime_dl(a, b):
    cdef long ra, rb
    if type(a) is not tuple:
        if type(b) is not tuple:
            ra = <long> a
            rb = <long> b
            if ra == rb:
                return 0
            return 1 if ra < rb else -1  # rank 0 is the largest letter
        return -1
    if type(b) is not tuple:
        return 1
    return cmp_dl(<tuple> a, <tuple> b)


cpdef int cmp_dl(tuple u, tuple v):
    cdef int du, dv, c
    cdef Py_ssize_t i, n
    if u == v:
        return 0
    if len(u) == 1 and len(v) == 1 and type(u[0]) is tuple and type(v[0]) is tuple:
        return cmp_dl(<tuple> u[0], <tuple> v[0])
    du = word_deg(u)
    dv = word_deg(v)
    if du != dv:
        return 1 if du > dv else -1
    if len(u) != len(v):
        return 1 if len(u) > len(v) else -1
    n = len(u)
    for i in range(n):
        c = cmp_prime_dl(u[i], v[i])
        if c:
            return c
    return 0


cpdef int cmp_prime_dt(a, b):
    cdef long ra, rb
    if type(a) is not tuple:
        if type(b) is not tuple:
            ra = <long> a
            rb = <long> b
            if ra == rb:
                return 0
            return 1 if ra < rb else -1
        return -1
    if type(b) is not tuple:
        return 1
    return cmp_dt(<tuple> a, <tuple> b)


cpdef int cmp_dt(tuple u, tuple v):
    cdef int du, dv, c
    cdef Py_ssize_t i, n
    cdef bint u_op, v_op
    if u == v:
        return 0
    u_op = len(u) == 1 and type(u[0]) is tuple
    v_op = len(v) == 1 and type(v[0]) is tuple
    if u_op and v_op:
        return cmp_dt(<tuple> u[0], <tuple> v[0])
    if u_op and len(v) == 1:
        return 1  # operator word beats a bare letter
    if v_op and len(u) == 1:
        return -1
    du = word_deg_x(u)
    dv = word_deg_x(v)
    if du != dv:
        return 1 if du > dv else -1
    n = len(u) if len(u) < len(v) else len(v)
    for i in range(n):
        c = cmp_prime_dt(u[i], v[i])
        if c:
            return c
    # Unreachable tie rule kept for totality (see _pure.cmp_dt).
    if len(u) != len(v):
        return 1 if len(u) > len(v) else -1
    return 0


cpdef int lex_cmp_dl(tuple u, tuple v):
    cdef int c
    cdef Py_ssize_t i, n
    n = len(u) if len(u) < len(v) else len(v)
    for i in range(n):
        c = cmp_prime_dl(u[i], v[i])
        if c:
            return c
    if len(u) == len(v):
        return 0
    return 1 if len(u) < len(v) else -1


cpdef int lex_cmp_dt(tuple u, tuple v):
    cdef int c
    cdef Py_ssize_t i, n
    n = len(u) if len(u) < len(v) else len(v)
    for i in range(n):
        c = cmp_prime_dt(u[i], v[i])
        if c:
            return c
    if len(u) == len(v):
        return 0
    return 1 if len(u) < len(v) else -1


cpdef bint is_alsw_dl(tuple w):
    cdef Py_ssize_t i, n
    n = len(w)
    if n == 0:
        return False
    for i in range(1, n):
        if lex_cmp_dl(w, w[i:]) <= 0:
            return False
    return True


cpdef bint is_alsw_dt(tuple w):
    cdef Py_ssize_t i, n
    n = len(w)
    if n == 0:
        return False
    for i in range(1, n):
        if lex_cmp_dt(w, w[i:]) <= 0:
            return False
    return True
