"""Bracketed words, star words and their nonassociative companions.

The free operated monoid on an alphabet X consists of *bracketed
words*: products of primes, where a prime is either a letter or an
operator box |_u_| around a bracketed word u.  Everything here is
nonunital -- the empty word never occurs.

Encoding (immutable, hashable, shared with the kernels in ``_pure`` /
``_speedups``):

* letter prime           -> non-negative ``int`` (rank in the alphabet,
  rank 0 is the largest letter),
* star (the hole)        -> ``STAR == -1``,
* operator prime |_u_|   -> the ``tuple`` encoding u,
* word                   -> nonempty ``tuple`` of primes.

Nonassociative bracketed words (binary trees whose leaves are letters,
with unary operator nodes) use:

* leaf                   -> ``int`` as above,
* operator node |_t_|    -> 1-tuple ``(t,)``,
* pair node (t s)        -> 2-tuple ``(t, s)``.

The two encodings cannot collide: a word is a tuple of primes while a
tree is an int, a 1-tuple or a 2-tuple whose entries are trees.

Text syntax: letters print by name, the operator prints as ``P(...)``,
juxtaposition is concatenation, ``( a b )`` is a nonassociative pair,
``*`` is the star.  When every letter name is a single character, words
print without separating spaces (so the tree for x x y y x y prints as
``((x((xy)y))(xy))``); otherwise primes are space-separated.
"""

from __future__ import annotations

from ._backend import kernel

STAR = -1


class WordSyntaxError(ValueError):
    """Raised when a word, tree or polynomial fails to parse."""


class Alphabet:
    """A finite ordered alphabet, largest letter first.

    ``Alphabet(["x", "y"])`` declares x > y.  Ranks are the positions in
    that listing, so rank 0 is the largest letter; all order code in the
    package compares letters by rank under that convention.
    """

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise ValueError("alphabet must contain at least one letter")
        if len(set(names)) != len(names):
            raise ValueError("alphabet letters must be distinct: %r" % (names,))
        for name in names:
            if not name or any(ch in "()* \t\n" for ch in name) or name.startswith("P("):
                raise ValueError("unusable letter name: %r" % (name,))
        self.names = names
        self._rank = {name: i for i, name in enumerate(names)}
        # Longest-first so multi-character names tokenize greedily.
        self._by_length = sorted(names, key=len, reverse=True)
        self.compact = all(len(name) == 1 for name in names)

    @classmethod
    def from_spec(cls, text):
        """Build from a comma-separated listing such as ``"x,y,z"``."""
        return cls([part.strip() for part in text.split(",") if part.strip()])

    @property
    def size(self):
        return len(self.names)

    def letters(self):
        """Ranks of all letters, largest first."""
        return tuple(range(len(self.names)))

    def rank(self, name):
        try:
            return self._rank[name]
        except KeyError:
            raise WordSyntaxError("unknown letter %r (alphabet %s)" % (name, ",".join(self.names)))

    def name(self, rank):
        if rank == STAR:
            return "*"
        return self.names[rank]

    def match_name(self, text, pos):
        """Longest letter name starting at ``text[pos:]``, as (rank, length)."""
        for name in self._by_length:
            if text.startswith(name, pos):
                return self._rank[name], len(name)
        return None

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "Alphabet(%s)" % (",".join(self.names))


# ---------------------------------------------------------------------------
# structure predicates and validation


def is_word(w):
    """Shallow structural test: nonempty tuple of primes."""
    return isinstance(w, tuple) and len(w) >= 1 and all(
        isinstance(p, (int, tuple)) for p in w
    )


def validate_word(w, alphabet=None, allow_star=False):
    """Deep structural check of a word; raises ``TypeError``/``ValueError``."""
    if not isinstance(w, tuple) or not w:
        raise TypeError("a word must be a nonempty tuple of primes: %r" % (w,))
    for p in w:
        if isinstance(p, tuple):
            validate_word(p, alphabet, allow_star)
        elif isinstance(p, int):
            if p == STAR:
                if not allow_star:
                    raise ValueError("unexpected star in %r" % (w,))
            elif p < 0:
                raise ValueError("bad letter rank %r" % (p,))
            elif alphabet is not None and p >= alphabet.size:
                raise ValueError("letter rank %d outside alphabet of size %d" % (p, alphabet.size))
        else:
            raise TypeError("bad prime %r" % (p,))
    return True


def validate_tree(t, alphabet=None):
    """Deep structural check of a nonassociative bracketed word."""
    if isinstance(t, int):
        if t < 0:
            raise ValueError("bad leaf %r" % (t,))
        if alphabet is not None and t >= alphabet.size:
            raise ValueError("leaf rank %d outside alphabet of size %d" % (t, alphabet.size))
        return True
    if isinstance(t, tuple) and len(t) == 1:
        return validate_tree(t[0], alphabet)
    if isinstance(t, tuple) and len(t) == 2:
        validate_tree(t[0], alphabet)
        validate_tree(t[1], alphabet)
        return True
    raise TypeError("a tree must be a letter, (child,) or (left, right): %r" % (t,))


def star_count(w):
    """Number of star holes in a (star) word."""
    n = 0
    for p in w:
        if p == STAR:
            n += 1
        elif isinstance(p, tuple):
            n += star_count(p)
    return n


def is_star_word(q):
    """A star word carries exactly one hole."""
    return is_word(q) and star_count(q) == 1


# ---------------------------------------------------------------------------
# measures


def breadth(w):
    """Breadth |w|: the number of primes in the top-level factorization."""
    return len(w)


def depth(w):
    """Depth dep(w): the maximal nesting of operator boxes."""
    best = 0
    for p in w:
        if isinstance(p, tuple):
            d = 1 + depth(p)
            if d > best:
                best = d
    return best


def degree(w):
    """Degree deg(w): total number of letters and operator boxes."""
    return kernel.word_deg(w)


def letter_degree(w):
    """Letter degree deg_X(w): letters only."""
    return kernel.word_deg_x(w)


def measures(w):
    """The triple (breadth, depth, degree) of a bracketed word."""
    return (breadth(w), depth(w), degree(w))


def tree_degree(t):
    """Degree of a nonassociative bracketed word."""
    if isinstance(t, int):
        return 1
    if len(t) == 1:
        return 1 + tree_degree(t[0])
    return tree_degree(t[0]) + tree_degree(t[1])


def tree_depth(t):
    """Operator nesting depth of a nonassociative bracketed word."""
    if isinstance(t, int):
        return 0
    if len(t) == 1:
        return 1 + tree_depth(t[0])
    return max(tree_depth(t[0]), tree_depth(t[1]))


def forget_brackets(t):
    """Underlying bracketed word of a tree: drop the pair structure.

    Operator nodes become operator primes; pairs concatenate.
    """
    if isinstance(t, int):
        return (t,)
    if len(t) == 1:
        return (forget_brackets(t[0]),)
    return forget_brackets(t[0]) + forget_brackets(t[1])


# ---------------------------------------------------------------------------
# text format


def format_word(w, alphabet):
    """Render a (star) word; inverse of ``parse_word`` on flat words."""
    sep = "" if alphabet.compact else " "
    return sep.join(_format_prime(p, alphabet) for p in w)


def _format_prime(p, alphabet):
    if isinstance(p, int):
        return alphabet.name(p)
    return "P(%s)" % format_word(p, alphabet)


def format_tree(t, alphabet):
    """Render a nonassociative bracketed word with explicit pair parens."""
    sep = "" if alphabet.compact else " "

    def fmt(t):
        if isinstance(t, int):
            return alphabet.name(t)
        if len(t) == 1:
            return "P(%s)" % fmt(t[0])
        return "(%s%s%s)" % (fmt(t[0]), sep, fmt(t[1]))

    return fmt(t)


def _tokenize(text, alphabet, allow_star):
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "P" and i + 1 < n and text[i + 1] == "(":
            tokens.append("P(")
            i += 2
            continue
        if ch == "(" or ch == ")":
            tokens.append(ch)
            i += 1
            continue
        if ch == "*":
            if not allow_star:
                raise WordSyntaxError("star not allowed here: %r" % (text,))
            tokens.append(("letter", STAR))
            i += 1
            continue
        m = alphabet.match_name(text, i)
        if m is None:
            raise WordSyntaxError("cannot read %r at position %d of %r" % (ch, i, text))
        tokens.append(("letter", m[0]))
        i += m[1]
    return tokens


def _parse_flat(tokens, pos, stop_at_paren):
    primes = []
    n = len(tokens)
    while pos < n and tokens[pos] != ")":
        tok = tokens[pos]
        if tok == "P(":
            inner, pos = _parse_flat(tokens, pos + 1, True)
            if pos >= n or tokens[pos] != ")":
                raise WordSyntaxError("unbalanced P( ... )")
            pos += 1
            primes.append(inner)
        elif isinstance(tok, tuple):
            primes.append(tok[1])
            pos += 1
        else:
            raise WordSyntaxError("unexpected %r in a flat word" % (tok,))
    if not primes:
        raise WordSyntaxError("empty word")
    return tuple(primes), pos


def _parse_tree(tokens, pos):
    if pos >= len(tokens):
        raise WordSyntaxError("truncated tree")
    tok = tokens[pos]
    if isinstance(tok, tuple):
        if tok[1] == STAR:
            return STAR, pos + 1
        return tok[1], pos + 1
    if tok == "P(":
        child, pos = _parse_tree(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise WordSyntaxError("unbalanced P( ... ) in a tree")
        return (child,), pos + 1
    if tok == "(":
        left, pos = _parse_tree(tokens, pos + 1)
        right, pos = _parse_tree(tokens, pos)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise WordSyntaxError("a pair must hold exactly two subtrees")
        return (left, right), pos + 1
    raise WordSyntaxError("unexpected %r in a tree" % (tok,))


def parse_word(text, alphabet, allow_star=False):
    """Parse either a flat bracketed word or a nonassociative tree.

    The input is a tree exactly when a bare pair-parenthesis ``(`` occurs
    (the operator always spells ``P(``); otherwise it is a flat word.
    """
    tokens = _tokenize(text, alphabet, allow_star)
    if not tokens:
        raise WordSyntaxError("empty input")
    if "(" in tokens:
        tree, pos = _parse_tree(tokens, 0)
        if pos != len(tokens):
            raise WordSyntaxError("trailing tokens after tree: %r" % (text,))
        return tree
    word, pos = _parse_flat(tokens, 0, False)
    if pos != len(tokens):
        raise WordSyntaxError("trailing tokens after word: %r" % (text,))
    return word


def parse_flat_word(text, alphabet, allow_star=False):
    """Parse a flat bracketed word (stars allowed if requested)."""
    w = parse_word(text, alphabet, allow_star)
    if not is_word(w):
        raise WordSyntaxError("expected a flat word, got a tree: %r" % (text,))
    return w


def parse_tree(text, alphabet):
    """Parse a nonassociative bracketed word (a single tree)."""
    tokens = _tokenize(text, alphabet, False)
    tree, pos = _parse_tree(tokens, 0)
    if pos != len(tokens):
        raise WordSyntaxError("trailing tokens after tree: %r" % (text,))
    return tree


# ---------------------------------------------------------------------------
# star substitution and placements


def substitute(q, u):
    """Replace the unique star of the star word q by the word u (spliced).

    deg(q|_u) = deg(q) - 1 + deg(u); the star counts as one letter in q.
    """
    out, found = _substitute(q, u)
    if not found:
        raise ValueError("no star in %r" % (q,))
    return out


def _substitute(q, u):
    out = []
    found = False
    for p in q:
        if p == STAR:
            if found:
                raise ValueError("more than one star in %r" % (q,))
            out.extend(u)
            found = True
        elif isinstance(p, tuple):
            inner, f = _substitute(p, u)
            if f:
                if found:
                    raise ValueError("more than one star")
                found = True
                out.append(inner)
            else:
                out.append(p)
        else:
            out.append(p)
    return tuple(out), found


def find_placements(w, u):
    """All star words q with q|_u == w, outermost first, left to right.

    At each position of each level the top-level occurrence is reported
    before descending into an operator prime at that position.
    """
    out = []
    m = len(u)

    def scan(level, wrap):
        n = len(level)
        for i in range(n):
            if level[i : i + m] == u:
                out.append(wrap(level[:i] + (STAR,) + level[i + m :]))
            p = level[i]
            if isinstance(p, tuple):
                def wrap_inner(inner, _i=i, _level=level, _wrap=wrap):
                    return _wrap(_level[:_i] + (inner,) + _level[_i + 1 :])

                scan(p, wrap_inner)

    scan(w, lambda q: q)
    return out


def star_path(q):
    """Chain of (level word, index) from the top level down to the star.

    The final entry's level contains the star itself at the given index;
    every earlier entry's index points at the operator prime holding the
    next level.
    """
    for i, p in enumerate(q):
        if p == STAR:
            return [(q, i)]
        if isinstance(p, tuple):
            sub = star_path(p)
            if sub is not None:
                return [(q, i)] + sub
    return None


# ---------------------------------------------------------------------------
# exhaustive generators (used by order checks and test oracles)


def all_words(alphabet, max_degree, operated=True):
    """All bracketed words of degree <= max_degree, grouped by degree.

    Returns a dict degree -> list of words.  With ``operated=False`` only
    plain words in the letters are produced.
    """
    letters = list(alphabet.letters())
    by_deg = {}
    pool = {1: list(letters)}
    for d in range(1, max_degree + 1):
        if operated and d >= 2:
            pool.setdefault(d, [])
            pool[d].extend(by_deg[d - 1])
        seqs = _prime_sequences(d, pool)
        by_deg[d] = seqs
    return by_deg


def _prime_sequences(d, pool, _memo=None):
    if _memo is None:
        _memo = {}
    if d in _memo:
        return _memo[d]
    out = []
    for pd in range(1, d + 1):
        for p in pool.get(pd, ()):  # a word in pool[pd] acts as the operator prime |_w_|
            if pd == d:
                out.append((p,))
            else:
                for rest in _prime_sequences(d - pd, pool, _memo):
                    out.append((p,) + rest)
    _memo[d] = out
    return out


def all_contexts(alphabet, max_degree, operated=True):
    """All star words of degree <= max_degree (star counted as a letter).

    Returns a dict degree -> list of star words.
    """
    words_by_deg = all_words(alphabet, max_degree - 1, operated) if max_degree >= 2 else {}
    # plain prime pool: letters, plus operator primes over plain words
    plain_pool = {1: list(alphabet.letters())}
    for d in range(2, max_degree):
        plain_pool[d] = list(words_by_deg.get(d - 1, ())) if operated else []

    ctx_by_deg = {}

    def plain_seqs(d):
        return _prime_sequences(d, plain_pool) if d >= 1 else [()]

    for d in range(1, max_degree + 1):
        seen = []
        # star prime of degree j: the bare star (j == 1) or an operator
        # prime wrapping a context of degree j - 1
        for j in range(1, d + 1):
            if j == 1:
                star_primes = [STAR]
            elif operated:
                star_primes = [tuple(q) for q in ctx_by_deg.get(j - 1, ())]
            else:
                star_primes = []
            for sp in star_primes:
                rest = d - j
                for left in range(0, rest + 1):
                    right = rest - left
                    for a in plain_seqs(left):
                        for b in plain_seqs(right):
                            seen.append(a + (sp,) + b)
        ctx_by_deg[d] = seen
    return ctx_by_deg
