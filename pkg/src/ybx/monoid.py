"""Exact arithmetic in the structure monoid and its quotient groups.

A monoid element is a pair (length k, last letter x); the permutation it
carries is lam_{kx}, recomputed on demand, so equality of pairs is
equality of elements.  Products of fractions (k, x) . c_u^{-m} over the
central elements c_u = (d, u) realise the groups of quotients of the
components; torsion elements are the degree-0 fractions.

The growth oracle is deliberately independent of the pair model: it
rewrites free words with a union-find and counts congruence classes.
"""

from dataclasses import dataclass
from fractions import Fraction

from .core import diagonal_image, lambda_word, q_power
from .invariants import Discrepancy, partition
from .perms import inverse


@dataclass(frozen=True)
class MElem:
    """Monoid element (length, last letter); the letter is ignored at length 0."""

    k: int
    x: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("length must be nonnegative")
        if self.k == 0:
            object.__setattr__(self, "x", 0)


ONE = MElem(0)


def mul(s, a, b):
    if a.k == 0:
        return b
    if b.k == 0:
        return a
    return MElem(a.k + b.k, lambda_word(s, a.x, a.k)[b.x])


def power(s, a, e):
    out = ONE
    for _ in range(e):
        out = mul(s, out, a)
    return out


def component(s, a):
    """The diagonal point grading the element; products grade by the right factor."""
    if a.k < 1:
        raise ValueError("the identity element has no component")
    return q_power(s, a.x, a.k)


def sigma(s, y, x):
    """The derived-solution map: lam_y applied to rho at (x, lam_x^-1(y))."""
    z = inverse(s.lam[x])[y]
    return s.lam[y][s.rho[x][z]]


def sigma_discrepancies(s):
    """sigma_y(x) must equal y on every pair (the derived relation collapses)."""
    bad = []
    for y in range(s.n):
        for x in range(s.n):
            got = sigma(s, y, x)
            if got != y:
                bad.append(Discrepancy("derived-map-constant", (y, x, got)))
    return tuple(bad)


def normal_form(s, word, t):
    """Rewrite a nonempty word as t^(k-1) . x' and return (k, x').

    Uses the iteration x' = lam_t^-1(lam_y(z)); the result is re-multiplied
    and compared against the word's own product before returning.
    """
    if not word:
        raise ValueError("word must be nonempty")
    inv_t = inverse(s.lam[t])
    y = word[0]
    for z in word[1:]:
        y = inv_t[s.lam[y][z]]
    k = len(word)

    direct = ONE
    for z in word:
        direct = mul(s, direct, MElem(1, z))
    redone = mul(s, power(s, MElem(1, t), k - 1), MElem(1, y))
    assert direct == redone, "normal form failed to re-multiply"
    return (k, y)


@dataclass(frozen=True)
class GrowthReport:
    model: tuple
    oracle: tuple

    @property
    def agree(self):
        return self.model == self.oracle

    def discrepancies(self):
        if self.agree:
            return ()
        return (Discrepancy("growth-counts-disagree", (self.model, self.oracle)),)


def _word_classes(s, length):
    """Number of congruence classes of free words of a given length.

    Words are base-n integers; each adjacent pair may be rewritten through
    r, and classes are the components of the resulting graph.
    """
    n = s.n
    size = n ** length
    parent = list(range(size))

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    rewrite = [[(s.lam[a][b], s.rho[a][b]) for b in range(n)] for a in range(n)]
    strides = [n ** (length - 1 - i) for i in range(length)]
    for w in range(size):
        rest = w
        digits = []
        for st in strides:
            digits.append(rest // st)
            rest %= st
        for i in range(length - 1):
            a, b = digits[i], digits[i + 1]
            a2, b2 = rewrite[a][b]
            if (a2, b2) != (a, b):
                w2 = w + (a2 - a) * strides[i] + (b2 - b) * strides[i + 1]
                ra, rb = find(w), find(w2)
                if ra != rb:
                    parent[rb] = ra
    return sum(1 for w in range(size) if find(w) == w)


def growth(s, max_len):
    """Per-degree element counts, via the pair model and via word rewriting."""
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    model = []
    level = {MElem(1, x) for x in range(s.n)}
    model.append(len(level))
    for _ in range(max_len - 1):
        level = {mul(s, e, MElem(1, y)) for e in level for y in range(s.n)}
        model.append(len(level))
    oracle = [_word_classes(s, length) for length in range(1, max_len + 1)]
    return GrowthReport(tuple(model), tuple(oracle))


def is_cancellative(s, max_len):
    """Brute-force cancellation test over elements of length <= max_len.

    Returns (verdict, witness); the witness is ("right", a, b, m) with
    a.m = b.m and a != b, or ("left", a, b, m) with m.a = m.b.  Products
    of unequal-length factors cannot collide, so pairs share a length.
    """
    n = s.n
    lam_k = [None] + [[lambda_word(s, x, k) for x in range(n)]
                      for k in range(1, max_len + 1)]
    for k in range(1, max_len + 1):
        for x in range(n):
            for y in range(x + 1, n):
                for l in range(1, max_len + 1):
                    for z in range(n):
                        if lam_k[k][x][z] == lam_k[k][y][z]:
                            return False, ("right", MElem(k, x), MElem(k, y),
                                           MElem(l, z))
    for l in range(1, max_len + 1):
        for z in range(n):
            row = lam_k[l][z]
            for x in range(n):
                for y in range(x + 1, n):
                    if row[x] == row[y]:
                        return False, ("left", MElem(1, x), MElem(1, y),
                                       MElem(l, z))
    return True, None


def _nullspace(rows, unknowns):
    """Basis of the rational nullspace of a small dense integer matrix."""
    mat = [[Fraction(v) for v in row] for row in rows]
    pivots = []
    r = 0
    for c in range(unknowns):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    free = [c for c in range(unknowns) if c not in pivots]
    basis = []
    for c in free:
        vec = [Fraction(0)] * unknowns
        vec[c] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -mat[i][c]
        basis.append(tuple(vec))
    return basis


def center_basis(s, deg):
    """Rational basis of the homogeneous central elements of one degree.

    Solves a . g = g . a for every generator g over the degree-deg basis
    elements, in exact arithmetic.
    """
    if deg < 1:
        raise ValueError("degree must be >= 1")
    n = s.n
    lam_deg = [lambda_word(s, x, deg) for x in range(n)]
    rows = []
    for g in range(n):
        for w in range(n):
            row = [(1 if lam_deg[x][g] == w else 0) - (1 if s.lam[g][x] == w else 0)
                   for x in range(n)]
            if any(row):
                rows.append(row)
    if not rows:
        rows = [[0] * n]
    return _nullspace(rows, n)


@dataclass(frozen=True)
class GQElem:
    """Canonical fraction (k, x) . c_u^{-m} in the quotient group of u.

    k = 0 encodes a pure power of c_u (x is then u by convention); k = d
    with x != u encodes torsion representatives; degree = k - d*m.
    """

    u: int
    k: int
    x: int
    m: int


def gq_degree(s, a):
    return a.k - s.d * a.m


def _gq_canonical(s, length, letter, cexp):
    """Reduce a nonempty numerator (length, letter) . c^{-cexp}."""
    d = s.d
    u = q_power(s, letter, length)
    a = (length - 1) // d
    k0 = length - a * d
    m = cexp - a
    if k0 == d and letter == u:
        return GQElem(u, 0, u, m - 1)
    return GQElem(u, k0, letter, m)


def gq_from(s, k, x, m=0):
    """The fraction (k, x) . c^{-m}; k = 0 gives a pure power of c_x."""
    if k == 0:
        return GQElem(x, 0, x, m)
    return _gq_canonical(s, k, x, m)


def gq_identity(s, u):
    return GQElem(u, 0, u, 0)


def torsion_elem(s, u, x):
    """The degree-0 fraction (d, x) . c_u^{-1} attached to x in X_u."""
    elem = _gq_canonical(s, s.d, x, 1)
    if elem.u != u:
        raise ValueError(f"{x} does not lie in the component of {u}")
    return elem


def _lift(s, a):
    """A representative with nonempty numerator: (length, letter, cexp)."""
    if a.k == 0:
        return s.d, a.u, a.m + 1
    return a.k, a.x, a.m


def gq_mul(s, a, b):
    """Fraction product; lands in the quotient group of b's component."""
    ka, xa, ma = _lift(s, a)
    kb, xb, mb = _lift(s, b)
    letter = lambda_word(s, xa, ka)[xb]
    return _gq_canonical(s, ka + kb, letter, ma + mb)


def gq_inverse(s, a):
    """Inverse via (k, x)^-1 = (k, x)^(d-1) . c^{-k}."""
    d = s.d
    length, letter, cexp = _lift(s, a)
    if d == 1:
        return GQElem(a.u, 0, a.u, length - cexp)
    cur_len, cur_let = length, letter
    for _ in range(d - 2):
        cur_let = lambda_word(s, cur_let, cur_len)[letter]
        cur_len += length
    return _gq_canonical(s, cur_len, cur_let, length - cexp)


@dataclass(frozen=True)
class ConjugationAction:
    """Conjugation by the chosen length-1 element over a component.

    ``action`` maps each torsion point to its conjugate; the ambient group
    is the torsion group extended by powers of the base element.
    """

    u: int
    base: int
    action: tuple   # ((y, image), ...)
    order: int
    discrepancies: tuple

    def as_dict(self):
        return dict(self.action)


def conjugation_action(s, u):
    """sigma_u: t -> g t g^-1 for the smallest generator g over u."""
    image = diagonal_image(s)
    if u not in image:
        raise ValueError(f"{u} is not a diagonal point")
    base = min(x for x in range(s.n) if s.q[x] == u)
    g = gq_from(s, 1, base)
    ginv = gq_inverse(s, g)
    xs = partition(s)[u]
    bad = []

    act = {}
    for y in xs:
        res = gq_mul(s, gq_mul(s, g, torsion_elem(s, u, y)), ginv)
        assert gq_degree(s, res) == 0 and res.u == u
        act[y] = res.u if res.k == 0 else res.x

    op = {(a, b): lambda_word(s, a, s.d)[b] for a in xs for b in xs}
    if sorted(act.values()) != sorted(xs):
        bad.append(Discrepancy("conjugation-bijective", (u,)))
    else:
        for a in xs:
            for b in xs:
                if act[op[a, b]] != op[act[a], act[b]]:
                    bad.append(Discrepancy("conjugation-homomorphism", (u, a, b)))

    order = 1
    cur = dict(act)
    while any(cur[y] != y for y in xs):
        cur = {y: act[cur[y]] for y in xs}
        order += 1
        if order > s.d + 1:
            break
    if s.d % order != 0:
        bad.append(Discrepancy("conjugation-order-divides-exponent", (u, order)))

    # semidirect factorisation: every fraction over u is torsion times a
    # power of the base element, uniquely through its degree
    gpow_cache = {0: gq_identity(s, u)}

    def gpow(e):
        if e not in gpow_cache:
            if e > 0:
                gpow_cache[e] = gq_mul(s, gpow(e - 1), g)
            else:
                gpow_cache[e] = gq_mul(s, gpow(e + 1), ginv)
        return gpow_cache[e]

    for k in range(1, s.d + 1):
        for x in range(s.n):
            if q_power(s, x, k) != u:
                continue
            for m in (-1, 0, 1):
                elem = gq_from(s, k, x, m)
                deg = gq_degree(s, elem)
                t = gq_mul(s, elem, gpow(-deg))
                if gq_degree(s, t) != 0 or gq_mul(s, t, gpow(deg)) != elem:
                    bad.append(Discrepancy("semidirect-factorisation", (u, k, x, m)))

    return ConjugationAction(u, base, tuple(sorted(act.items())), order, tuple(bad))


def arithmetic_discrepancies(s, max_len=None):
    """Bounded exhaustive checks of the grading and centrality laws.

    Covers: product grading, centrality of c_u within its component, the
    power law a^d = c_u^{|a|}, the identity of lam at d times a diagonal
    point, the fixed-point alternative for equal lengths, diagonal
    membership of lam_{kx}^-1(x), and the q-power identities.
    """
    d = s.d
    L = max_len if max_len is not None else 2 * d
    n = s.n
    bad = []
    image = diagonal_image(s)

    elems = [MElem(k, x) for k in range(1, L + 1) for x in range(n)]
    for a in elems:
        for b in elems:
            if component(s, mul(s, a, b)) != component(s, b):
                bad.append(Discrepancy("product-grading", (a.k, a.x, b.k, b.x)))

    for u in image:
        cu = MElem(d, u)
        if component(s, cu) != u:
            bad.append(Discrepancy("central-element-component", (u,)))
        for a in elems:
            if component(s, a) != u:
                continue
            if mul(s, cu, a) != mul(s, a, cu):
                bad.append(Discrepancy("central-element-commutes", (u, a.k, a.x)))
            if power(s, a, d) != power(s, cu, a.k):
                bad.append(Discrepancy("power-collapse", (u, a.k, a.x)))

    for u in image:
        if lambda_word(s, u, d) != tuple(range(n)):
            bad.append(Discrepancy("diagonal-word-identity", (u,)))

    for k in range(1, d + 1):
        rows = [lambda_word(s, x, k) for x in range(n)]
        for x in range(n):
            for y in range(x + 1, n):
                if rows[x] != rows[y]:
                    quot = tuple(rows[x][inverse(rows[y])[i]] for i in range(n))
                    if any(quot[i] == i for i in range(n)):
                        bad.append(Discrepancy("fixed-point-alternative", (k, x, y)))

    for k in range(1, 2 * d + 1):
        for x in range(n):
            v = inverse(lambda_word(s, x, k))[x]
            if v not in image:
                bad.append(Discrepancy("diagonal-membership", (k, x, v)))

    for k in range(1, 2 * d + 3):
        for x in range(n):
            if q_power(s, x, k) != inverse(lambda_word(s, x, k))[x]:
                bad.append(Discrepancy("q-power-identity", (k, x)))
    for x in range(n):
        if q_power(s, x, d + 1) != s.q[x]:
            bad.append(Discrepancy("q-period", (x,)))

    bad.extend(sigma_discrepancies(s))
    return tuple(bad)
