"""Exhaustive search and classification for small point counts.

Since rho is forced to q(lam[x][y]) on idempotent candidates, the search
space is tuples (lam_0, ..., lam_{n-1}) of permutations.  The backtracker
assigns them in point order (permutations in lexicographic order) and
prunes with two sound filters:

  - the first Yang-Baxter identity, as a permutation identity
    lam_x lam_y = lam_w lam_u with w = lam_x(y) and u = q(w), evaluated as
    soon as all four rows are assigned;
  - equal-length words act either identically or without fixed points, so
    a quotient lam_x lam_y^-1 with a fixed point kills the branch.

A completed tuple still receives the full exhaustive verification before
it is emitted; the pruning is an optimisation, never a proof.
"""

import time
from dataclasses import dataclass
from itertools import permutations, product

from .core import (canonical_form, check, diagonal_image, promote,
                   rmap_from_lambda, solution_from_lambda)
from .invariants import (Descriptor, canonical_group_table, check_fineq,
                         reconstruct, torsion)
from .perms import compose, has_fixed_point, identity, inverse, is_perm

MAX_POINTS = 6
MAX_CLASSIFY = 5


@dataclass(frozen=True)
class EnumOptions:
    n: int
    up_to_iso: bool = False
    prune_fixedpoint: bool = True
    prune_ybe: bool = True
    jobs: int = 1
    budget_secs: float = None

    def __post_init__(self):
        if not (1 <= self.n <= MAX_POINTS):
            raise ValueError(f"enumeration is limited to n <= {MAX_POINTS}")


@dataclass(frozen=True)
class EnumResult:
    solutions: tuple
    complete: bool


def _sort_key(s):
    return (canonical_form(s), s.lam)


def _complete_tuple(rows):
    """Full verification of a finished lam tuple; None when it fails."""
    m = rmap_from_lambda(rows)
    if not check(m).ok:
        return None
    return promote(m)


def _prefix_ok(rows, j, prune_fixedpoint, prune_ybe):
    """Filters evaluated after rows[j] was assigned."""
    if prune_fixedpoint:
        inv_j = inverse(rows[j])
        for i in range(j):
            quot = compose(rows[i], inv_j)
            if quot != identity(len(quot)) and has_fixed_point(quot):
                return False
    if prune_ybe:
        for x in range(j + 1):
            lx = rows[x]
            for y in range(j + 1):
                w = lx[y]
                if w > j:
                    continue
                u = rows[w].index(w)
                if u > j:
                    continue
                if compose(lx, rows[y]) != compose(rows[w], rows[u]):
                    return False
    return True


def _search_slice(n, first, prune_fixedpoint, prune_ybe, deadline=None):
    """All verified solutions whose lam_0 equals the given permutation.

    Returns (solutions, complete); an expired deadline stops the walk.
    """
    perms_lex = sorted(permutations(range(n)))
    rows = [first]
    if not _prefix_ok(rows, 0, prune_fixedpoint, prune_ybe):
        return [], True
    found = []
    complete = True

    def walk():
        nonlocal complete
        if deadline is not None and time.monotonic() > deadline:
            complete = False
            return
        j = len(rows)
        if j == n:
            sol = _complete_tuple(tuple(rows))
            if sol is not None:
                found.append(sol)
            return
        for p in perms_lex:
            rows.append(p)
            if _prefix_ok(rows, j, prune_fixedpoint, prune_ybe):
                walk()
            rows.pop()
            if not complete:
                return

    if n == 1:
        sol = _complete_tuple(tuple(rows))
        if sol is not None:
            found.append(sol)
    else:
        walk()
    return found, complete


def _slice_worker(args):
    n, first, pf, py = args
    sols, complete = _search_slice(n, first, pf, py)
    return sols, complete


def enumerate_solutions(opts):
    """Every verified solution on n points, sorted by canonical table.

    With ``up_to_iso`` only the first member of each isomorphism class is
    kept.  The top-level choice of lam_0 partitions the search; with
    ``jobs > 1`` the slices run in a process pool and are merged in a
    fixed order, so the output does not depend on the worker count.
    A budget forces the sequential path (the deadline is checked inside
    the walk) and an expired one yields a partial, incomplete result.
    """
    n = opts.n
    firsts = sorted(permutations(range(n)))
    deadline = (time.monotonic() + opts.budget_secs
                if opts.budget_secs is not None else None)
    all_sols = []
    complete = True

    if opts.jobs > 1 and deadline is None:
        from concurrent.futures import ProcessPoolExecutor
        args = [(n, f, opts.prune_fixedpoint, opts.prune_ybe) for f in firsts]
        with ProcessPoolExecutor(max_workers=opts.jobs) as pool:
            for sols, done in pool.map(_slice_worker, args):
                all_sols.extend(sols)
                complete = complete and done
    else:
        for f in firsts:
            if deadline is not None and time.monotonic() > deadline:
                complete = False
                break
            sols, done = _search_slice(n, f, opts.prune_fixedpoint,
                                       opts.prune_ybe, deadline)
            all_sols.extend(sols)
            complete = complete and done
            if not done:
                break

    all_sols.sort(key=_sort_key)
    if opts.up_to_iso:
        seen = set()
        kept = []
        for s in all_sols:
            c = canonical_form(s)
            if c not in seen:
                seen.add(c)
                kept.append(s)
        all_sols = kept
    return EnumResult(tuple(all_sols), complete)


def brute_force_solutions(n):
    """Unpruned oracle: verify every lam tuple in Sym(n)^n."""
    out = []
    for rows in product(sorted(permutations(range(n))), repeat=n):
        m = rmap_from_lambda(rows)
        if check(m).ok:
            out.append(promote(m))
    out.sort(key=_sort_key)
    return out


@dataclass(frozen=True)
class ClassificationRecord:
    """One isomorphism class: canonical table and structural signature."""

    canonical: tuple
    members: int
    diag_size: int
    d: int
    torsion_order: int
    torsion_table: tuple   # canonical group table
    family: str = None


def _family_tag(s):
    image = diagonal_image(s)
    if len(image) == s.n:
        return "permutation"
    if len(image) == 1:
        return "group-automorphism"
    return None


def classify(n):
    """Isomorphism classes of enumerate(n), in canonical-table order."""
    if n > MAX_CLASSIFY:
        raise ValueError(f"classification is limited to n <= {MAX_CLASSIFY}")
    result = enumerate_solutions(EnumOptions(n))
    groups = {}
    for s in result.solutions:
        groups.setdefault(canonical_form(s), []).append(s)
    records = []
    for canon in sorted(groups):
        rep = groups[canon][0]
        u0 = diagonal_image(rep)[0]
        tor = torsion(rep, u0)
        local = {x: i for i, x in enumerate(tor.elements)}
        table = tuple(tuple(local[v] for v in row) for row in tor.op)
        records.append(ClassificationRecord(
            canonical=canon,
            members=len(groups[canon]),
            diag_size=len(diagonal_image(rep)),
            d=rep.d,
            torsion_order=len(tor.elements),
            torsion_table=canonical_group_table(table),
            family=_family_tag(rep),
        ))
    return records


def by_diag_size(n):
    """Class counts keyed by the size of the diagonal."""
    counts = {}
    for rec in classify(n):
        counts[rec.diag_size] = counts.get(rec.diag_size, 0) + 1
    return counts


def partition_number(n):
    """Number of integer partitions, by the pentagonal-number recurrence."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > 64:
        raise ValueError("recurrence table limited to n <= 64")
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > m and g2 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            if g1 <= m:
                total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def from_permutation(phi):
    """The solution r(x, y) = (phi(y), y): constant rows, full diagonal."""
    phi = tuple(phi)
    if not is_perm(phi):
        raise ValueError("phi must be a permutation")
    return solution_from_lambda([phi] * len(phi))


def _group_axioms(table):
    n = len(table)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if table[table[x][y]][z] != table[x][table[y][z]]:
                    raise ValueError(f"associativity fails at ({x}, {y}, {z})")
    e = None
    for c in range(n):
        if all(table[c][x] == x == table[x][c] for x in range(n)):
            e = c
            break
    if e is None:
        raise ValueError("no identity element")
    for x in range(n):
        if e not in table[x]:
            raise ValueError(f"no inverse for {x}")
    return e


def from_group_automorphism(table, phi):
    """The latin solution lam_x(y) = x . phi(y) over a verified group table."""
    table = tuple(tuple(r) for r in table)
    phi = tuple(phi)
    e = _group_axioms(table)
    if not is_perm(phi):
        raise ValueError("phi must be a permutation")
    n = len(table)
    for x in range(n):
        for y in range(n):
            if phi[table[x][y]] != table[phi[x]][phi[y]]:
                raise ValueError(f"phi is not a homomorphism at ({x}, {y})")
    rows = [tuple(table[x][phi[y]] for y in range(n)) for x in range(n)]
    s = solution_from_lambda(rows)
    assert diagonal_image(s) == (e,)
    assert all(v == e for row in s.rho for v in row)
    return s


def is_latin(s):
    """Whether x -> lam_x(y) is bijective for every y."""
    n = s.n
    return all(len({s.lam[x][y] for x in range(n)}) == n for y in range(n))


def check_partition_count(n):
    """Classes with full diagonal are counted by integer partitions.

    Also verifies that each such class is a constant-row solution with
    rho(x, y) = y.
    """
    full = [rec for rec in classify(n) if rec.diag_size == n]
    if len(full) != partition_number(n):
        return False
    for rec in full:
        lam = [rec.canonical[i * n:(i + 1) * n] for i in range(n)]
        if len(set(lam)) != 1:
            return False
        s = solution_from_lambda(lam)
        if any(s.rho[x][y] != y for x in range(n) for y in range(n)):
            return False
    return True


def _cyclic_table(p):
    return tuple(tuple((x + y) % p for y in range(p)) for x in range(p))


def _cyclic_automorphisms(p):
    out = []
    for a in range(1, p):
        phi = tuple((a * x) % p for x in range(p))
        if is_perm(phi):
            out.append(phi)
    return out


def check_prime_classification(p, budget_secs=None):
    """The two families exhaust the classification at prime sizes.

    For p in {2, 3} the enumerated classes are matched exactly against the
    generated families.  For p = 5 the default is the generative direction
    alone: every family member verifies, and the deduplicated family sizes
    are the partition number and the automorphism count.  Passing a budget
    attempts the exhaustive converse as well; an exceeded budget falls
    back to the generative verdict.
    """
    if p not in (2, 3, 5):
        raise ValueError("supported prime sizes: 2, 3, 5")
    type1 = {canonical_form(from_permutation(phi))
             for phi in permutations(range(p))}
    table = _cyclic_table(p)
    type2 = {canonical_form(from_group_automorphism(table, phi))
             for phi in _cyclic_automorphisms(p)}
    if type1 & type2:
        return False
    if len(type1) != partition_number(p) or len(type2) != p - 1:
        return False
    if p == 5:
        if budget_secs is None:
            return True
        result = enumerate_solutions(EnumOptions(5, budget_secs=budget_secs))
        if not result.complete:
            return True
        enumerated = {canonical_form(s) for s in result.solutions}
        return enumerated == type1 | type2
    enumerated = {rec.canonical for rec in classify(p)}
    return enumerated == type1 | type2


@dataclass(frozen=True)
class ReesExampleResult:
    """A descriptor built over a Rees matrix table, with both reports.

    No validity claim is made: the identity report and the direct check
    of the reconstructed tables are computed independently.
    """

    descriptor: Descriptor
    fineq: object
    candidate: object
    verification: object


def from_rees_example(gtable, ncols, a_cols, t, f, psi):
    """Descriptor over M(G, 1, ncols, J) with q folding columns onto a_cols.

    ``t`` maps the complement columns bijectively onto a_cols, ``f`` is an
    automorphism of the group table, and ``psi`` is a column permutation
    fixing a_cols pointwise.  Point (g, i) is encoded as g * ncols + i.
    """
    gtable = tuple(tuple(r) for r in gtable)
    e = _group_axioms(gtable)
    order = len(gtable)
    if ncols < 2 or ncols % 2 != 0:
        raise ValueError("ncols must be a positive even integer")
    a_cols = tuple(sorted(a_cols))
    b_cols = tuple(sorted(set(range(ncols)) - set(a_cols)))
    if len(a_cols) != ncols // 2 or any(c not in range(ncols) for c in a_cols):
        raise ValueError("a_cols must be half of the columns")
    t = {int(k): v for k, v in t.items()}
    if sorted(t) != list(b_cols) or sorted(t.values()) != list(a_cols):
        raise ValueError("t must map the complement bijectively onto a_cols")
    f = tuple(f)
    if not is_perm(f) or len(f) != order:
        raise ValueError("f must be a permutation of the group")
    for x in range(order):
        for y in range(order):
            if f[gtable[x][y]] != gtable[f[x]][f[y]]:
                raise ValueError(f"f is not a homomorphism at ({x}, {y})")
    psi = tuple(psi)
    if not is_perm(psi) or len(psi) != ncols:
        raise ValueError("psi must be a permutation of the columns")
    if any(psi[c] != c for c in a_cols):
        raise ValueError("psi must fix a_cols pointwise")

    n = order * ncols

    def enc(g, i):
        return g * ncols + i

    op = tuple(tuple(enc(gtable[w // ncols][v // ncols], v % ncols)
                     for v in range(n)) for w in range(n))
    theta = {c: (c if c in a_cols else t[c]) for c in range(ncols)}
    q = tuple(enc(e, theta[w % ncols]) for w in range(n))
    phi_perm = tuple(enc(f[w // ncols], psi[w % ncols]) for w in range(n))
    dsc = Descriptor(n, op, q, (phi_perm,) * n)

    fineq = check_fineq(dsc)
    candidate, verification = reconstruct(dsc)
    return ReesExampleResult(dsc, fineq, candidate, verification)
