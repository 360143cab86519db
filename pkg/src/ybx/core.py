"""Maps r(x, y) = (lam_x(y), rho_y(x)) on {0, ..., n-1} and their verification.

Conventions, fixed once for the whole package:

  - points are dense 0-based integers;
  - ``lam[x]`` is the image tuple of lam_x and ``rho[x][y] = rho_y(x)``;
  - composition lam_a lam_b applies lam_b first (``perms.compose``);
  - ``q(x) = lam_x^-1(x)`` is the diagonal map; its image is the diagonal;
  - ``d`` is the exponent of the permutation group generated by all lam_x.

A candidate table is an :class:`RMap`; :func:`check` evaluates the three
Yang-Baxter identities, left non-degeneracy and idempotency exhaustively,
and :func:`promote` upgrades a fully valid candidate to a :class:`Solution`
carrying the derived data (q, d).
"""

import json
from dataclasses import dataclass
from itertools import permutations

from .perms import compose, exponent, is_perm

IDENTITY_NAMES = ("ybe1", "ybe2", "ybe3", "left_nondegenerate", "idempotent")

ISO_MAX_POINTS = 7  # brute force over n! relabelings


class SolutionFormatError(ValueError):
    """Raised for malformed input tables or files."""


def _check_table(table, n, name):
    if len(table) != n:
        raise SolutionFormatError(f"{name} must have {n} rows")
    for row in table:
        if len(row) != n:
            raise SolutionFormatError(f"{name} rows must have length {n}")
        for v in row:
            if not (isinstance(v, int) and 0 <= v < n):
                raise SolutionFormatError(f"{name} entries must lie in [0, {n})")


@dataclass(frozen=True)
class RMap:
    """Candidate tables: n points, n self-maps lam[x], and rho[x][y] = rho_y(x)."""

    n: int
    lam: tuple
    rho: tuple

    def __post_init__(self):
        if self.n < 1:
            raise SolutionFormatError("n must be positive")
        object.__setattr__(self, "lam", tuple(tuple(r) for r in self.lam))
        object.__setattr__(self, "rho", tuple(tuple(r) for r in self.rho))
        _check_table(self.lam, self.n, "lambda")
        _check_table(self.rho, self.n, "rho")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the exhaustive checks on an RMap.

    ``first_counterexample`` is ``(identity name, points)`` for the first
    failing check in the order of :data:`IDENTITY_NAMES`, or None when all
    five booleans are true.  Re-evaluating the named identity at the cited
    points (see :func:`identity_holds`) reproduces the failure.
    """

    ybe1: bool
    ybe2: bool
    ybe3: bool
    left_nondegenerate: bool
    idempotent: bool
    first_counterexample: tuple = None

    @property
    def ok(self):
        return (self.ybe1 and self.ybe2 and self.ybe3
                and self.left_nondegenerate and self.idempotent)

    def to_json(self):
        return {
            "ybe1": self.ybe1,
            "ybe2": self.ybe2,
            "ybe3": self.ybe3,
            "left_nondegenerate": self.left_nondegenerate,
            "idempotent": self.idempotent,
            "first_counterexample": (list(self.first_counterexample)
                                     if self.first_counterexample else None),
            "ok": self.ok,
        }


class InvalidSolutionError(ValueError):
    """Rejection of a candidate, carrying the verification report."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"candidate fails {report.first_counterexample}")


@dataclass(frozen=True)
class Solution:
    """A verified idempotent left non-degenerate solution.

    Immutable; built by :func:`promote`.  ``q`` is the diagonal map table
    and ``d`` the exponent of the group generated by the lam_x.
    """

    n: int
    lam: tuple
    rho: tuple
    q: tuple
    d: int


def apply_r(m, x, y):
    """Evaluate r at a pair of points: (lam[x][y], rho[x][y])."""
    n = m.n
    if not (0 <= x < n and 0 <= y < n):
        raise ValueError(f"points must lie in [0, {n})")
    return (m.lam[x][y], m.rho[x][y])


def identity_holds(m, name, points):
    """Re-evaluate one named identity of :func:`check` at explicit points."""
    lam, rho = m.lam, m.rho
    if name == "ybe1":
        x, y, z = points
        return lam[x][lam[y][z]] == lam[lam[x][y]][lam[rho[x][y]][z]]
    if name == "ybe2":
        x, y, z = points
        lhs = lam[rho[x][lam[y][z]]][rho[y][z]]
        rhs = rho[lam[x][y]][lam[rho[x][y]][z]]
        return lhs == rhs
    if name == "ybe3":
        x, y, z = points
        lhs = rho[rho[x][y]][z]
        rhs = rho[rho[x][lam[y][z]]][rho[y][z]]
        return lhs == rhs
    if name == "left_nondegenerate":
        (x,) = points
        return is_perm(lam[x])
    if name == "idempotent":
        x, y = points
        w, v = lam[x][y], rho[x][y]
        return lam[w][v] == w and rho[w][v] == v
    raise ValueError(f"unknown identity {name!r}")


def check(m):
    """Exhaustively verify an RMap over all triples and pairs of points."""
    n = m.n
    rng = range(n)
    results = {}
    firsts = {}

    for name in ("ybe1", "ybe2", "ybe3"):
        ok = True
        for x in rng:
            for y in rng:
                for z in rng:
                    if not identity_holds(m, name, (x, y, z)):
                        ok = False
                        firsts.setdefault(name, (x, y, z))
                        break
                if not ok:
                    break
            if not ok:
                break
        results[name] = ok

    ok = True
    for x in rng:
        if not is_perm(m.lam[x]):
            ok = False
            firsts.setdefault("left_nondegenerate", (x,))
            break
    results["left_nondegenerate"] = ok

    ok = True
    for x in rng:
        for y in rng:
            if not identity_holds(m, "idempotent", (x, y)):
                ok = False
                firsts.setdefault("idempotent", (x, y))
                break
        if not ok:
            break
    results["idempotent"] = ok

    first = None
    for name in IDENTITY_NAMES:
        if not results[name]:
            first = (name, firsts[name])
            break
    return VerificationReport(first_counterexample=first, **results)


def diagonal_map(lam):
    """q(x) = lam_x^-1(x); requires every lam[x] to be a bijection."""
    q = []
    for x, row in enumerate(lam):
        if not is_perm(row):
            raise SolutionFormatError(f"lambda[{x}] is not a bijection")
        q.append(row.index(x))
    return tuple(q)


def promote(m):
    """Verify an RMap and return the Solution carrying q and d.

    The rho table of a valid candidate is forced to equal q(lam[x][y]);
    this is re-derived and asserted rather than trusted.
    """
    report = check(m)
    if not report.ok:
        raise InvalidSolutionError(report)
    q = diagonal_map(m.lam)
    for x in range(m.n):
        for y in range(m.n):
            # forced by idempotency; a failure here would be a bug in check()
            assert m.rho[x][y] == q[m.lam[x][y]]
    d = exponent(set(m.lam))
    return Solution(m.n, m.lam, m.rho, q, d)


def rmap_from_lambda(lam_rows):
    """Build an RMap from lam tables alone, deriving rho as q(lam[x][y])."""
    lam = tuple(tuple(r) for r in lam_rows)
    q = diagonal_map(lam)
    rho = tuple(tuple(q[v] for v in row) for row in lam)
    return RMap(len(lam), lam, rho)


def solution_from_lambda(lam_rows):
    return promote(rmap_from_lambda(lam_rows))


def _word_cache(s):
    try:
        return s._lam_words
    except AttributeError:
        object.__setattr__(s, "_lam_words", {})
        return s._lam_words


def lambda_word(s, x, k):
    """The permutation attached to the length-k element ending in x.

    Computed by the recurrence lam_{(k+1)x} = lam_{kx} . lam_{q^k(x)}
    (right factor applied first).  k = 0 is the caller's concern.
    Intermediate words are memoised per solution; the recurrence itself
    is never shortcut.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    cache = _word_cache(s)
    got = cache.get((x, k))
    if got is not None:
        return got
    j = k - 1
    while j > 1 and (x, j) not in cache:
        j -= 1
    if j <= 1:
        j = 1
        p = s.lam[x]
        cache[(x, 1)] = p
    else:
        p = cache[(x, j)]
    cur = q_power(s, x, j)
    while j < k:
        p = compose(p, s.lam[cur])
        j += 1
        cache[(x, j)] = p
        cur = s.q[cur]
    return p


def q_power(s, x, k):
    """k-fold application of the diagonal map; k = 0 returns x."""
    for _ in range(k):
        x = s.q[x]
    return x


def diagonal_image(s):
    """The diagonal: sorted image of q."""
    return tuple(sorted(set(s.q)))


def relabel_lambda(lam, psi):
    """Conjugated table: row psi(x) maps psi(y) to psi(lam[x][y])."""
    n = len(lam)
    out = [[0] * n for _ in range(n)]
    for x in range(n):
        px = psi[x]
        row = lam[x]
        for y in range(n):
            out[px][psi[y]] = psi[row[y]]
    return tuple(tuple(r) for r in out)


def _require_small(n):
    if n > ISO_MAX_POINTS:
        raise ValueError(
            f"isomorphism search is brute force and limited to n <= {ISO_MAX_POINTS}")


def iso_check(s1, s2):
    """A relabeling psi with lam2_psi(x) = psi lam1_x psi^-1, or None.

    rho is determined by lam and q on verified solutions, so matching the
    lam tables is enough.
    """
    if s1.n != s2.n:
        raise ValueError("solutions must have the same number of points")
    _require_small(s1.n)
    for psi in permutations(range(s1.n)):
        if relabel_lambda(s1.lam, psi) == s2.lam:
            return tuple(psi)
    return None


def canonical_form(s):
    """Lexicographically minimal flattened lam table over all relabelings."""
    _require_small(s.n)
    lam = s.lam
    best = None
    for psi in permutations(range(s.n)):
        flat = tuple(v for row in relabel_lambda(lam, psi) for v in row)
        if best is None or flat < best:
            best = flat
    return best


# ---------------------------------------------------------------------------
# solution files: {"n": int, "lambda": n x n, "rho": n x n (optional)}

def rmap_from_dict(data):
    if not isinstance(data, dict):
        raise SolutionFormatError("expected a JSON object")
    try:
        n = data["n"]
        lam = data["lambda"]
    except (KeyError, TypeError) as exc:
        raise SolutionFormatError("missing field: n and lambda are required") from exc
    if not isinstance(n, int):
        raise SolutionFormatError("n must be an integer")
    lam = tuple(tuple(row) for row in lam)
    _check_table(lam, n, "lambda")
    rho = data.get("rho")
    if rho is None:
        try:
            q = diagonal_map(lam)
        except SolutionFormatError as exc:
            raise SolutionFormatError(
                "rho is missing and cannot be derived: " + str(exc)) from exc
        rho = tuple(tuple(q[v] for v in row) for row in lam)
    else:
        rho = tuple(tuple(row) for row in rho)
    return RMap(n, lam, rho)


def rmap_to_dict(m):
    return {
        "n": m.n,
        "lambda": [list(row) for row in m.lam],
        "rho": [list(row) for row in m.rho],
    }


def load_rmap(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SolutionFormatError(f"invalid JSON: {exc}") from exc
    return rmap_from_dict(data)


def dump_solution(m, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(rmap_to_dict(m), fh, sort_keys=True)
        fh.write("\n")
