"""Structural decomposition of a verified solution.

Everything here is downstream of one operation: x . y = lam_{dx}(y), which
turns the point set into a left cancellative simple semigroup whose
idempotents form the diagonal.  The module computes the component map,
the partition into subsets X_u, the semigroup table with its Rees matrix
coordinates, the torsion group on each X_u, the maps phi_x = lam at
q^d(x), and the classification descriptor (table, q, phi) together with
its compatibility identities and the reconstruction of r from it.

Structural claims are verified exhaustively on every call.  A violated
claim is reported as a :class:`Discrepancy` value attached to the result;
it is never raised, so the library doubles as an empirical checker.
"""

from dataclasses import dataclass
from itertools import permutations

from .core import (RMap, check, diagonal_image, lambda_word, q_power,
                   relabel_lambda)
from .perms import compose, is_perm


@dataclass(frozen=True)
class Discrepancy:
    """A structural claim that failed, with the witnessing data."""

    claim: str
    counterexample: tuple
    context: tuple = ()

    def to_json(self):
        return {"claim": self.claim,
                "counterexample": list(self.counterexample),
                "context": list(self.context)}


@dataclass(frozen=True)
class DiagonalData:
    """The diagonal map, its image, the exponent, and the component table.

    ``components[(k, x)]`` is the component of the length-k element ending
    in x, for k in 1..d; larger lengths repeat with period d.
    """

    q: tuple
    image: tuple
    d: int
    components: tuple  # ((k, x, u), ...) sorted


def component_of(s, k, x):
    """The component q^k(x) of the length-k element ending in x."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return q_power(s, x, k)


def diagonal_data(s):
    comps = tuple(sorted((k, x, component_of(s, k, x))
                         for k in range(1, s.d + 1) for x in range(s.n)))
    return DiagonalData(s.q, diagonal_image(s), s.d, comps)


def partition(s):
    """The subsets X_u = {x : q^d(x) = u}, keyed by u in the diagonal.

    Membership is cross-checked against the equivalent condition
    lam_{dx}(u) = x.
    """
    parts = {u: [] for u in diagonal_image(s)}
    for x in range(s.n):
        u = q_power(s, x, s.d)
        parts[u].append(x)
        assert lambda_word(s, x, s.d)[u] == x
    return {u: tuple(xs) for u, xs in parts.items()}


@dataclass(frozen=True)
class SimpleSemigroupTable:
    """The operation x . y = lam_{dx}(y) with its verified structure.

    ``rees_coords[x] = (g, u)`` identifies x with the pair (x . base, column)
    of the Rees matrix form M(T, 1, |diagonal|, J) based at the smallest
    diagonal point.
    """

    op: tuple
    left_identities: tuple
    idempotents: tuple
    xu: tuple          # ((u, members...), ...) sorted by u
    rees_base: int
    rees_coords: tuple  # ((x, g, u), ...) sorted by x
    discrepancies: tuple

    def xu_dict(self):
        return {row[0]: row[1:] for row in self.xu}

    def coords_dict(self):
        return {x: (g, u) for x, g, u in self.rees_coords}


def semigroup(s):
    """Build and verify the simple semigroup on the points of s."""
    n, d = s.n, s.d
    rng = range(n)
    image = diagonal_image(s)
    bad = []

    op = tuple(tuple(lambda_word(s, x, d)) for x in rng)

    for x in rng:
        for y in rng:
            for z in rng:
                if op[op[x][y]][z] != op[x][op[y][z]]:
                    bad.append(Discrepancy("semigroup-associativity", (x, y, z)))
                    break
            else:
                continue
            break
        else:
            continue
        break

    for x in rng:
        if len(set(op[x])) != n:
            bad.append(Discrepancy("semigroup-left-cancellative", (x,)))
            break

    left_ids = tuple(u for u in rng if all(op[u][y] == y for y in rng))
    idem = tuple(x for x in rng if op[x][x] == x)
    if left_ids != image:
        bad.append(Discrepancy("left-identities-equal-diagonal", left_ids, image))
    if idem != image:
        bad.append(Discrepancy("idempotents-equal-diagonal", idem, image))

    parts = partition(s)
    sizes = {len(xs) for xs in parts.values()}
    covered = sorted(x for xs in parts.values() for x in xs)
    if covered != list(rng) or len(sizes) != 1:
        bad.append(Discrepancy("equal-size-component-cover",
                               tuple(covered), tuple(sorted(sizes))))
    for u, xs in parts.items():
        for x in xs:
            for y in xs:
                if op[x][y] not in xs:
                    bad.append(Discrepancy("component-closed", (u, x, y)))

    base = image[0]
    coords = {x: (op[x][base], q_power(s, x, d)) for x in rng}
    if len(set(coords.values())) != n:
        bad.append(Discrepancy("rees-coordinates-bijective", tuple(sorted(coords))))
    if n != len(image) * len(parts[base]):
        bad.append(Discrepancy("size-product", (n, len(image), len(parts[base]))))
    for x in rng:
        for y in rng:
            gx, _ = coords[x]
            gy, uy = coords[y]
            if coords[op[x][y]] != (op[gx][gy], uy):
                bad.append(Discrepancy("rees-multiplication", (x, y)))

    return SimpleSemigroupTable(
        op=op,
        left_identities=left_ids,
        idempotents=idem,
        xu=tuple((u,) + xs for u, xs in sorted(parts.items())),
        rees_base=base,
        rees_coords=tuple((x,) + coords[x] for x in rng),
        discrepancies=tuple(bad),
    )


@dataclass(frozen=True)
class TorsionGroupTable:
    """The finite group carried by X_u, with operation x . y = lam_{dx}(y)."""

    u: int
    elements: tuple
    op: tuple        # op[i][j] is a point, indices follow ``elements``
    identity: int
    orders: tuple    # ((element, order), ...)
    discrepancies: tuple

    def order_of(self, x):
        return dict(self.orders)[x]


def torsion(s, u):
    """The torsion group on X_u; verifies the group axioms and orders."""
    if u not in set(s.q):
        raise ValueError(f"{u} is not a diagonal point")
    xs = partition(s)[u]
    index = {x: i for i, x in enumerate(xs)}
    d = s.d
    bad = []

    table = tuple(tuple(lambda_word(s, x, d)[y] for y in xs) for x in xs)

    closed = True
    for i, x in enumerate(xs):
        for j, y in enumerate(xs):
            if table[i][j] not in index:
                closed = False
                bad.append(Discrepancy("torsion-closed", (u, x, y)))
    orders = ()
    if closed:
        for i, x in enumerate(xs):
            for j, y in enumerate(xs):
                for k, z in enumerate(xs):
                    lhs = table[index[table[i][j]]][k]
                    rhs = table[i][index[table[j][k]]]
                    if lhs != rhs:
                        bad.append(Discrepancy("torsion-associative", (u, x, y, z)))
        ui = index[u]
        if any(table[ui][j] != y for j, y in enumerate(xs)) or \
           any(table[i][ui] != x for i, x in enumerate(xs)):
            bad.append(Discrepancy("torsion-identity", (u,)))
        for i, x in enumerate(xs):
            if u not in (table[i][j] for j in range(len(xs))):
                bad.append(Discrepancy("torsion-inverses", (u, x)))

        found = []
        for x in xs:
            y, k = x, 1
            while y != u:
                y = table[index[y]][index[x]]
                k += 1
                if k > d + 1:
                    break
            found.append((x, k))
            if d % k != 0:
                bad.append(Discrepancy("torsion-order-divides-exponent", (u, x, k)))
        orders = tuple(found)

    # lam_x factors through the torsion permutation and lam_u
    for x in xs:
        if s.lam[x] != compose(lambda_word(s, x, d), s.lam[u]):
            bad.append(Discrepancy("lambda-factorisation", (u, x)))

    return TorsionGroupTable(u, xs, table, u, orders, tuple(bad))


def torsion_iso(s, u, v):
    """The isomorphism x -> x . v between the torsion groups of u and v."""
    image = set(s.q)
    if u not in image or v not in image:
        raise ValueError("both points must lie in the diagonal")
    parts = partition(s)
    xs, ys = parts[u], parts[v]
    f = {x: lambda_word(s, x, s.d)[v] for x in xs}
    bad = []
    if sorted(f.values()) != sorted(ys):
        bad.append(Discrepancy("torsion-iso-bijective", (u, v)))
    opu = {(a, b): lambda_word(s, a, s.d)[b] for a in xs for b in xs}
    for a in xs:
        for b in xs:
            if f[opu[a, b]] != lambda_word(s, f[a], s.d)[f[b]]:
                bad.append(Discrepancy("torsion-iso-homomorphism", (u, v, a, b)))
    return f, tuple(bad)


def phi_maps(s):
    """The permutations phi_x = lam at q^d(x); constant on each X_u.

    The defining property lam_x(y) = x . phi_x(y) is verified exhaustively;
    any failure is returned alongside the maps.
    """
    n, d = s.n, s.d
    phi = tuple(s.lam[q_power(s, x, d)] for x in range(n))
    bad = []
    for x in range(n):
        row = lambda_word(s, x, d)
        for y in range(n):
            if s.lam[x][y] != row[phi[x][y]]:
                bad.append(Discrepancy("lambda-from-phi", (x, y)))
    return phi, tuple(bad)


@dataclass(frozen=True)
class Descriptor:
    """Classification data: semigroup table, diagonal map, phi permutations."""

    n: int
    op: tuple
    q: tuple
    phi: tuple

    def to_json(self):
        return {"n": self.n,
                "op": [list(r) for r in self.op],
                "q": list(self.q),
                "phi": [list(p) for p in self.phi]}


def descriptor_from_dict(data):
    from .core import SolutionFormatError, _check_table
    try:
        n = data["n"]
        op = tuple(tuple(r) for r in data["op"])
        q = tuple(data["q"])
        phi = tuple(tuple(p) for p in data["phi"])
    except (KeyError, TypeError) as exc:
        raise SolutionFormatError("descriptor needs n, op, q, phi") from exc
    _check_table(op, n, "op")
    _check_table(phi, n, "phi")
    if len(q) != n or any(not (isinstance(v, int) and 0 <= v < n) for v in q):
        raise SolutionFormatError("q must be a length-n table of points")
    return Descriptor(n, op, q, phi)


def descriptor(s):
    """Bundle the semigroup table, q and the phi maps of a solution."""
    phi, bad = phi_maps(s)
    assert not bad
    return Descriptor(s.n, semigroup(s).op, s.q, phi)


@dataclass(frozen=True)
class AllPhiReport:
    """The four reduced conditions when all phi_x coincide."""

    automorphism: bool
    phi_q_is_q2: bool
    q_is_q4: bool
    absorbs_q2: bool  # q(x . q^2(x)) = q(x)
    counterexamples: tuple

    def to_json(self):
        return {"automorphism": self.automorphism,
                "phi_q_is_q2": self.phi_q_is_q2,
                "q_is_q4": self.q_is_q4,
                "absorbs_q2": self.absorbs_q2,
                "counterexamples": [list(c) for c in self.counterexamples]}


@dataclass(frozen=True)
class FineqReport:
    """Exhaustive evaluation of the four descriptor identities."""

    fineq1: bool
    fineq2: bool
    fineq3: bool
    fineq4: bool
    counterexamples: tuple  # ((name, points), ...)
    allphi: AllPhiReport = None

    @property
    def ok(self):
        return self.fineq1 and self.fineq2 and self.fineq3 and self.fineq4

    def to_json(self):
        return {"fineq1": self.fineq1, "fineq2": self.fineq2,
                "fineq3": self.fineq3, "fineq4": self.fineq4,
                "counterexamples": [[n, list(p)] for n, p in self.counterexamples],
                "allphi": self.allphi.to_json() if self.allphi else None,
                "ok": self.ok}


def fineq_holds(dsc, name, points):
    """Re-evaluate one descriptor identity at explicit points."""
    op, q, phi = dsc.op, dsc.q, dsc.phi
    if name == "fineq4":
        (x,) = points
        return q[op[x][phi[x][q[x]]]] == q[x]
    x, y, z = points
    a = op[x][phi[x][y]]          # x . phi_x(y)
    b = op[y][phi[y][z]]          # y . phi_y(z)
    c = op[x][phi[x][b]]          # x . phi_x(y . phi_y(z))
    if name == "fineq1":
        return phi[x][b] == op[phi[x][y]][phi[a][phi[q[a]][z]]]
    if name == "fineq2":
        return phi[q[c]][q[b]] == q[op[a][phi[a][phi[q[a]][z]]]]
    if name == "fineq3":
        return q[phi[q[a]][z]] == q[phi[c][q[b]]]
    raise ValueError(f"unknown identity {name!r}")


def check_fineq(dsc):
    """Evaluate the four compatibility identities of a descriptor.

    When all phi_x coincide, the reduced conditions are evaluated as well
    and reported side by side.
    """
    n = dsc.n
    rng = range(n)
    results = {}
    examples = []
    for name in ("fineq1", "fineq2", "fineq3"):
        ok = True
        for x in rng:
            for y in rng:
                for z in rng:
                    if not fineq_holds(dsc, name, (x, y, z)):
                        ok = False
                        examples.append((name, (x, y, z)))
                        break
                if not ok:
                    break
            if not ok:
                break
        results[name] = ok
    ok = True
    for x in rng:
        if not fineq_holds(dsc, "fineq4", (x,)):
            ok = False
            examples.append(("fineq4", (x,)))
            break
    results["fineq4"] = ok

    allphi = None
    if len(set(dsc.phi)) == 1:
        phi = dsc.phi[0]
        op, q = dsc.op, dsc.q
        ce = []
        auto = is_perm(phi)
        for x in rng:
            for y in rng:
                if phi[op[x][y]] != op[phi[x]][phi[y]]:
                    auto = False
                    ce.append(("automorphism", x, y))
                    break
            if not auto:
                break
        pq = all(phi[q[x]] == q[q[x]] for x in rng)
        if not pq:
            ce.append(("phi_q_is_q2",))
        q4 = all(q[x] == q[q[q[q[x]]]] for x in rng)
        if not q4:
            ce.append(("q_is_q4",))
        ab = all(q[op[x][q[q[x]]]] == q[x] for x in rng)
        if not ab:
            ce.append(("absorbs_q2",))
        allphi = AllPhiReport(auto, pq, q4, ab, tuple(ce))

    return FineqReport(counterexamples=tuple(examples), allphi=allphi, **results)


def q_image_in_idempotents(dsc):
    """Whether im(q) lands in, and onto, the idempotents of the table."""
    idem = tuple(x for x in range(dsc.n) if dsc.op[x][x] == x)
    image = tuple(sorted(set(dsc.q)))
    inside = all(u in idem for u in image)
    onto = set(image) == set(idem)
    return {"q_image": image, "idempotents": idem,
            "contained": inside, "onto": onto}


def descriptor_diagnostics(dsc):
    """Structural checks on a free-standing descriptor table.

    The table must be an associative, left cancellative operation whose
    idempotents are left identities, the phi entries must be bijections,
    and im(q) must consist of idempotents.  Used for descriptors read from
    files; descriptors built from a verified solution satisfy all of this
    by construction.
    """
    n = dsc.n
    rng = range(n)
    op = dsc.op
    bad = []
    for x in rng:
        for y in rng:
            for z in rng:
                if op[op[x][y]][z] != op[x][op[y][z]]:
                    bad.append(Discrepancy("descriptor-associativity", (x, y, z)))
                    break
            else:
                continue
            break
    for x in rng:
        if len(set(op[x])) != n:
            bad.append(Discrepancy("descriptor-left-cancellative", (x,)))
    for x in rng:
        if op[x][x] == x and any(op[x][y] != y for y in rng):
            bad.append(Discrepancy("descriptor-idempotent-not-left-identity", (x,)))
    for x in rng:
        if not is_perm(dsc.phi[x]):
            bad.append(Discrepancy("descriptor-phi-not-bijective", (x,)))
    info = q_image_in_idempotents(dsc)
    if not info["contained"]:
        bad.append(Discrepancy("descriptor-q-image-not-idempotent",
                               info["q_image"], info["idempotents"]))
    return tuple(bad)


def reconstruct(dsc):
    """Candidate tables lam[x][y] = op[x][phi_x(y)], rho = q . lam.

    The result is always run through the full exhaustive check; validity
    is reported, never assumed from the identities alone.
    """
    n = dsc.n
    lam = tuple(tuple(dsc.op[x][dsc.phi[x][y]] for y in range(n))
                for x in range(n))
    rho = tuple(tuple(dsc.q[v] for v in row) for row in lam)
    m = RMap(n, lam, rho)
    return m, check(m)


def roundtrip(s):
    """Whether descriptor -> reconstruct reproduces the solution exactly."""
    m, _ = reconstruct(descriptor(s))
    return m.lam == s.lam and m.rho == s.rho


def roundtrip_discrepancies(s):
    m, _ = reconstruct(descriptor(s))
    bad = []
    for x in range(s.n):
        for y in range(s.n):
            if m.lam[x][y] != s.lam[x][y]:
                bad.append(Discrepancy("roundtrip-lambda",
                                       (x, y, s.lam[x][y], m.lam[x][y])))
            if m.rho[x][y] != s.rho[x][y]:
                bad.append(Discrepancy("roundtrip-rho",
                                       (x, y, s.rho[x][y], m.rho[x][y])))
    return tuple(bad)


def canonical_group_table(table):
    """Minimal relabeling of a small group table, for classification keys."""
    n = len(table)
    best = None
    for psi in permutations(range(n)):
        flat = tuple(v for row in relabel_lambda(table, psi) for v in row)
        if best is None or flat < best:
            best = flat
    return best


def structure_discrepancies(s):
    """All table-level discrepancies: semigroup, torsion, phi, roundtrip."""
    out = list(semigroup(s).discrepancies)
    for u in diagonal_image(s):
        out.extend(torsion(s, u).discrepancies)
        for v in diagonal_image(s):
            out.extend(torsion_iso(s, u, v)[1])
    out.extend(phi_maps(s)[1])
    out.extend(roundtrip_discrepancies(s))
    rep = check_fineq(descriptor(s))
    if not rep.ok:
        out.append(Discrepancy("descriptor-identities", rep.counterexamples))
    return tuple(out)
