"""Quadratic binomial rewriting for structure algebras.

Words are tuples of letters 0..n-1, compared in degree-lexicographic
order.  Every rule replaces a two-letter factor by a smaller two-letter
factor, so reduction terminates; a system whose length-3 overlap words
all resolve to a common normal form has unique normal forms in every
degree, and counting irreducible words then counts a basis of the
algebra.

The defining relations of a solution identify pairs of two-letter words.
Because both sides have length 2, new quadratic consequences arise only
from chains of the given pairs, never from overlaps; the bounded
completion therefore takes the transitive closure at degree 2, orients
each class onto its minimal word, and reports any unresolved length-3
overlap as an obstruction to quadratic confluence.
"""

from dataclasses import dataclass

from .core import SolutionFormatError


@dataclass(frozen=True, order=True)
class Rule:
    lhs: tuple
    rhs: tuple


def _deglex_less(a, b, rank):
    if len(a) != len(b):
        return len(a) < len(b)
    ka = tuple(rank[v] for v in a)
    kb = tuple(rank[v] for v in b)
    return ka < kb


@dataclass(frozen=True)
class RewriteSystem:
    """Quadratic rules over letters 0..n-1 with a total letter order."""

    n: int
    rules: tuple
    order: tuple = None

    def __post_init__(self):
        if self.order is None:
            object.__setattr__(self, "order", tuple(range(self.n)))
        object.__setattr__(self, "rules", tuple(sorted(set(self.rules))))
        rank = {v: i for i, v in enumerate(self.order)}
        seen = set()
        for rule in self.rules:
            if len(rule.lhs) != 2 or len(rule.rhs) != 2:
                raise ValueError("rules must be quadratic")
            if not _deglex_less(rule.rhs, rule.lhs, rank):
                raise ValueError(f"rule {rule} does not decrease the word order")
            if rule.lhs in seen:
                raise ValueError(f"two rules share the left side {rule.lhs}")
            seen.add(rule.lhs)

    def rule_map(self):
        return {r.lhs: r.rhs for r in self.rules}

    def to_json(self):
        return {"n": self.n,
                "order": list(self.order),
                "rules": [[list(r.lhs), list(r.rhs)] for r in self.rules]}


def system_from_dict(data):
    try:
        n = data["n"]
        rules = tuple(Rule(tuple(l), tuple(r)) for l, r in data["rules"])
        order = tuple(data["order"]) if "order" in data else None
    except (KeyError, TypeError, ValueError) as exc:
        raise SolutionFormatError("rewrite system needs n and rules") from exc
    return RewriteSystem(n, rules, order)


def constant_rules(n):
    """The confluent system of the constant-action solutions: yz -> 0z.

    The presentation collapses every product xy to yy, and interreduction
    keeps only the rules aiming at the minimal letter.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    rules = tuple(Rule((y, z), (0, z)) for y in range(1, n) for z in range(n))
    return RewriteSystem(n, rules)


def reduce(rs, word):
    """Apply the leftmost applicable rule until the word is irreducible."""
    rules = rs.rule_map()
    w = list(word)
    i = 0
    while i + 1 < len(w):
        image = rules.get((w[i], w[i + 1]))
        if image is None:
            i += 1
        else:
            w[i], w[i + 1] = image
            i = 0
    return tuple(w)


def is_normal(rs, word):
    rules = rs.rule_map()
    return all((word[i], word[i + 1]) not in rules for i in range(len(word) - 1))


def check_overlaps(rs):
    """Unresolved length-3 ambiguities; an empty list certifies confluence."""
    rules = rs.rule_map()
    unresolved = []
    for (a, b) in sorted(rules):
        for (b2, c) in sorted(rules):
            if b2 != b:
                continue
            left = reduce(rs, rules[(a, b)] + (c,))
            right = reduce(rs, (a,) + rules[(b, c)])
            if left != right:
                unresolved.append(((a, b, c), left, right))
    return unresolved


def normal_word_count(rs, max_deg):
    """Irreducible words per degree 1..max_deg, by adjacency counting."""
    if max_deg < 1:
        raise ValueError("max_deg must be >= 1")
    n = rs.n
    rules = rs.rule_map()
    allowed = [[(a, b) not in rules for b in range(n)] for a in range(n)]
    counts = []
    vec = [1] * n
    counts.append(sum(vec))
    for _ in range(max_deg - 1):
        vec = [sum(vec[a] for a in range(n) if allowed[a][b]) for b in range(n)]
        counts.append(sum(vec))
    return counts


@dataclass(frozen=True)
class CompletionReport:
    confluent: bool
    unresolved: tuple
    nontrivial_relations: int
    status: str

    def to_json(self):
        return {"confluent": self.confluent,
                "unresolved": [[list(w), list(l), list(r)]
                               for w, l, r in self.unresolved],
                "nontrivial_relations": self.nontrivial_relations,
                "status": self.status}


def solution_rules(s):
    """Orient the defining relations of a solution and test confluence.

    Returns the interreduced quadratic system together with a completion
    report; when the report is confluent, normal words are a basis and
    their counts must match the monoid growth.
    """
    n = s.n
    parent = {}

    def find(w):
        while parent.setdefault(w, w) != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    nontrivial = 0
    for x in range(n):
        for y in range(n):
            lhs = (x, y)
            rhs = (s.lam[x][y], s.rho[x][y])
            if lhs != rhs:
                nontrivial += 1
            ra, rb = find(lhs), find(rhs)
            if ra != rb:
                parent[rb] = ra

    classes = {}
    for x in range(n):
        for y in range(n):
            classes.setdefault(find((x, y)), []).append((x, y))

    rules = []
    for members in classes.values():
        rep = min(members)
        for w in members:
            if w != rep:
                rules.append(Rule(w, rep))
    rs = RewriteSystem(n, tuple(rules))

    unresolved = tuple(check_overlaps(rs))
    status = "confluent" if not unresolved else "not quadratically confluent"
    report = CompletionReport(not unresolved, unresolved, nontrivial, status)
    return rs, report
