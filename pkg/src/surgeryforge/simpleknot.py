"""Simple knots K(p,q,k) in lens spaces: equivalence, gradings, Euler
characteristic, genus, and the quadratic congruence picking out surgery
duals of knots that embed in a genus one fiber.

K(p,q,k) is the unique simple (grid number one) knot in L(p,q) in homology
class k times the core of one Heegaard solid torus.  Its chain complex has p
generators and no differentials, so the Euler characteristic comes straight
from the symmetrized generator gradings:

    chi = (p / gcd(p,k)) * (1 - 2 * max A)

where the relative gradings telescope as
A_i - A_{i+1} = (1/p) * (res(i q^-1) - res((i+k) q^-1)), residues in
{0, ..., p-1}, and the set {A_i} is shifted so max = -min.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True, slots=True)
class SimpleKnot:
    p: int
    q: int
    k: int

    def __post_init__(self):
        if self.p < 2:
            raise ValueError("need p >= 2 (no simple knots in S^3 or S^1xS^2)")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"gcd({self.p},{self.q}) != 1")
        if not 0 < self.k < self.p:
            raise ValueError("need 0 < k < p")

    @property
    def k_canonical(self):
        """k and p-k name the same unoriented knot; report the smaller."""
        return min(self.k, self.p - self.k)

    @property
    def homological_order(self):
        return self.p // gcd(self.p, self.k)

    def __str__(self):
        return f"K({self.p},{self.q},{self.k})"


@dataclass(frozen=True, slots=True)
class GradingSet:
    """Symmetrized generator gradings: a multiset of exact rationals."""

    values: tuple

    def max(self):
        return max(self.values)

    def min(self):
        return min(self.values)


def _orbit(p, q, k):
    """Closure of (q mod p, k mod p) under the two equivalence moves:
    k -> -k, and (q, k) -> (q^-1, q^-1 k)."""
    start = (q % p, k % p)
    seen = {start}
    frontier = [start]
    while frontier:
        qq, kk = frontier.pop()
        qi = pow(qq, -1, p)
        for nxt in ((qq, (-kk) % p), (qi, (qi * kk) % p), (qi, (-qi * kk) % p)):
            if nxt not in seen:
                seen.add(nxt)
                frontier.append(nxt)
    return seen


def equivalent(k1, k2):
    """Orientation-preserving equivalence of simple knots (up to k -> -k)."""
    if k1.p != k2.p:
        return False
    return (k2.q % k1.p, k2.k % k1.p) in _orbit(k1.p, k1.q, k1.k)


def canonical_triple(p, q, k):
    """Smallest (q, k) representative of the equivalence class, as a tuple."""
    qq, kk = min(_orbit(p, q, k))
    return (p, qq, kk)


def _relative_gradings(p, q, k):
    """Integer numerators c_i with A_i = c_i / p and c_0 = 0."""
    qi = pow(q % p, -1, p)
    cs = [0]
    c = 0
    for i in range(p - 1):
        c -= (i * qi) % p - ((i + k) * qi) % p
        cs.append(c)
    return cs


def alexander_set(knot):
    """The symmetrized grading multiset (max = -min, exact rationals)."""
    p, q, k = knot.p, knot.q, knot.k
    cs = _relative_gradings(p, q, k)
    top, bot = max(cs), min(cs)
    vals = tuple(sorted(Fraction(2 * c - top - bot, 2 * p) for c in cs))
    return GradingSet(vals)


def euler_char(knot):
    """Exact integer Euler characteristic of the knot."""
    p, q, k = knot.p, knot.q, knot.k
    cs = _relative_gradings(p, q, k)
    spread = max(cs) - min(cs)
    g = gcd(p, k)
    # chi = (p/g) * (1 - spread/p) = (p - spread)/g; must divide exactly
    if (p - spread) % g != 0:
        raise AssertionError(f"non-integral Euler characteristic for {knot}")
    return (p - spread) // g


def genus_primitive(knot):
    """Genus of a primitive simple knot: g = (1 - chi)/2.

    A primitive knot (gcd(p,k) = 1) dual to a knot in S^3 caps off to a
    surface with one boundary component, so chi = 1 - 2g.  Requires odd chi.
    """
    if gcd(knot.p, knot.k) != 1:
        raise ValueError(f"{knot} is not primitive")
    chi = euler_char(knot)
    if chi % 2 == 0:
        raise ValueError(f"{knot} has even Euler characteristic {chi}")
    return (1 - chi) // 2


@dataclass(frozen=True, slots=True)
class StarSolution:
    """A residue k with k^2 + eps(k+1) = 0 mod p, with companion q = -k^2."""

    k: int
    q: int


def star_solutions(p, eps):
    """All raw residues 0 < k < p with k^2 + eps(k+1) = 0 (mod p).

    Solutions come in pairs under k <-> p-k only after passing to the
    equivalence of the named knots; the raw residues are reported with their
    companion classes q = -k^2 mod p.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    out = []
    for k in range(1, p):
        if (k * k + eps * (k + 1)) % p == 0:
            out.append(StarSolution(k, (-k * k) % p))
    return tuple(out)


def star_canonical(p, eps):
    """Solutions folded to (0, p/2] under k <-> p-k."""
    return tuple(sorted({min(s.k, p - s.k) for s in star_solutions(p, eps)}))


def knots_with_genus(lens, genus):
    """All primitive simple knots in the lens space with the given genus.

    Scans k in (0, p/2] with gcd(p,k) = 1; knots with even Euler
    characteristic have no genus in this convention and never match.
    """
    p, q = lens.p, lens.q
    if p < 2:
        return ()
    found = []
    for k in range(1, p // 2 + 1):
        if gcd(p, k) != 1:
            continue
        knot = SimpleKnot(p, q, k)
        chi = euler_char(knot)
        if chi % 2 != 0 and (1 - chi) // 2 == genus:
            found.append(knot)
    return tuple(found)
