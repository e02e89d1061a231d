"""Exact extended-rational arithmetic and minus-convention continued fractions.

Slopes on tori, rational-tangle parameters and surgery coefficients all live
in the extended rationals Qhat = Q ∪ {inf}.  Everything here is exact integer
arithmetic; no floating point appears anywhere in this package.

Continued fractions use the minus convention

    [a1, a2, ..., an] = a1 - 1/(a2 - 1/( ... - 1/an))

evaluated right to left by x -> a - 1/x with the Moebius conventions
1/0 = inf, 1/inf = 0 and a - inf = inf.  The empty word evaluates to inf.
Only the final entry of a continued fraction may itself be a rational; this
is what the tangle calculus needs for words like [-1, h, sw].
"""

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True, slots=True)
class ExtRational:
    """A reduced fraction num/den in Qhat.

    Invariants after construction: gcd(num, den) = 1, den >= 0, and den = 0
    only for inf which is stored as 1/0 (slopes are unoriented, so -1/0 is
    the same slope).  Zero is 0/1.
    """

    num: int
    den: int = 1

    def __post_init__(self):
        num, den = self.num, self.den
        if den == 0:
            if num == 0:
                raise ValueError("0/0 is not a slope")
            num = 1
        else:
            if den < 0:
                num, den = -num, -den
            g = gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @property
    def is_infinite(self):
        return self.den == 0

    @property
    def is_integer(self):
        return self.den == 1

    def sort_key(self):
        # Deterministic total order on representations, not the numeric order.
        return (self.den == 0, self.num, self.den)

    def __str__(self):
        if self.den == 0:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INF = ExtRational(1, 0)
ZERO = ExtRational(0, 1)
ONE = ExtRational(1, 1)


def rat(num, den=1):
    """Shorthand constructor for ExtRational."""
    return ExtRational(num, den)


def parse_slope(text):
    """Parse 'p/q', a plain integer, or 'inf' into an ExtRational."""
    s = text.strip()
    if s.lower() in ("inf", "infinity", "1/0"):
        return INF
    if "/" in s:
        a, b = s.split("/", 1)
        return ExtRational(int(a), int(b))
    return ExtRational(int(s))


def _mobius(x, a, b, c, d):
    # x -> (a x + b)/(c x + d) for an integer matrix with nonzero determinant.
    return ExtRational(a * x.num + b * x.den, c * x.num + d * x.den)


def reciprocal(x):
    """x -> 1/x, with 1/0 = inf and 1/inf = 0."""
    return _mobius(x, 0, 1, 1, 0)


def negate(x):
    """x -> -x; fixes 0 and inf."""
    return _mobius(x, -1, 0, 0, 1)


def shift(x, n):
    """x -> x + n for an integer n; fixes inf."""
    return _mobius(x, 1, n, 0, 1)


def rot_map(x):
    """The order-3 map x -> 1/(1 - x)."""
    return _mobius(x, 0, 1, -1, 1)


def corot_map(x):
    """The order-3 map x -> -1/(1 + x)."""
    return _mobius(x, 0, -1, 1, 1)


def one_minus_reciprocal(x):
    """x -> 1 - 1/x, inverse of rot_map."""
    return _mobius(x, 1, -1, 1, 0)


def add(x, y):
    """Rational addition with inf absorbing (inf + y = inf)."""
    if x.is_infinite or y.is_infinite:
        return INF
    return ExtRational(x.num * y.den + y.num * x.den, x.den * y.den)


MOBIUS_MAPS = {
    "reciprocal": reciprocal,
    "negate": negate,
    "f": rot_map,
    "g": corot_map,
}


def mobius(x, name, n=None):
    """Apply a named Moebius map; name 'shift' uses the integer n."""
    if name == "shift":
        if n is None:
            raise ValueError("shift needs an integer amount")
        return shift(x, n)
    try:
        return MOBIUS_MAPS[name](x)
    except KeyError:
        raise ValueError(f"unknown Moebius map {name!r}") from None


def cf_step(coeff, x):
    """One minus-convention step: coeff - 1/x (coeff may be an ExtRational)."""
    if isinstance(coeff, int):
        coeff = ExtRational(coeff)
    if x.is_infinite:
        return coeff
    if x.num == 0:
        return INF
    return add(coeff, ExtRational(-x.den, x.num))


def cf_eval(coeffs):
    """Evaluate a minus-convention continued fraction.

    coeffs is a sequence of integers whose final entry may instead be an
    ExtRational (a rational tail).  The empty sequence evaluates to inf.
    """
    coeffs = list(coeffs)
    for i, c in enumerate(coeffs):
        if not isinstance(c, int):
            if not isinstance(c, ExtRational):
                raise TypeError(f"coefficient {c!r} is neither int nor ExtRational")
            if i != len(coeffs) - 1:
                raise ValueError("only the final entry may be non-integral")
    value = INF
    for c in reversed(coeffs):
        value = cf_step(c, value)
    return value


@dataclass(frozen=True, slots=True)
class ContFrac:
    """A minus-convention continued fraction word.

    All entries are integers except that the last may be an ExtRational.
    """

    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(self.coeffs)
        for i, c in enumerate(coeffs):
            if isinstance(c, int):
                continue
            if isinstance(c, ExtRational) and i == len(coeffs) - 1:
                continue
            raise ValueError("only the final entry may be non-integral")
        object.__setattr__(self, "coeffs", coeffs)

    def value(self):
        return cf_eval(self.coeffs)

    def __str__(self):
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"


def parse_cf(text):
    """Parse '[a1,a2,...,an]' (final entry may be 'p/q' or 'inf')."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"not a continued fraction literal: {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ContFrac(())
    parts = [p.strip() for p in body.split(",")]
    coeffs = []
    for i, p in enumerate(parts):
        if i == len(parts) - 1 and ("/" in p or p.lower() == "inf"):
            coeffs.append(parse_slope(p))
        else:
            coeffs.append(int(p))
    return ContFrac(tuple(coeffs))


def cf_solve_tail(prefix, target_j):
    """The unique r/s with [a1, ..., an, r/s] = [0, j].

    Computed by evaluating [0, -an, ..., -a1, j]; [0, j] itself is -1/j.
    """
    word = [0] + [-a for a in reversed(tuple(prefix))] + [target_j]
    return cf_eval(word)


def cf_expand_norm(x):
    """The unique expansion of x = p/q (p > q >= 1) with all entries >= 2.

    inf expands to the empty sequence.  Finite x <= 1 is rejected: those
    values have no expansion with every coefficient at least 2.
    """
    if x.is_infinite:
        return ()
    if x.num <= x.den:
        raise ValueError(f"{x} has no all->=2 expansion (need p/q > 1)")
    coeffs = []
    p, q = x.num, x.den
    while q != 0:
        a = -((-p) // q)  # ceil(p/q)
        coeffs.append(a)
        # p/q = a - 1/x'  with  x' = q/(a*q - p), again > 1 when finite,
        # so every coefficient comes out >= 2.
        p, q = q, a * q - p
    return tuple(coeffs)
