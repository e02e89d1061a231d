"""Norm and weak-norm sequences for lens spaces.

A sequence (a_1, ..., a_n) encodes the lens space L(p,q) with
p/q = [a_1, ..., a_n] via surgery on a linear chain link (the i-th component
gets coefficient -a_i).  It is a norm sequence if every a_i >= 2 and a weak
norm sequence if every a_i >= 0 or it is empty.  A sequence and its reverse
name the same lens space up to orientation-preserving homeomorphism
(reversal inverts q mod p).

Shorthand: 2^[t] stands for the entry 2 repeated t times.  t = 0 blocks are
omitted and t = -1 blocks are removed by the fusion rules

    (..., a, 2^[-1], b, ...) = (..., a+b-2, ...)
    (..., a, b, 2^[-1])      = (..., a)

Entries 0 and 1 reduce away except in the terminal sequences (0) and (1):
(0) names S^1 x S^2 while (1) and () name S^3.
"""

from dataclasses import dataclass

from .lens import LensSpace, from_fraction
from .rationals import INF, ExtRational, cf_expand_norm, cf_step


@dataclass(frozen=True, slots=True)
class Pow2:
    """The shorthand block 2^[t]."""

    t: int

    def __str__(self):
        return f"2^[{self.t}]"


@dataclass(frozen=True, slots=True)
class NormSeq:
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if not all(isinstance(e, int) for e in entries):
            raise ValueError("NormSeq entries must be plain integers")
        object.__setattr__(self, "entries", entries)

    @property
    def kind(self):
        if self.entries and all(e >= 2 for e in self.entries):
            return "norm"
        if all(e >= 0 for e in self.entries):
            return "weak"
        return "raw"

    def reversed(self):
        return NormSeq(tuple(reversed(self.entries)))

    def __len__(self):
        return len(self.entries)

    def __str__(self):
        return "(" + ",".join(str(e) for e in self.entries) + ")"


def parse_seq(text):
    """Parse '(a1,a2,...,an)' where entries may use the 2^[t] shorthand."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    items = []
    for part in s.split(","):
        part = part.strip()
        if not part:
            continue
        if part.startswith("2^[") and part.endswith("]"):
            items.append(Pow2(int(part[3:-1])))
        else:
            items.append(int(part))
    return tuple(items)


def format_items(items):
    return "(" + ",".join(str(e) for e in items) + ")"


def eval_items(items):
    """Exact continued-fraction value of a sequence with 2^[t] blocks.

    A block acts as the t-th power of the Moebius map T(x) = 2 - 1/x, which
    for t copies of the literal entry 2 agrees with plain evaluation and
    extends it to t = -1.
    """
    value = INF
    for item in reversed(list(items)):
        if isinstance(item, Pow2):
            t = item.t
            # T^t as a matrix: x -> ((t+1)x - t) / (tx - (t-1))
            num = (t + 1) * value.num - t * value.den
            den = t * value.num - (t - 1) * value.den
            if num == 0 and den == 0:
                raise ValueError("degenerate block evaluation")
            value = ExtRational(num, den)
        else:
            value = cf_step(item, value)
    return value


def to_lens(seq):
    """The lens space named by a sequence: L(p,q) with p/q its value."""
    items = seq.entries if isinstance(seq, NormSeq) else tuple(seq)
    return from_fraction(eval_items(items))


# ---------------------------------------------------------------------------
# Rewrite engine.
#
# Rules on mixed int/Pow2 item lists.  Every rule preserves the named lens
# space; all except the reversal step preserve the exact fraction value.
# The side conditions on the 0/1 rules rule out the overlapping redexes that
# would otherwise make the system non-confluent.
# ---------------------------------------------------------------------------


def applicable_rewrites(items):
    """All (rule, index) pairs applicable to the item list."""
    out = []
    n = len(items)

    def is_int(i):
        return 0 <= i < n and isinstance(items[i], int)

    for i, item in enumerate(items):
        if isinstance(item, Pow2):
            if item.t >= 0:
                out.append(("expand", i))
            elif i == 0 and n >= 2 and is_int(1):
                out.append(("fuse_front", i))
            elif 0 < i < n - 1 and is_int(i - 1) and is_int(i + 1):
                out.append(("fuse_mid", i))
            elif i == n - 1 and n >= 2 and is_int(n - 2):
                out.append(("fuse_end", i))
            elif n == 1:
                out.append(("fuse_bare", i))
            continue
        if item == 0:
            if 0 < i < n - 1 and is_int(i - 1) and is_int(i + 1):
                out.append(("zero_mid", i))
            elif i == n - 1 and n >= 2 and is_int(n - 2):
                out.append(("zero_end", i))
        elif item == 1:
            if (0 < i < n - 1 and is_int(i - 1) and is_int(i + 1)
                    and items[i - 1] != 0 and items[i + 1] != 0):
                out.append(("one_mid", i))
            elif i == n - 1 and n >= 2 and is_int(n - 2) and items[n - 2] != 0:
                out.append(("one_end", i))
    if not out and n >= 2 and items[0] in (0, 1):
        # only a leading redex remains; reversal is free on norm sequences
        out.append(("reverse", 0))
    return out


def apply_rewrite(items, rule):
    name, i = rule
    items = list(items)
    if name == "expand":
        items[i:i + 1] = [2] * items[i].t
    elif name == "fuse_front":
        items[:2] = [0, items[1] - 2]
    elif name == "fuse_mid":
        items[i - 1:i + 2] = [items[i - 1] + items[i + 1] - 2]
    elif name == "fuse_end":
        del items[-2:]
    elif name == "fuse_bare":
        items[:] = [0]
    elif name == "zero_mid":
        items[i - 1:i + 2] = [items[i - 1] + items[i + 1]]
    elif name == "zero_end":
        del items[-2:]
    elif name == "one_mid":
        items[i - 1:i + 2] = [items[i - 1] - 1, items[i + 1] - 1]
    elif name == "one_end":
        items[-2:] = [items[-2] - 1]
    elif name == "reverse":
        items.reverse()
    else:
        raise ValueError(f"unknown rewrite {name!r}")
    return items


_PRIORITY = {
    "expand": 0, "fuse_front": 0, "fuse_mid": 0, "fuse_end": 0, "fuse_bare": 0,
    "zero_mid": 1, "zero_end": 1, "one_mid": 2, "one_end": 2, "reverse": 3,
}


def reduce_seq(seq):
    """Canonical reduced form: blocks eliminated, no removable 0/1 entries.

    The result still names the same lens space (orientedly); the terminal
    forms (0) and () / (1) name S^1 x S^2 and S^3.
    """
    if isinstance(seq, NormSeq):
        items = list(seq.entries)
    else:
        items = list(seq)
    while True:
        rules = applicable_rewrites(items)
        if not rules:
            if any(isinstance(e, Pow2) for e in items):
                raise ValueError("adjacent shorthand blocks are not reducible")
            return NormSeq(tuple(items))
        rule = min(rules, key=lambda r: (_PRIORITY[r[0]], r[1]))
        items = apply_rewrite(items, rule)


# ---------------------------------------------------------------------------
# Riemenschneider point rule.
# ---------------------------------------------------------------------------


def riemenschneider_dual(seq):
    """The dual of an all->=2 sequence by the point rule.

    Row i of a staircase carries a_i - 1 dots, each row starting in the
    column of the last dot of the row above; the dual entry b_j is one more
    than the number of dots in column j.  The dual satisfies
    1/[a_1,...,a_l] + 1/[b_1,...,b_m] = 1 exactly, and the rule is an
    involution.
    """
    entries = seq.entries if isinstance(seq, NormSeq) else tuple(seq)
    if not entries or any(a < 2 for a in entries):
        raise ValueError("point rule needs a nonempty all->=2 sequence")
    col_counts = []
    col = 0
    for a in entries:
        for j in range(col, col + a - 1):
            if j == len(col_counts):
                col_counts.append(0)
            col_counts[j] += 1
        col = col + a - 2
    return NormSeq(tuple(c + 1 for c in col_counts))


# ---------------------------------------------------------------------------
# Genus one fibered knot patterns.
#
# A two-bridge link whose double branched cover contains a genus one fibered
# knot is the plat closure of a 3-braid with fraction [a, 2, b]; the braid
# has exponent sum a + b - 1.  Rewriting (a, 2, b) for each sign regime of
# (a, b) yields the sequence shapes below with their exponent sums:
#
#     (r,2,s) r,s>=2 : r+s-1        (r)          : r-1, r+1, plus -3 if r=4
#     (r,3)          : r-2          (r,3,2^[s-1]): r-s-1
#     (2^[r-1])      : -r+1, -r-1   (4,2^[s-1])  : -s-2
#     (2^[r-1],4,2^[s-1]) : -r-s-1
#
# A sequence is matched both as given and reversed.
# ---------------------------------------------------------------------------


def _pattern_sums(e):
    s = set()
    n = len(e)
    if n == 0:
        s.add(-2)  # S^3 as (); the (1) form carries the other S^3 values
        return s
    if n == 1:
        r = e[0]
        if r == 0:
            s.update({-1, 1})
        elif r == 1:
            s.update({0, 2})
        elif r == 2:
            s.update({1, 3, -1, -3})  # both the (r) and the all-2s readings
        elif r >= 3:
            s.update({r - 1, r + 1})
            if r == 4:
                s.add(-3)
        return s
    if n == 3 and e[1] == 2 and e[0] >= 2 and e[2] >= 2:
        s.add(e[0] + e[2] - 1)
    if n == 2 and e[1] == 3 and e[0] >= 2:
        s.add(e[0] - 2)
    if n >= 3 and e[0] >= 2 and e[1] == 3 and all(c == 2 for c in e[2:]):
        s.add(e[0] - n)  # (r,3,2^[s-1]) with s = n-1
    if all(c == 2 for c in e):
        s.update({-n, -n - 2})
    if e[0] == 4 and all(c == 2 for c in e[1:]):
        s.add(-n - 2)
    if n >= 3:
        for i in range(1, n - 1):
            if e[i] == 4 and all(c == 2 for j, c in enumerate(e) if j != i):
                s.add(-n - 2)
    return s


def gofk_exponent_sums(seq):
    """Exponent sums of genus one fibered knots detected by sequence shape.

    Input must be a reduced sequence: all entries >= 2, or one of the
    terminal forms (), (0), (1).  Returns the set of realizable exponent
    sums; empty means the criterion finds no genus one fibered knot.
    """
    entries = seq.entries if isinstance(seq, NormSeq) else tuple(seq)
    if entries not in ((), (0,), (1,)) and any(e < 2 for e in entries):
        raise ValueError(f"{entries} is not reduced")
    return frozenset(_pattern_sums(entries) | _pattern_sums(tuple(reversed(entries))))


def norm_sequence_of(lens):
    """A norm sequence for L(p,q) (p >= 2): the all->=2 expansion of p/q.

    For q = 0 or p < 2 returns the terminal forms.
    """
    if not isinstance(lens, LensSpace):
        raise TypeError("expected a LensSpace")
    if lens.p == 0:
        return NormSeq((0,))
    if lens.p == 1:
        return NormSeq(())
    if lens.q == 0:
        raise ValueError("q = 0 only for S^3")
    return NormSeq(cf_expand_norm(ExtRational(lens.p, lens.q)))
