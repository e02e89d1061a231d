import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from surgeryforge.lens import LensSpace, S3, S1XS2, homeo_oriented
from surgeryforge.normseq import (NormSeq, Pow2, applicable_rewrites,
                                  apply_rewrite, eval_items, format_items,
                                  gofk_exponent_sums, norm_sequence_of,
                                  parse_seq, reduce_seq, riemenschneider_dual,
                                  to_lens)
from surgeryforge.rationals import cf_eval


def test_parse_and_format():
    items = parse_seq("(3, 2^[4], 5)")
    assert items == (3, Pow2(4), 5)
    assert format_items(items) == "(3,2^[4],5)"
    assert parse_seq("()") == ()


def test_eval_items_blocks_match_literal_expansion():
    for t in range(0, 4):
        for a in range(-2, 6):
            for b in range(-2, 6):
                with_block = eval_items((a, Pow2(t), b))
                literal = cf_eval([a] + [2] * t + [b])
                assert with_block == literal


def test_reduce_examples():
    assert reduce_seq((4, Pow2(0), 3)).entries == (4, 3)
    assert reduce_seq((3, Pow2(-1), 4)).entries == (5,)
    assert reduce_seq((1,)).entries == (1,)  # terminal: names S^3
    assert reduce_seq((0,)).entries == (0,)  # terminal: names S^1 x S^2
    assert to_lens(reduce_seq((1,))) == S3
    assert to_lens(reduce_seq((0,))) == S1XS2
    assert reduce_seq((5, 3, Pow2(-1))).entries == (5,)
    assert reduce_seq((4, 3, 2)).entries == (4, 3, 2)  # already reduced


def test_reduce_kind():
    assert reduce_seq((4, 3, 2)).kind == "norm"
    assert NormSeq(()).kind == "weak"
    assert NormSeq((0, 2)).kind == "weak"
    assert NormSeq((-1, 3)).kind == "raw"


def test_reduce_rejects_adjacent_blocks():
    with pytest.raises(ValueError):
        reduce_seq((Pow2(-1), Pow2(-1)))


def _random_raw_items(rng):
    n = rng.randint(1, 6)
    items = []
    for i in range(n):
        if items and not isinstance(items[-1], Pow2) and rng.random() < 0.25:
            items.append(Pow2(rng.randint(-1, 3)))
        else:
            items.append(rng.randint(-1, 7))
    return tuple(items)


def _reduce_random_order(items, rng):
    items = list(items)
    while True:
        rules = applicable_rewrites(items)
        if not rules:
            return tuple(items)
        items = apply_rewrite(items, rng.choice(rules))


def _up_to_reversal(entries):
    return min(tuple(entries), tuple(reversed(entries)))


def test_reduce_confluent_and_lens_preserving():
    rng = random.Random(20240817)
    for _ in range(400):
        items = _random_raw_items(rng)
        canonical = reduce_seq(items)
        # the reduction preserves the oriented lens space
        assert homeo_oriented(to_lens(items), to_lens(canonical)), items
        # any rewrite order reaches the same form up to reversal
        want = _up_to_reversal(canonical.entries)
        for _ in range(8):
            got = _reduce_random_order(items, rng)
            assert _up_to_reversal(got) == want, (items, got, canonical)


def test_to_lens_examples():
    assert to_lens((4, 3, 2)) == LensSpace(18, 5)
    assert homeo_oriented(to_lens((4, 3, 2)), LensSpace(18, 11))
    assert to_lens((2, 2, 3, 5)) == LensSpace(32, 23)
    assert homeo_oriented(to_lens((2, 2, 3, 5)), LensSpace(32, 7))
    assert to_lens(()) == S3
    assert to_lens((0,)) == S1XS2
    assert to_lens((1,)) == S3


def test_norm_sequence_of_round_trip():
    for p, q in ((18, 5), (32, 7), (7, 3), (50, 41), (68, 59)):
        lens = LensSpace(p, q)
        seq = norm_sequence_of(lens)
        assert seq.kind == "norm"
        assert to_lens(seq) == lens


# --- Riemenschneider dual -------------------------------------------------


def _frac(x):
    return Fraction(x.num, x.den)


def test_dual_examples():
    assert riemenschneider_dual((2,)).entries == (2,)
    assert riemenschneider_dual((3,)).entries == (2, 2)
    for b in range(2, 9):
        assert riemenschneider_dual((2,) * (b - 1)).entries == (b,)


def test_dual_involution_identity_and_point_rule():
    checked = 0
    for length in range(1, 7):
        for seq in product(range(2, 7), repeat=length):
            dual = riemenschneider_dual(seq).entries
            # exact defining identity
            total = 1 / _frac(cf_eval(seq)) + 1 / _frac(cf_eval(dual))
            assert total == 1, (seq, dual)
            # involution
            assert riemenschneider_dual(dual).entries == seq
            # exactly one of the two final entries is 2, except at the
            # self-dual fixed point (2) <-> (2)
            if seq != (2,):
                assert (seq[-1] == 2) != (dual[-1] == 2), (seq, dual)
            checked += 1
    assert checked == sum(5 ** n for n in range(1, 7))


def test_dual_rejects_bad_input():
    with pytest.raises(ValueError):
        riemenschneider_dual(())
    with pytest.raises(ValueError):
        riemenschneider_dual((3, 1))


# --- exponent sums ---------------------------------------------------------
#
# Independent oracle: map each pair (a, b) to its reduced sequence via the
# tabulated case chart, then collect a + b - 1 over all pairs whose chart
# sequence matches the target up to reversal.


def _chart_sequence(a, b):
    if a >= 2 and b >= 2:
        return (a, 2, b)
    if a < b:
        a, b = b, a  # reversal of the 3-braid word swaps the exponents
    c = -b
    if a >= 2:
        if b == 1:
            return (a - 1,)
        if b == 0:
            return (a,)
        if b == -1:
            return (a, 3)
        return (a, 3) + (2,) * (c - 1)
    if a == 1:
        if b == 1:
            return (0,)
        if b == 0:
            return (1,)
        if b == -1:
            return (2,)
        return (2,) * c
    if a == 0:
        if b == 0:
            return (0,)
        if b == -1:
            return ()
        return (2,) * (c - 1)
    if a == -1:
        if b == -1:
            return (4,)
        return (4,) + (2,) * (c - 1)
    d = -a
    return (2,) * (d - 1) + (4,) + (2,) * (c - 1)


def _oracle_sums(target, span=14):
    target = tuple(target)
    flips = {target, tuple(reversed(target))}
    out = set()
    for a in range(-span, span + 1):
        for b in range(-span, span + 1):
            if _chart_sequence(a, b) in flips:
                out.add(a + b - 1)
    return frozenset(out)


def test_exponent_sums_examples():
    assert gofk_exponent_sums((4, 3, 2, 2, 2)) == frozenset({-1})
    assert gofk_exponent_sums((5, 2, 2)) == frozenset({6})
    for r in range(2, 9):
        expected = {r - 1, r + 1}
        if r == 4:
            expected.add(-3)
        if r == 2:
            expected |= {-1, -3}
        assert gofk_exponent_sums((r,)) == frozenset(expected)


def test_exponent_sums_match_chart_oracle():
    targets = []
    for r in range(2, 9):
        for s in range(2, 9):
            targets.append((r, 2, s))
            targets.append((r, 3) + (2,) * (s - 1))
            targets.append((2,) * (r - 1) + (4,) + (2,) * (s - 1))
        targets.append((r,))
        targets.append((r, 3))
        targets.append((2,) * (r - 1))
        targets.append((4,) + (2,) * (r - 1))
    targets.extend([(), (0,), (1,)])
    for t in targets:
        assert gofk_exponent_sums(t) == _oracle_sums(t), t


@given(st.lists(st.integers(2, 6), min_size=1, max_size=5))
@settings(max_examples=150, deadline=None)
def test_exponent_sums_match_oracle_random(seq):
    assert gofk_exponent_sums(tuple(seq)) == _oracle_sums(tuple(seq))


def test_exponent_sums_requires_reduced():
    with pytest.raises(ValueError):
        gofk_exponent_sums((3, 1, 2))
