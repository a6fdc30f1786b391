import random
from fractions import Fraction

import jsonschema
import pytest
from hypothesis import given, strategies as st

from altsylvester.canon import TCHECK_SCHEMA, check_T, compare, refixpoint
from altsylvester.cseq import constant, explicit, geometric, parse
from altsylvester.expansion import Expansion, expand_rational, parse_literal
from altsylvester.rational import Ordering, cmp

C1 = constant(1)
P2 = geometric(2)
fractions = st.fractions(max_denominator=10 ** 5).filter(lambda x: abs(x) < 10 ** 5)
cseqs = st.sampled_from(["const:1", "const:3", "pow:2", "pow:3"]).map(parse)


@pytest.mark.parametrize("lit, code, index", [
    ("0;1", "C3", 1),
    ("0;1,2", "C6", 1),
    ("0;2,5", "U", 1),
    ("0;2,6", "C6", 1),
])
def test_check_T_rejects(lit, code, index):
    r = check_T(parse_literal(lit, C1))
    assert (r.valid, r.violated, r.index) == (False, code, index)
    jsonschema.validate(r.to_json(), TCHECK_SCHEMA)


def test_check_T_accepts():
    assert check_T(parse_literal("0;1,3,21", C1)).valid
    assert check_T(parse_literal("0;2,6,42;...", C1)).valid
    assert check_T(parse_literal("0;2,14", P2)).valid
    assert str(check_T(parse_literal("0;2", C1))) == "valid (checked 1 terms)"


def test_check_T_digit_below_multiplier():
    r = check_T(parse_literal("0;3", constant(5)))
    assert (r.violated, r.index) == ("C2", 1)


def test_check_T_chain():
    cs = explicit([2, 3, 9])
    e = Expansion(0, [2, 12, 200], cs)
    r = check_T(e)
    assert (r.valid, r.violated, r.index) == (False, "chain", 2)


def test_refixpoint():
    assert refixpoint(parse_literal("0;1,3,21", C1))
    assert not refixpoint(parse_literal("0;1,2", C1))
    assert not refixpoint(parse_literal("0;1", C1))
    with pytest.raises(ValueError):
        refixpoint(parse_literal("0;2;...", C1))


@given(fractions, cseqs)
def test_expansions_are_canonical(alpha, cs):
    e = expand_rational(alpha, cs)
    assert check_T(e).valid
    assert refixpoint(e)


def test_compare_examples():
    assert compare(parse_literal("0;1,3,21", C1), parse_literal("0;2", C1)) is Ordering.GREATER
    assert compare(parse_literal("0;2", C1), parse_literal("0;2,7", C1)) is Ordering.GREATER
    assert compare(parse_literal("0;2,7", C1), parse_literal("0;2,7", C1)) is Ordering.EQUAL
    assert compare(parse_literal("-1;2", C1), parse_literal("0;3", C1)) is Ordering.LESS
    assert compare(parse_literal("0;2,7;...", C1), parse_literal("0;2,7;...", C1)) is Ordering.UNDECIDED


@given(fractions, fractions, cseqs)
def test_compare_agrees_with_value_order(x, y, cs):
    assert compare(expand_rational(x, cs), expand_rational(y, cs)) is cmp(x, y)


def test_trichotomy_and_transitivity():
    rng = random.Random(7)
    pool = [Fraction(rng.randint(-50, 50), rng.randint(1, 30)) for _ in range(40)]
    exps = {v: expand_rational(v, P2) for v in pool}
    for x in pool:
        for y in pool:
            o = compare(exps[x], exps[y])
            assert o is compare(exps[y], exps[x]).flip()
            assert (o is Ordering.EQUAL) == (x == y)


def test_compare_needs_same_rule():
    with pytest.raises(ValueError):
        compare(parse_literal("0;2", C1), parse_literal("0;2", P2))
