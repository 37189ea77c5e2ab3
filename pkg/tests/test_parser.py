"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Tests of Parser
"""

# Libraries
import pytest
from hypothesis import given, settings, strategies as st

from Algebra import DimScalar, M
from Kernel import Distribution, SignumDistribution
from Parser import (
    Operator, Delta, Pow, OpApply, Scale, Sum, Neg, TokenKind,
    tokenize, parse, evaluate, normalize, print_canonical
)
from Utilities.error_tools import CalcError, ParseError, ArityError, UnsupportedAction

# ========== Token 부분 ==========

def test_tokenize_offsets():
    tokens = tokenize("dr^2 delta")
    assert [token.text for token in tokens] == ["dr", "^", "2", "delta", ""]
    assert [token.offset for token in tokens] == [0, 2, 3, 5, 10]
    assert tokens[-1].kind is TokenKind.END

def test_tokenize_counts_bytes():
    with pytest.raises(ParseError) as error:
        tokenize("ω delta")
    assert error.value.offset == 0
    assert tokenize("delta  ")[-1].offset == 7

# ========== 구문 부분 ==========

def test_parse_operator_chain():
    assert parse("r (w dr) delta") == OpApply(Operator.R, OpApply(Operator.W, OpApply(Operator.DR, Delta())))

def test_parse_power_and_scale():
    assert parse("2 dr^3 delta") == Scale(DimScalar(2), OpApply(Pow(Operator.DR, 3), Delta()))

def test_parse_sum_and_negation():
    expression = parse("delta - (m+1)/2 * D delta")
    assert expression == Sum((Delta(), Neg(Scale((M + 1) / 2, OpApply(Operator.D, Delta())))))

def test_parse_zero():
    assert parse("0") == Scale(DimScalar(0), Delta())
    assert normalize("0").is_zero()

@pytest.mark.parametrize("text, offset", [
    ("delta +", 7),
    ("delta r", 6),
    ("G^2 delta", 1),
    ("r^0 delta", 2),
    ("1/0 delta", 2),
    ("(delta", 6),
])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as error:
        parse(text)
    assert error.value.offset == offset

@pytest.mark.parametrize("text", ["dr", "delta delta", "2 * r"])
def test_arity_errors(text):
    with pytest.raises(ArityError):
        parse(text)

def test_nesting_limit():
    with pytest.raises(ParseError):
        parse("(" * 70 + "delta" + ")" * 70)

def test_operator_chain_limit():
    with pytest.raises(ParseError) as error:
        normalize("D " * 3000 + "delta")
    assert error.value.offset == 2 * 256
    with pytest.raises(ParseError):
        parse("dr^64 " * 5 + "delta")
    assert normalize("D " * 200 + "delta") == Distribution.basis(200)

def test_long_chain_text_and_unsupported_message():
    expression = parse("w " * 250 + "delta")
    assert expression.text() == "w " * 250 + "delta"
    with pytest.raises(UnsupportedAction) as error:
        normalize("inv_r_dr " + "D " * 251 + "delta")
    assert error.value.message.endswith("in 'inv_r_dr " + "D " * 251 + "delta'")

@pytest.mark.parametrize("text", [
    "(((m+1)^64)^64) delta",
    "(m+1)^64 * (m+1) delta",
    "(m+1)^40 (m+1)^40 delta",
    "(2^64)^64 (2^64)^64 delta",
    "1/(m+1)^64 / (m+1) delta",
])
def test_scalar_size_limit(text):
    with pytest.raises(ParseError):
        parse(text)

def test_scalar_size_limit_allows_the_bound():
    assert parse("(m+1)^64 delta") == Scale((M + 1) ** 64, Delta())

@settings(max_examples=10_000, deadline=None)
@given(st.text(alphabet="rdwxDLEGBmelta_inv ()+-*/^0123456789", max_size=24))
def test_parser_fuzz_only_raises_parse_errors(text):
    try:
        parse(text)
    except ParseError:
        pass

@settings(max_examples=2_000, deadline=None)
@given(st.one_of(st.text(max_size=40), st.binary(max_size=40).map(lambda raw: raw.decode("utf-8", errors="replace"))))
def test_normalize_fuzz_only_raises_calc_errors(text):
    try:
        normalize(text)
    except CalcError:
        pass

# ========== 계산 부분 ==========

@pytest.mark.parametrize("text, rendered", [
    ("dr^2 delta", "-(m+1)/2 * D^2 delta"),
    ("r dr delta", "-m * delta"),
    ("L delta", "-D^2 delta"),
    ("x D delta", "m * delta"),
    ("r^2 dr^2 delta", "m*(m+1) * delta"),
    ("(w dr) delta", "D delta"),
])
def test_normalize_distributions(text, rendered):
    assert normalize(text).render() == rendered

def test_normalize_signum_results():
    result = normalize("inv_r delta")
    assert isinstance(result, SignumDistribution)
    assert result.render() == "(1/m) * s[1]"
    assert print_canonical(result) == "-(1/m) * dr delta"
    assert print_canonical(normalize("w delta")) == "w delta"

def test_powers_agree_with_repeated_operators():
    assert normalize("r^3 D^3 delta") == normalize("r r r D D D delta")
    assert normalize("dr^3 delta") == normalize("dr dr dr delta")
    assert normalize("w^3 delta") == normalize("w w w delta")
    assert normalize("inv_r^3 delta") == evaluate(parse("inv_r^3 delta"))

def test_fixed_dimension():
    assert normalize("dr^2 delta", m0=3) == Distribution.basis(2, -2)

def test_unsupported_action_names_the_subexpression():
    with pytest.raises(UnsupportedAction) as error:
        normalize("inv_r_dr D delta")
    assert "inv_r_dr D delta" in error.value.message

def test_unsupported_actions():
    with pytest.raises(UnsupportedAction):
        normalize("inv_r w delta")
    with pytest.raises(UnsupportedAction):
        normalize("inv_r^2 delta")
    with pytest.raises(UnsupportedAction):
        normalize("x w delta")

# ========== 왕복 부분 ==========

DIST_STEPS = ["D", "L", "E", "x", "inv_x", "dr^2", "w dr", "r dr", "r^2", "w r", "2", "(m+1)"]

@settings(max_examples=200, deadline=None)
@given(st.lists(st.sampled_from(DIST_STEPS), max_size=5), st.lists(st.sampled_from(DIST_STEPS), max_size=5))
def test_canonical_output_parses_back(left, right):
    text = " ".join(left + ["delta"]) + " + " + " ".join(right + ["delta"])
    value = normalize(text)
    assert normalize(print_canonical(value)) == value

@pytest.mark.parametrize("text", ["dr delta", "w delta", "inv_r D delta", "dr^3 delta", "w dr^2 delta + dr delta"])
def test_signum_alias_parses_back(text):
    value = normalize(text)
    assert normalize(print_canonical(value)) == value
