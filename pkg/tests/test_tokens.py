import random
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from unitag.seq import g, h, revcomp
from unitag.tokens import (
    COMPLEMENT_CLASS,
    TokenClass,
    class_size,
    classify,
    complement_token,
    enumerate_tokens,
    extract_tokens,
    is_token,
    lemma1_bounds,
    theorem1_tag_bound,
    token_suffix,
    window_suffixes,
)
from oracles import class_by_pattern, is_token_literal, minimal_suffix_tokens, token_universe, wt


def test_extract_examples():
    assert extract_tokens("ATACGA", 4) == [(4, "TAC"), (5, "CG"), (6, "CGA")]
    assert extract_tokens("AAA", 4) == []
    # occurrences, not distinct tokens
    assert extract_tokens("CCCC", 4) == [(2, "CC"), (3, "CC"), (4, "CC")]


@given(st.text(alphabet="ACGT", max_size=30), st.integers(2, 10))
def test_extract_matches_scan(s, c):
    got = extract_tokens(s, c)
    assert got == minimal_suffix_tokens(s, c)
    ends = [e for e, _ in got]
    assert ends == list(range(ends[0], len(s) + 1)) if ends else True
    assert all(is_token(t, c) for _, t in got)


@given(st.text(alphabet="ACGT", max_size=25), st.integers(2, 9))
def test_window_suffixes_complete(s, c):
    expected = sorted((j, s[i:j]) for j in range(1, len(s) + 1) for i in range(j)
                      if wt(s[i:j]) in (c, c + 1))
    assert sorted(window_suffixes(s, c)) == expected


@pytest.mark.parametrize("s, c, expected", [("CGA", 4, True), ("AAAC", 4, False), ("AT", 4, False)])
def test_is_token_examples(s, c, expected):
    assert is_token(s, c) is expected


def test_universe_c4():
    u = enumerate_tokens(4)
    assert len(u) == 76 == g(4) + 2 * g(3)
    assert all(is_token(t, 4) for t in u)


def test_universe_c2():
    u = enumerate_tokens(2)
    assert {"C", "G", "AA", "AT", "TA", "TT"} <= u
    assert u == token_universe(2)
    # weight-3 members all start with a strong base
    assert all(t[0] in "CG" for t in u if wt(t) == 3)


@pytest.mark.parametrize("c", range(2, 8))
def test_universe_matches_brute_force(c):
    assert enumerate_tokens(c) == token_universe(c)


def test_universe_cap():
    with pytest.raises(ValueError, match="too large"):
        enumerate_tokens(13)


@pytest.mark.parametrize("t, c, cls", [
    ("CG", 4, TokenClass.S_c4_S),
    ("CGA", 4, TokenClass.S_c4_SW),
    ("TAC", 4, TokenClass.W_c3_S),
])
def test_classify_examples(t, c, cls):
    assert classify(t, c) is cls


def test_classify_rejects_non_token():
    with pytest.raises(ValueError):
        classify("AAAC", 4)


@pytest.mark.parametrize("c", range(4, 8))
def test_class_partition(c):
    counts = Counter()
    for t in enumerate_tokens(c):
        cls = classify(t, c)
        assert cls.value == class_by_pattern(t, c)
        counts[cls] += 1
    for cls in TokenClass:
        assert counts[cls] == class_size(cls, c)
    assert sum(counts.values()) == g(c) + 2 * g(c - 1)


@pytest.mark.parametrize("c", range(4, 9))
def test_complement_suffix_rule(c):
    non_token = {TokenClass.S_c3_WW, TokenClass.S_c4_SW}
    for t in enumerate_tokens(c):
        cls = classify(t, c)
        suf = complement_token(t, c)
        assert classify(suf, c) is COMPLEMENT_CLASS[cls]
        assert is_token(revcomp(t), c) == (cls not in non_token)


@pytest.mark.parametrize("c", range(4, 9))
def test_self_complementary_tokens(c):
    sc = Counter(classify(t, c) for t in enumerate_tokens(c) if t == revcomp(t))
    if c % 2:
        assert sc == {TokenClass.S_c3_S: 2 * g((c - 3) // 2)}
    else:
        assert sc == {TokenClass.S_c4_S: 2 * g((c - 4) // 2),
                      TokenClass.W_c2_W: 2 * g((c - 2) // 2)}
        assert sum(sc.values()) == h(c)


def test_token_suffix():
    assert token_suffix("AAAAC", 4) == "AAC"
    assert token_suffix("AAA", 4) is None


def test_lemma1_values():
    assert lemma1_bounds(8) == (1726, 2300)
    assert lemma1_bounds(9)[0] == 4672
    assert lemma1_bounds(10)[0] == 12780
    assert 2300 // 21 == 109
    with pytest.raises(ValueError):
        lemma1_bounds(3)


def test_theorem1_examples():
    assert theorem1_tag_bound(8, l=20).tag_bound == 132
    assert theorem1_tag_bound(9, h=28).tag_bound == 312
    rep = theorem1_tag_bound(10, l=20, h=28)
    assert (rep.tag_bound_by_length, rep.tag_bound_by_weight, rep.tag_bound) == (1161, 896, 896)


def test_theorem1_errors():
    with pytest.raises(ValueError):
        theorem1_tag_bound(8)
    with pytest.raises(ValueError):
        theorem1_tag_bound(8, l=7)
    with pytest.raises(ValueError):
        theorem1_tag_bound(8, l=20, h=45)


@pytest.mark.parametrize("c", range(4, 8))
def test_lemma1_holds_for_greedy_sets(c):
    # token count / tail weight of any feasible set never exceed the bounds
    from unitag.tagset import TagSetConfig, greedy_generate
    tags = greedy_generate(TagSetConfig(c, length=c + 4))
    occ = [t for tag in tags for _, t in extract_tokens(tag, c)]
    tokens, tail = lemma1_bounds(c)
    assert len(occ) <= tokens
    assert sum(1 if t[-1] in "AT" else 2 for t in occ) <= tail
