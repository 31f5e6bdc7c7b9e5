"""Dynamic strings: family semantics, both LCP structures, and the
rank/select set, all against stored-array mirrors."""
import random

import pytest

from modsum import (
    CompressedBitLcp,
    InvalidParameterError,
    PlainBitLcp,
    RankSelectSet,
    StringFamily,
)


def naive_lcp(bits, i, j):
    n = len(bits)
    d = 0
    while i + d < n and j + d < n and bits[i + d] == bits[j + d]:
        d += 1
    return d


# --- family ops -------------------------------------------------------

def test_add_string_singletons():
    fam = StringFamily()
    h1 = fam.add_string(1)
    assert h1.length == 1
    h5 = fam.add_string((0, 5))
    assert h5.length == 1
    assert fam.symbols(h5) == [(0, 5)]


def test_content_equality_of_separate_adds():
    fam = StringFamily()
    assert fam.equal(fam.add_string(1), fam.add_string(1))
    assert not fam.equal(fam.add_string((0, 2)), fam.add_string((0, 3)))


def test_concat_identity_and_length():
    fam = StringFamily()
    one = fam.add_string(1)
    run = fam.add_string((0, 3))
    both = fam.concatenate(one, run)
    assert both.length == 2
    assert fam.symbols(both) == [1, (0, 3)]
    assert fam.equal(fam.concatenate(both, fam.empty()), both)
    assert fam.equal(fam.concatenate(fam.empty(), both), both)


def test_worked_compressed_string_by_concats():
    # 1 (0,3) 1 (0,0) 1 (0,2), built one symbol at a time
    fam = StringFamily()
    parts = [1, (0, 3), 1, (0, 0), 1, (0, 2)]
    s = fam.empty()
    for c in parts:
        s = fam.concatenate(s, fam.add_string(c))
    assert s.length == 6
    assert fam.symbols(s) == parts


def test_split_examples():
    fam = StringFamily()
    s = fam.empty()
    for c in [1, (0, 3), 1]:
        s = fam.concatenate(s, fam.add_string(c))
    a, b = fam.split(s, 1)
    assert fam.symbols(a) == [1]
    assert fam.symbols(b) == [(0, 3), 1]
    a, b = fam.split(s, 0)
    assert a.length == 0
    assert fam.equal(b, s)
    a, b = fam.split(s, 3)
    assert fam.equal(a, s)
    assert b.length == 0


def test_split_concat_roundtrip():
    rng = random.Random(40)
    fam = StringFamily()
    for _ in range(60):
        syms = [rng.choice([1, 0, (0, rng.randrange(5))])
                for _ in range(rng.randrange(1, 12))]
        s = fam.empty()
        for c in syms:
            s = fam.concatenate(s, fam.add_string(c))
        i = rng.randrange(0, len(syms) + 1)
        a, b = fam.split(s, i)
        assert fam.equal(fam.concatenate(a, b), s)
        assert fam.symbols(a) == syms[:i]
        assert fam.symbols(b) == syms[i:]


def test_equal_matches_materialized_comparison():
    rng = random.Random(41)
    fam = StringFamily()
    built = []
    for _ in range(80):
        syms = tuple(rng.choice([1, 0, (0, rng.randrange(3))])
                     for _ in range(rng.randrange(0, 8)))
        s = fam.empty()
        for c in syms:
            s = fam.concatenate(s, fam.add_string(c))
        built.append((syms, s))
    for syms1, h1 in built:
        for syms2, h2 in built:
            assert fam.equal(h1, h2) == (syms1 == syms2)


def test_handles_immutable_across_operations():
    fam = StringFamily()
    s = fam.empty()
    for c in [1, (0, 2), 1]:
        s = fam.concatenate(s, fam.add_string(c))
    snapshot = fam.symbols(s)
    # churn the family hard; the old handle must not move
    rng = random.Random(42)
    for _ in range(200):
        t = fam.empty()
        for c in [rng.choice([1, 0, (0, rng.randrange(4))])
                  for _ in range(rng.randrange(1, 10))]:
            t = fam.concatenate(t, fam.add_string(c))
        fam.split(t, rng.randrange(0, t.length + 1))
    assert fam.symbols(s) == snapshot


def test_build_order_does_not_matter():
    # same content through different op sequences -> same id
    fam = StringFamily()
    syms = [1, (0, 1), 0, 1, (0, 0), 1]
    left = fam.empty()
    for c in syms:
        left = fam.concatenate(left, fam.add_string(c))
    right = fam.empty()
    for c in reversed(syms):
        right = fam.concatenate(fam.add_string(c), right)
    assert fam.equal(left, right)


def test_foreign_handle_rejected():
    fam1 = StringFamily()
    fam2 = StringFamily()
    h = fam1.add_string(1)
    with pytest.raises(InvalidParameterError):
        fam2.symbols(h)
    with pytest.raises(InvalidParameterError):
        fam2.concatenate(h, h)


def test_bad_symbols_rejected():
    fam = StringFamily()
    for bad in (2, -1, (1, 3), (0, -2), "x"):
        with pytest.raises(InvalidParameterError):
            fam.add_string(bad)


def test_split_out_of_range():
    fam = StringFamily()
    s = fam.add_string(1)
    with pytest.raises(InvalidParameterError):
        fam.split(s, 2)
    with pytest.raises(InvalidParameterError):
        fam.split(s, -1)


# --- LCP structures ---------------------------------------------------

def test_fresh_all_zero_lcp():
    for cls in (PlainBitLcp, CompressedBitLcp):
        st = cls(8)
        assert st.lcp(2, 5) == 3  # 8 - max(2, 5)
        assert st.lcp(0, 0) == 8
        assert st.lcp(8, 3) == 0


def test_single_add_golden():
    for cls in (PlainBitLcp, CompressedBitLcp):
        st = cls(8)
        st.add(3)
        assert st.to_list() == [0, 0, 0, 1, 0, 0, 0, 0]
        assert st.lcp(0, 1) == 2


def test_worked_conversion_10001100():
    st = CompressedBitLcp(8)
    for i in (0, 4, 5):
        st.add(i)
    assert st.symbols() == [1, (0, 3), 1, (0, 0), 1, (0, 2)]
    assert st.to_list() == [1, 0, 0, 0, 1, 1, 0, 0]


def test_run_alternation_invariant():
    rng = random.Random(43)
    for trial in range(60):
        m = rng.randrange(1, 60)
        st = CompressedBitLcp(m)
        for _ in range(rng.randrange(0, m + 1)):
            st.add(rng.randrange(m))
            syms = st.symbols()
            ones = [k for k, s in enumerate(syms) if s == 1]
            # a run sits between consecutive ones, before the first one
            # iff z starts 0, after the last iff z ends 0
            for k1, k2 in zip(ones, ones[1:]):
                assert k2 - k1 == 2
                assert isinstance(syms[k1 + 1], tuple)
            bits = st.to_list()
            if ones:
                assert (syms[0] == 1) == (bits[0] == 1)
                assert (syms[-1] == 1) == (bits[-1] == 1)


def test_add_idempotent():
    for cls in (PlainBitLcp, CompressedBitLcp):
        st = cls(10)
        st.add(4)
        before = st.to_list()
        st.add(4)
        assert st.to_list() == before


def test_lcp_differential_small():
    rng = random.Random(44)
    for trial in range(150):
        m = rng.randrange(1, 200)
        comp = CompressedBitLcp(m)
        plain = PlainBitLcp(m)
        bits = [0] * m
        for _ in range(40):
            if rng.random() < 0.5:
                i = rng.randrange(m)
                comp.add(i)
                plain.add(i)
                bits[i] = 1
            else:
                i = rng.randrange(m + 1)
                j = rng.randrange(m + 1)
                want = naive_lcp(bits, i, j)
                assert comp.lcp(i, j) == want, (m, i, j, bits)
                assert plain.lcp(i, j) == want, (m, i, j, bits)
        assert comp.to_list() == bits
        assert plain.to_list() == bits


def test_lcp_trichotomy():
    rng = random.Random(45)
    for _ in range(80):
        m = rng.randrange(2, 80)
        st = CompressedBitLcp(m)
        bits = [0] * m
        for _ in range(rng.randrange(0, m)):
            i = rng.randrange(m)
            st.add(i)
            bits[i] = 1
        i, j = rng.randrange(m), rng.randrange(m)
        ell = st.lcp(i, j)
        for t in range(ell):
            assert bits[i + t] == bits[j + t]
        assert i + ell >= m or j + ell >= m or bits[i + ell] != bits[j + ell]


def test_lcp_structures_share_family():
    fam = StringFamily()
    a = CompressedBitLcp(12, family=fam)
    b = CompressedBitLcp(12, family=fam)
    a.add(3)
    b.add(3)
    assert a._root == b._root  # identical content collapses to one id


def test_lcp_bounds_checked():
    st = CompressedBitLcp(8)
    with pytest.raises(InvalidParameterError):
        st.add(8)
    with pytest.raises(InvalidParameterError):
        st.add(-1)
    with pytest.raises(InvalidParameterError):
        st.lcp(0, 9)
    with pytest.raises(InvalidParameterError):
        CompressedBitLcp(0)


# --- rank/select set --------------------------------------------------

def test_rank_select_against_sorted_list():
    rng = random.Random(46)
    rs = RankSelectSet()
    mirror = []
    for _ in range(600):
        v = rng.randrange(0, 300)
        if v not in mirror:
            mirror.append(v)
            mirror.sort()
        rs.insert(v)
        assert len(rs) == len(mirror)
        probe = rng.randrange(0, 301)
        assert rs.rank(probe) == sum(1 for u in mirror if u < probe)
        assert (probe in rs) == (probe in mirror)
        k = rng.randrange(0, len(mirror))
        assert rs.select(k) == mirror[k]


def test_select_range_errors():
    rs = RankSelectSet()
    with pytest.raises(IndexError):
        rs.select(0)
    rs.insert(5)
    with pytest.raises(IndexError):
        rs.select(1)
    with pytest.raises(IndexError):
        rs.select(-1)


def test_duplicate_insert_ignored():
    rs = RankSelectSet()
    rs.insert(7)
    rs.insert(7)
    assert len(rs) == 1
    assert rs.select(0) == 7
