import pytest

from oracles import brute_chromatic, brute_fingerprint, letters, preimages, restricted_growth
from palfp.constraints import build_restriction_graph, graph_from_edges
from palfp.errors import InconsistentText, InvalidFingerprint, OutOfRange
from palfp.extremal import chromatic_number_exact
from palfp.reconstruct import (
    Coloring,
    RoundTripMismatch,
    SelfLoop,
    coloring_to_string,
    exact_k_range,
    greedy_reconstruct,
    reconstruct_exact_k,
    sigma,
    string_to_coloring,
    validate,
)
from palfp.strings import Text, canonicalize, fingerprint_of, make_fingerprint, param_match, parse_text

RSG = fingerprint_of(parse_text("4 1 2 1 3 1 2 1 5 6 6 7 5 7", "int-tokens"))


def realizable(n):
    return sorted({tuple(sorted(brute_fingerprint(w))) for w in restricted_growth(n)})


def test_greedy_small_examples():
    out = greedy_reconstruct(make_fingerprint(5, [(2, 4)]))
    assert str(out) == "abcbd"
    assert param_match(out, parse_text("0 1 2 1 3", "int-tokens"))
    assert str(greedy_reconstruct(make_fingerprint(5))) == "abcab"
    s5 = greedy_reconstruct(make_fingerprint(9, [(2, 4), (2, 8), (6, 8)]))
    assert str(s5) == "abcbdbcbe" and s5.alphabet_size == 5


def test_greedy_rejects_invalid():
    with pytest.raises(InvalidFingerprint) as err:
        greedy_reconstruct(make_fingerprint(5, [(1, 4), (2, 4), (2, 5)]))
    assert err.value.report.reason.witness.positions == (1, 5)


def test_validate_examples():
    bad = validate(make_fingerprint(5, [(1, 4), (2, 4), (2, 5)]))
    assert not bad.valid and isinstance(bad.reason, SelfLoop)
    assert bad.reason.witness.positions == (1, 5)
    assert validate(make_fingerprint(5, [(2, 4)])).valid
    assert preimages(3, {(1, 2), (1, 3)}) == []
    assert not validate(make_fingerprint(3, [(1, 2), (1, 3)])).valid


def test_validate_duplicate_center_reports_self_loop():
    report = validate(make_fingerprint(5, [(1, 5), (2, 4)]))
    assert isinstance(report.reason, SelfLoop)
    assert report.reason.witness.positions == (1, 5)


def test_round_trip_mismatch_description():
    r = RoundTripMismatch(((1, 2),), ())
    assert "extra pairs [(1, 2)]" in r.describe()


@pytest.mark.parametrize("n", range(1, 8))
def test_greedy_is_lexicographically_least_preimage(n):
    by_fp = {}
    for w in restricted_growth(n):
        by_fp.setdefault(tuple(sorted(brute_fingerprint(w))), []).append(w)
    for pairs, words in by_fp.items():
        assert greedy_reconstruct(make_fingerprint(n, pairs)).symbols == min(words)


@pytest.mark.parametrize("n", range(1, 8))
def test_sigma_equals_brute_chromatic(n):
    for pairs in realizable(n):
        f = make_fingerprint(n, pairs)
        g = build_restriction_graph(f)
        assert sigma(f) == brute_chromatic(len(g.vertices), g.edges)


def test_sigma_examples():
    assert sigma(make_fingerprint(5)) == 3
    assert sigma(make_fingerprint(9, [(2, 4), (2, 8), (6, 8)])) == 5
    assert sigma(make_fingerprint(2, [(1, 2)])) == 1


def test_exact_k_rsg():
    eight = reconstruct_exact_k(RSG, 8)
    assert eight.alphabet_size == 8
    assert param_match(eight, parse_text("4 1 2 1 3 1 2 1 5 6 6 7 8 7", "int-tokens"))
    five = reconstruct_exact_k(RSG, 5)
    assert five.alphabet_size == 5 and fingerprint_of(five) == RSG
    with pytest.raises(OutOfRange) as err:
        reconstruct_exact_k(RSG, 4)
    assert (err.value.min, err.value.max) == (5, 8)
    assert exact_k_range(RSG) == (5, 8)


@pytest.mark.parametrize("n", range(1, 8))
def test_exact_k_exhaustive(n):
    for pairs in realizable(n):
        f = make_fingerprint(n, pairs)
        low, high = exact_k_range(f)
        for k in range(low, high + 1):
            t = reconstruct_exact_k(f, k)
            assert t.alphabet_size == k and fingerprint_of(t) == f
            assert canonicalize(t) == t
        for k in (low - 1, high + 1):
            if k >= 1:
                with pytest.raises(OutOfRange):
                    reconstruct_exact_k(f, k)


def test_string_to_coloring_examples():
    t = Text.of("abcbd")
    c = string_to_coloring(t, build_restriction_graph(fingerprint_of(t)))
    assert c.num_colors == 4 and len(c.graph.vertices) == 4
    c = string_to_coloring("aaa", build_restriction_graph(fingerprint_of("aaa")))
    assert c.colors == (0,)
    opt = parse_text("4 5 2 5 3 5 2 5 1 3 3 2 1 2", "int-tokens")
    c = string_to_coloring(opt, build_restriction_graph(RSG))
    assert c.num_colors == 5
    assert fingerprint_of(coloring_to_string(c)) == RSG


def test_string_to_coloring_inconsistent():
    g = build_restriction_graph(fingerprint_of("aba"))
    with pytest.raises(InconsistentText):
        string_to_coloring("abb", g)


def test_coloring_to_string_single_class():
    g = build_restriction_graph(make_fingerprint(2, [(1, 2)]))
    assert str(coloring_to_string(Coloring(g, (0,)))) == "aa"


def test_coloring_rejects_improper():
    g = graph_from_edges(2, [(0, 1)])
    with pytest.raises(ValueError):
        Coloring(g, (0, 0))


@pytest.mark.parametrize("n", range(0, 10))
def test_bijection_round_trip(n):
    for w in restricted_growth(n):
        t = Text(w)
        g = build_restriction_graph(fingerprint_of(t))
        back = coloring_to_string(string_to_coloring(t, g))
        assert param_match(back, t)


def test_greedy_matches_exact_oracle_on_rsg():
    g = build_restriction_graph(RSG)
    assert sigma(RSG) == chromatic_number_exact(g) == 5
    assert letters(greedy_reconstruct(RSG).symbols) == str(greedy_reconstruct(RSG))
