import pytest

from oracles import restricted_growth
from palfp.errors import InvalidFingerprint, NotCrossing
from palfp.extremal import optimal_string
from palfp.reconstruct import sigma
from palfp.strings import Text, fingerprint_of, make_fingerprint, parse_text
from palfp.structure import (
    check_decomposition_bound,
    crossing_pairs,
    decomposition_excess,
    dominated,
    island_sigma,
    islands,
    representatives,
)

SR = fingerprint_of("eaabbaadeed")
CROSS = fingerprint_of(parse_text("1 2 1 3 4 3 1 2 1 1", "int-tokens"))


def spans(f):
    return [(isl.start, isl.end) for isl in islands(f)]


def test_islands_examples():
    assert spans(SR) == [(1, 1), (2, 7), (8, 11)]
    assert spans(make_fingerprint(3)) == [(1, 1), (2, 2), (3, 3)]
    assert spans(CROSS) == [(1, 10)]


def test_islands_reject_invalid():
    with pytest.raises(InvalidFingerprint):
        islands(make_fingerprint(5, [(1, 4), (2, 4), (2, 5)]))


@pytest.mark.parametrize("n", range(1, 9))
def test_islands_partition_positions(n):
    for w in restricted_growth(n):
        f = fingerprint_of(Text(w))
        isl = islands(f)
        covered = [p for i in isl for p in range(i.start, i.end + 1)]
        assert covered == list(range(1, n + 1))
        members = [m for i in isl for m in i.members]
        assert sorted(members) == list(f.pairs)
        for i in isl:
            assert all(i.start <= m.start and m.end <= i.end for m in i.members)
            if i.trivial:
                assert i.start == i.end


def test_crossing_pairs():
    got = crossing_pairs(CROSS)
    # (1,9)x(9,10) is the commonly cited crossing; (7,9)x(9,10)
    # satisfies the same start1 < start2 <= end1 < end2 condition.
    assert ((1, 9), (9, 10)) in got
    assert sorted(got) == [((1, 9), (9, 10)), ((7, 9), (9, 10))]
    assert ((1, 3), (1, 9)) not in got
    assert crossing_pairs(make_fingerprint(6)) == []


def test_dominated():
    assert dominated((1, 9), (9, 10)) is False
    assert dominated((1, 9), (7, 11)) is True
    assert dominated((1, 4), (3, 6)) is False
    with pytest.raises(NotCrossing):
        dominated((1, 3), (1, 9))


def test_representatives():
    reps = representatives(CROSS)
    assert reps[1] == (1, 9)
    assert reps[10] == (9, 10)
    assert reps[9] == (1, 9)
    assert set(reps) == set(range(1, 11))


@pytest.mark.parametrize("n", range(1, 8))
def test_representatives_are_outer_pairs(n):
    for w in restricted_growth(n):
        f = fingerprint_of(Text(w))
        reps = representatives(f)
        covered = {p for i, j in f for p in range(i, j + 1)}
        assert set(reps) == covered
        for pos, rep in reps.items():
            assert rep.covers(pos)
            assert not any(q != rep and q.contains(rep) for q in f)


def test_island_sigma_examples():
    isl = islands(SR)
    assert [island_sigma(SR, i) for i in isl] == [1, 2, 2]
    core = fingerprint_of(optimal_string(5))
    assert [island_sigma(core, i) for i in islands(core)] == [1, 3, 1]


def test_decomposition_bound_examples():
    assert check_decomposition_bound(make_fingerprint(5))
    assert sigma(make_fingerprint(5)) == 3
    assert check_decomposition_bound(fingerprint_of(optimal_string(5)))
    assert check_decomposition_bound(SR) and sigma(SR) <= 4


@pytest.mark.parametrize("n", range(1, 8))
def test_decomposition_bound_exhaustive(n):
    for w in restricted_growth(n):
        assert check_decomposition_bound(fingerprint_of(Text(w)))


def _heaviest_is_plain_palindrome(f):
    isl = islands(f)
    weights = [island_sigma(f, i) for i in isl]
    top = max(weights)
    for i, wt in zip(isl, weights):
        is_pal = i.trivial or (i.start, i.end) in f
        if wt == top and is_pal and not crossing_pairs(
            make_fingerprint(f.n, i.members)
        ):
            return True
    return False


def test_plus_one_case_is_reported(capsys):
    violations = []
    for n in range(1, 9):
        for w in restricted_growth(n):
            f = fingerprint_of(Text(w))
            if not _heaviest_is_plain_palindrome(f) and decomposition_excess(f) > 1:
                violations.append(f)
    with capsys.disabled():
        print(f"\n[island +1 case] fingerprints exceeding max island sigma + 1: {len(violations)}")
