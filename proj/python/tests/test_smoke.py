import itertools
import random

import pytest

import pyseeds


def brute_is_seed(v, w):
    m, n = len(v), len(w)
    if m == 0 or m > n or v not in w:
        return False
    covered = [False] * n
    for p in range(1 - m, n):
        if all(w[p + k] == v[k] for k in range(m) if 0 <= p + k < n):
            for q in range(max(0, p), min(n, p + m)):
                covered[q] = True
    return all(covered)


def brute_seeds(w):
    subs = {w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)}
    return {v for v in subs if brute_is_seed(v, w)}


def as_words(w, pairs):
    return {w[p - 1 : p - 1 + n] for p, n in pairs}


def test_example_shortest():
    w = "aaabaabaabaaabaaba"
    pos, n = pyseeds.shortest_seed(w)
    assert n == 4
    assert w[pos - 1 : pos - 1 + n] == "aaba"
    assert as_words(w, pyseeds.Analysis(w).all_shortest()) == {"aaba", "abaa"}


@pytest.mark.parametrize("length", range(1, 10))
def test_all_seeds_match_brute_force(length):
    for letters in itertools.product("ab", repeat=length):
        w = "".join(letters)
        got = pyseeds.all_seeds(w)
        assert len(got) == len(set(got))
        assert as_words(w, got) == brute_seeds(w), w


def test_analysis_handle():
    rng = random.Random(7)
    w = "".join(rng.choice("abc") for _ in range(300))
    a = pyseeds.Analysis(w)
    assert a.n == 300
    assert a.seed_count == sum(r.hi - r.lo + 1 for r in a.seed_ranges())
    assert len(a.seeds(limit=3)) == min(3, a.seed_count)
    pos, n = a.shortest_seed()
    assert brute_is_seed(w[pos - 1 : pos - 1 + n], w)
    for row in a.quasigaps():
        assert row["quasigap"] is None or 1 <= row["quasigap"] <= row["len"]


def test_tokens_and_bytes():
    assert pyseeds.shortest_seed([5, 900, 5, 900, 5]) == (1, 2)
    assert pyseeds.shortest_seed(b"abab") == (1, 2)


def test_factorize_and_predicates():
    assert pyseeds.factorize("abaababa") == [(1, 1), (2, 1), (3, 1), (4, 3), (7, 2)]
    assert pyseeds.is_cover("aba", "ababa")
    assert pyseeds.is_seed("ab", "bab")
    assert not pyseeds.is_seed("aa", "ab")
    assert pyseeds.is_quasiseed("aba", "cabab")


def test_bad_input():
    with pytest.raises(ValueError):
        pyseeds.all_seeds("")
    with pytest.raises((ValueError, TypeError)):
        pyseeds.all_seeds([-1, 2])
