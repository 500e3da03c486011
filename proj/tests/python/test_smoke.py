import pytest

import substdyn


def test_rules_round_trip():
    assert substdyn.rules("a -> ab\nb -> a") == [("a", "ab"), ("b", "a")]
    assert substdyn.normalize("a->ab\nb->a") == "a -> ab\nb -> a\n"
    assert substdyn.iterate("corpus:fibonacci", "0", 2) == "00100101"


def test_classify():
    r = substdyn.classify("corpus:wild_ab")
    assert r["verdict"] == "wild"
    assert r["witness"]["periodic_word"] == "b"
    assert substdyn.classify("corpus:chacon")["n_sigma"] == 2


def test_legality():
    assert "ab" not in substdyn.legal_words("a -> ab\nb -> b", 2)
    assert substdyn.legal_words("a -> ab\nb -> b", 2) == ["bb"]


def test_cohomology_and_lattice():
    assert substdyn.cohomology("corpus:fib_handle")["h1"]["rank"] == 3
    lattice = substdyn.cis("corpus:fib_handle")
    assert len(lattice["nodes"]) == 3
    c = substdyn.compare("corpus:fib_handle", "corpus:trib")
    assert c["witness"] == "node counts differ: 3 vs 2"


def test_primitivize():
    p = substdyn.primitivize("corpus:sigma_2")
    assert p["conjugacy"]["ok"]


def test_extend():
    out = substdyn.extend("corpus:fib_squared", "a -> aa", {"a": "0"}, {"a": [4, 5]})
    assert out.splitlines()[-1] == "a -> 001aa101"


def test_errors():
    with pytest.raises(substdyn.Error):
        substdyn.rules("a -> ab\nb -> bc")
    with pytest.raises(substdyn.Error):
        substdyn.cohomology("corpus:wild_ab")
    assert "fib_handle" in substdyn.corpus_names()
