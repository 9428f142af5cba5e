import pytest

import popswitch


def test_quantum_numbers():
    assert popswitch.quantum_int(3) == "q^2 + 1 + q^-2"
    assert popswitch.quantum_binom(4, 2) == "q^4 + q^2 + 2 + q^-2 + q^-4"
    assert popswitch.quantum_int_at(3, "2") == "21/4"
    assert all(popswitch.verify_lemma_q(k, l) for k in range(1, 6) for l in range(1, 6))
    assert popswitch.verify_cor_q(3, 4)


def test_catalan():
    assert [popswitch.basis_size(n, n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]
    assert popswitch.catalan(8) == 1430


def test_jones_wenzl():
    assert popswitch.jones_wenzl(2) == (
        "(-q)/(q^2 + 1) * TL(2,2){(b0,b1),(t0,t1)} + 1 * TL(2,2){(b0,t0),(b1,t1)}"
    )
    assert all(popswitch.jw_properties(4).values())
    assert popswitch.jw_trace(2) == popswitch.quantum_int(3)
    with pytest.raises(ValueError):
        popswitch.jones_wenzl(0)


def test_suite():
    assert "karoubi" in popswitch.suite_names()
    report = popswitch.run_suite("tl", 4)
    assert report["passed"]
    assert report["text"].endswith("\n")
    with pytest.raises(ValueError):
        popswitch.run_suite("bogus")


def test_decompose():
    d = popswitch.decompose(2)
    assert d["found"] and d["verified"]
    assert d["signatures"] == ["^^", "^v", "vv"]
    assert d["certificate"].endswith("VERIFIED n=2 summands=3\n")
    bare = popswitch.decompose(2, relations="loop-values")
    assert not bare["found"]
    assert bare["reason"].startswith("dimension")
    with pytest.raises(ValueError):
        popswitch.decompose(9)
