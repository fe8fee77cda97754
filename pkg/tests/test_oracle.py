import pytest

from supertropical.charpoly import Poly, char_poly
from supertropical.checks import SUITES, random_matrix, run_suite
from supertropical.element import BOTTOM, ONE
from supertropical.matrix import Matrix, ShapeError, det_value
from supertropical.oracle import OracleCapError, brute_charpoly, brute_det, scan_roots

from conftest import E, M


def test_brute_det_examples():
    assert brute_det(M("0 0;1 2")) == E(2)
    assert brute_det(M("1 2;3 4")) == E("5g")
    assert brute_det(M("7g")) == E("7g")


def test_brute_det_cap():
    with pytest.raises(OracleCapError):
        brute_det(Matrix.zeros(9))
    with pytest.raises(ShapeError):
        brute_det(M("1 2"))


def test_brute_charpoly_examples():
    assert brute_charpoly(M("4 0;0 1")) == Poly([E(5), E(4), ONE])
    assert brute_charpoly(Matrix.zeros(3)) == Poly([BOTTOM] * 3 + [ONE])
    assert brute_charpoly(M("-inf 14 8;0 -inf -inf;0 1 -inf")) == Poly([E(9), E(14), BOTTOM, ONE])
    with pytest.raises(OracleCapError):
        brute_charpoly(Matrix.zeros(7))


def test_scan_roots():
    f = Poly([E(9), E(14), BOTTOM, ONE])
    found = scan_roots(f, -10, 10, 1)
    assert E(7) in found and E(-5) in found
    assert scan_roots(Poly([E(3), ONE]), -10, 10, E("1/2")) == [E(3)]
    ghostly = scan_roots(Poly([BOTTOM, E("0g"), ONE]), -3, 3, 1)
    assert ghostly == [E(v) for v in (-3, -2, -1, 0)]
    with pytest.raises(ValueError):
        scan_roots(f, 0, 1, 0)


def test_production_matches_oracle(rng):
    for t in range(200):
        A = random_matrix(rng, 1 + t % 7)
        assert det_value(A) == brute_det(A)
        if A.shape[0] <= 6:
            assert char_poly(A) == brute_charpoly(A)


@pytest.mark.parametrize("name", sorted(SUITES))
def test_named_suites(name):
    report = run_suite(name, seed=11, cases=60)
    assert report.ok, report.samples


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
