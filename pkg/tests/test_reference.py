import pytest

from cpsteenrod import blocks as B
from cpsteenrod import reference as R
from cpsteenrod import series as S
from cpsteenrod.lenses import Lens
from cpsteenrod.series import GeneratorSpec

from oracles import monomial_counts


def test_milnor_examples():
    assert R.milnor_series(3, 5).values() == [1, 1, 0, 0, 1, 2]
    assert R.milnor_series(2, 3).values() == [1, 1, 1, 2]
    assert R.milnor_series(5, 8)[8] == 1


def test_milnor_classical_p2_examples():
    assert R.milnor_series_p2_classical(3).values() == [1, 1, 1, 2]
    assert R.milnor_series_p2_classical(4)[4] == 2
    assert R.milnor_series_p2_classical(0).values() == [1]


def test_hz_modp_examples():
    assert R.hz_modp_series(3, 5).values() == [1, 0, 0, 0, 1, 1]
    assert R.hz_modp_series(2, 2)[2] == 1


def test_b_polynomial():
    assert R.b_polynomial(4).values() == [1, 0, 1, 0, 1]


def test_generator_names():
    names = {g.name for g in R.milnor_generators(3, 20)}
    assert names == {"xi1", "xi2", "tau0", "tau1", "tau2"}
    assert "tau0" not in {g.name for g in R.hz_modp_generators(3, 20)}


@pytest.mark.parametrize("p", [2, 3, 5])
def test_milnor_matches_brute_force(p):
    n = 40
    gens = R.milnor_generators(p, n)
    assert R.milnor_series(p, n).values() == monomial_counts([(g.degree, g.exponent_bound) for g in gens], [], n)


def test_p2_presentations_agree_up_to_512():
    assert R.milnor_series(2, 512) == R.milnor_series_p2_classical(512)


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_hz_times_exterior_is_milnor(p):
    n = 200
    ext = S.from_generators([GeneratorSpec.exterior(1)], n)
    assert S.tensor(R.hz_modp_series(p, n), ext) == R.milnor_series(p, n)


def test_perturb():
    gens = R.perturb(R.milnor_generators(3, 20), "xi1", 1)
    assert {g.name: g.degree for g in gens}["xi1"] == 5
    with pytest.raises(KeyError):
        R.perturb(gens, "nope", 1)


def test_classical_factor_cells_example():
    assert sorted(R.classical_factor_cells(3, 1, 9)) == [0, 4, 5, 8, 9]


@pytest.mark.parametrize("p", [2, 3, 5])
def test_classical_cells_match_model(p):
    assert R.classical_zz_cells(p, 100) == B.cells(B.DsaModel(p), Lens.UNDERLYING, 100)
