import numpy as np
import pytest

from majcoh import (
    CatalysisQuery,
    ProbabilityProfile,
    PureState,
    c_l,
    catalysis_necessary,
    catalyzes,
    compare,
    ComparisonResult,
    interconvertible_catalytic,
    majorizes,
    search_catalyst,
)
from majcoh.sampling import random_profile

P = ProbabilityProfile

# The flagship incomparable pair: a two-level catalyst unlocks it.
X = P([0.4, 0.4, 0.1, 0.1])
Y = P([0.5, 0.25, 0.25, 0.0])
CAT = P([0.6, 0.4])


def prefix_sums(entries):
    s = sorted(entries, reverse=True)
    return np.cumsum(s)


class TestCatalyzes:
    def test_trivial_catalyst_reduces_to_majorization(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            d = int(rng.integers(2, 7))
            x, y = random_profile(d, rng), random_profile(d, rng)
            assert catalyzes(x, y, P([1.0])) == majorizes(x, y)

    def test_flagship_pair(self):
        assert compare(X, Y) is ComparisonResult.INCOMPARABLE
        assert not majorizes(X, Y)
        # partial-sum oracle on the 8-entry products
        px = prefix_sums(np.outer(X.entries, CAT.entries).ravel())
        py = prefix_sums(np.outer(Y.entries, CAT.entries).ravel())
        assert np.allclose(px[:-1], [0.24, 0.48, 0.64, 0.80, 0.86, 0.92, 0.96], atol=1e-12)
        assert np.allclose(py[:-1], [0.30, 0.50, 0.65, 0.80, 0.90, 1.00, 1.00], atol=1e-12)
        assert np.all(px[:-1] <= py[:-1] + 1e-12)
        assert catalyzes(X, Y, CAT)

    def test_uniform_catalyst_fails_flagship(self):
        assert not catalyzes(X, Y, P([0.5, 0.5]))

    def test_result_i_uniform_catalysts_never_help(self):
        rng = np.random.default_rng(1)
        for _ in range(200):
            d = int(rng.integers(2, 6))
            x, y = random_profile(d, rng), random_profile(d, rng)
            for k in (2, 3, 4):
                uniform = P(np.full(k, 1.0 / k))
                assert catalyzes(x, y, uniform) == majorizes(x, y)


class TestSearchCatalyst:
    def test_finds_flagship_catalyst(self):
        q = CatalysisQuery(source=X, target=Y, catalyst_dim=2, grid_step=0.01)
        found = search_catalyst(q)
        assert found is not None
        assert catalyzes(X, Y, found)
        # lexicographically first hit on this grid
        assert np.allclose(found.entries, [0.6, 0.4], atol=1e-12)

    def test_already_allowed_returns_most_uniform_hit(self):
        x = P([1 / 3, 1 / 3, 1 / 3])
        y = P([0.5, 0.5, 0.0])
        q = CatalysisQuery(source=x, target=y, catalyst_dim=2, grid_step=0.01)
        found = search_catalyst(q)
        assert found is not None
        assert np.allclose(found.entries, [0.5, 0.5], atol=1e-12)

    def test_endpoint_violation_yields_none(self):
        # largest source entry exceeds largest target entry
        x, y = P([0.6, 0.4]), P([0.5, 0.5])
        q = CatalysisQuery(source=x, target=y, catalyst_dim=2, grid_step=0.02)
        assert search_catalyst(q) is None

    def test_none_when_grid_too_coarse(self):
        q = CatalysisQuery(source=X, target=Y, catalyst_dim=2, grid_step=0.5)
        found = search_catalyst(q)
        if found is not None:  # candidates: (.5,.5) and (1,0)
            assert catalyzes(X, Y, found)

    def test_invalid_grid_rejected(self):
        with pytest.raises(ValueError, match="grid_step"):
            CatalysisQuery(source=X, target=Y, catalyst_dim=2, grid_step=0.03)

    def test_result_ii_reverse_transition_never_catalyzed(self):
        # over incomparable pairs with a known catalyst, the reverse search fails
        q = CatalysisQuery(source=Y, target=X, catalyst_dim=2, grid_step=0.01)
        assert search_catalyst(q) is None

        # perturbing the flagship pair yields fresh catalyzable incomparable pairs
        rng = np.random.default_rng(2)
        checked = 0
        for _ in range(40):
            x_raw = X.entries + rng.uniform(-0.02, 0.02, size=4)
            y_raw = Y.entries + np.append(rng.uniform(-0.02, 0.02, size=3), 0.0)
            x_raw = np.clip(x_raw, 1e-3, None) / np.clip(x_raw, 1e-3, None).sum()
            y_raw = np.clip(y_raw, 0.0, None) / np.clip(y_raw, 0.0, None).sum()
            x, y = P(np.sort(x_raw)[::-1]), P(np.sort(y_raw)[::-1])
            if compare(x, y) is not ComparisonResult.INCOMPARABLE:
                continue
            fwd = search_catalyst(CatalysisQuery(source=x, target=y, catalyst_dim=2, grid_step=0.02))
            if fwd is None:
                continue
            checked += 1
            rev = search_catalyst(CatalysisQuery(source=y, target=x, catalyst_dim=2, grid_step=0.02))
            assert rev is None
        assert checked >= 10

    def test_result_iii_hits_satisfy_endpoint_condition(self):
        rng = np.random.default_rng(3)
        hits = 0
        for _ in range(200):
            d = int(rng.integers(2, 5))
            x, y = random_profile(d, rng), random_profile(d, rng)
            found = search_catalyst(CatalysisQuery(source=x, target=y, catalyst_dim=2, grid_step=0.1))
            if found is not None:
                hits += 1
                assert catalysis_necessary(x, y)
        assert hits >= 10


class TestCatalysisNecessary:
    def test_flagship_pair_passes(self):
        assert catalysis_necessary(X, Y)

    def test_equal_profiles(self):
        assert catalysis_necessary(X, X)

    def test_endpoint_violation(self):
        assert not catalysis_necessary(P([0.6, 0.4]), P([0.5, 0.5]))

    def test_any_catalyzed_pair_satisfies_it(self):
        rng = np.random.default_rng(4)
        found_any = 0
        for _ in range(300):
            d = int(rng.integers(2, 5))
            x, y = random_profile(d, rng), random_profile(d, rng)
            c = random_profile(int(rng.integers(1, 4)), rng)
            if catalyzes(x, y, c):
                found_any += 1
                assert catalysis_necessary(x, y)
        assert found_any >= 20


class TestInterconvertible:
    def test_permutations_equivalent(self):
        assert interconvertible_catalytic(P([0.1, 0.6, 0.3]), P([0.6, 0.3, 0.1]))

    def test_flagship_pair_not_interconvertible(self):
        assert not interconvertible_catalytic(X, Y)

    def test_self(self):
        assert interconvertible_catalytic(Y, Y)


def test_catalysis_implies_tail_measure_ordering():
    # cross-module consistency: every tail measure of the composite source
    # dominates that of the composite target when catalysis holds
    from majcoh import tensor

    sx = PureState.from_profile(X)
    sy = PureState.from_profile(Y)
    sc = PureState.from_profile(CAT)
    assert catalyzes(X, Y, CAT)
    big_x, big_y = tensor(sx, sc), tensor(sy, sc)
    for l in range(2, big_x.dim + 1):
        assert c_l(big_y, l) <= c_l(big_x, l) + 1e-10
