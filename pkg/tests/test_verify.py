import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverfree.core import CFFParams, IncidenceMatrix
from coverfree.verify import (
    BudgetExceededError,
    ViolationWitness,
    check_claim,
    is_cff,
    is_cff_sampled,
    is_disjunct,
    is_k_uniform,
    max_r,
    pair_count,
)


def params(w, r, d, N, T):
    return CFFParams(w=w, r=r, d=d, N=N, T=T)


@st.composite
def matrices(draw):
    n = draw(st.integers(2, 5))
    t = draw(st.integers(2, 5))
    rows = draw(st.lists(st.integers(0, 2**n - 1), min_size=t, max_size=t))
    return IncidenceMatrix(num_points=n, rows=tuple(rows))


def test_pair_count():
    assert pair_count(9, 1, 3) == 504
    assert pair_count(25, 1, 4) == 265_650
    assert pair_count(25, 2, 2) == 75_900


class TestIsCff:
    def test_identity_separates_single_blocks(self):
        m = IncidenceMatrix.identity(4)
        assert is_cff(m, params(1, 1, 0, 4, 4)).ok
        assert is_cff(m, params(1, 3, 0, 4, 4)).ok

    def test_identity_pairs_have_empty_intersection(self):
        m = IncidenceMatrix.identity(4)
        res = is_cff(m, params(2, 1, 0, 4, 4))
        assert not res.ok
        assert res.witness == ViolationWitness((0, 1), (2,), 0)

    def test_witness_is_colex_least_and_replays(self):
        m = IncidenceMatrix(num_points=2, rows=(0b11, 0b11, 0b11))
        res = is_cff(m, params(1, 1, 0, 2, 3))
        assert not res.ok
        assert res.witness.b_rows == (0,)
        assert res.witness.a_rows == (1,)
        assert res.witness.replay(m) == res.witness.residual == 0

    def test_shape_mismatch(self):
        m = IncidenceMatrix.identity(4)
        with pytest.raises(ValueError, match="does not match"):
            is_cff(m, params(1, 1, 0, 5, 4))

    def test_budget_refusal_points_at_sampler(self):
        m = IncidenceMatrix.identity(4)
        with pytest.raises(BudgetExceededError, match="is_cff_sampled"):
            is_cff(m, params(1, 1, 0, 4, 4), budget=1)

    def test_bool_protocol(self):
        m = IncidenceMatrix.identity(3)
        assert is_cff(m, params(1, 1, 0, 3, 3))
        assert not is_cff(m, params(2, 1, 0, 3, 3))


class TestIsCffSampled:
    def test_pass_records_method(self):
        m = IncidenceMatrix.identity(4)
        res = is_cff_sampled(m, params(1, 1, 0, 4, 4), trials=50, seed=0)
        assert res.ok and res.method == "sampled"

    def test_failure_is_definitive(self):
        m = IncidenceMatrix(num_points=2, rows=(0b11, 0b11))
        res = is_cff_sampled(m, params(1, 1, 0, 2, 2), trials=10, seed=1)
        assert not res.ok
        assert res.witness.replay(m) == res.witness.residual <= 0

    def test_deterministic_per_seed(self):
        m = IncidenceMatrix(num_points=3, rows=(0b011, 0b011, 0b110, 0b101))
        a = is_cff_sampled(m, params(1, 2, 0, 3, 4), trials=20, seed=7)
        b = is_cff_sampled(m, params(1, 2, 0, 3, 4), trials=20, seed=7)
        assert (a.ok, a.witness) == (b.ok, b.witness)

    def test_rejects_zero_trials(self):
        m = IncidenceMatrix.identity(3)
        with pytest.raises(ValueError):
            is_cff_sampled(m, params(1, 1, 0, 3, 3), trials=0, seed=0)


class TestIsDisjunct:
    def test_identity_is_disjunct(self):
        assert is_disjunct(IncidenceMatrix.identity(3), 1, 1).ok

    def test_failure_with_nonempty_p(self):
        # point 1 never appears without point 2
        m = IncidenceMatrix(num_points=3, rows=(0b001, 0b110, 0b111))
        res = is_disjunct(m, 1, 1)
        assert not res.ok
        assert (res.witness.b_rows, res.witness.a_rows) == ((1,), (2,))
        assert res.witness.replay(m.transpose()) == 0

    def test_empty_p_still_counts(self):
        # no block avoids point 0, caught by P = {}, Q = {0}
        m = IncidenceMatrix(num_points=2, rows=(0b01,))
        res = is_disjunct(m, 1, 1)
        assert not res.ok
        assert res.witness.b_rows == ()
        assert res.witness.a_rows == (0,)

    def test_preconditions(self):
        m = IncidenceMatrix.identity(3)
        with pytest.raises(ValueError):
            is_disjunct(m, 2, 2)
        with pytest.raises(ValueError):
            is_disjunct(m, 0, 1)

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            is_disjunct(IncidenceMatrix.identity(5), 2, 2, budget=3)

    @given(matrices(), st.integers(1, 2), st.integers(1, 2))
    @settings(max_examples=150, deadline=None)
    def test_agrees_with_cff_on_transpose(self, m, i, j):
        if i + j > m.num_points:
            return
        direct = is_disjunct(m, i, j)
        via_dual = is_cff(
            m.transpose(), params(i, j, 0, m.num_blocks, m.num_points)
        )
        assert direct.ok == via_dual.ok


class TestMaxR:
    def test_identity(self):
        m = IncidenceMatrix.identity(5)
        assert max_r(m, 1, 0) == 4
        assert max_r(m, 2, 0) == 0

    def test_duplicate_blocks_kill_r1(self):
        m = IncidenceMatrix(num_points=3, rows=(0b110, 0b110, 0b111))
        assert max_r(m, 1, 0) == 0

    def test_nonincreasing_in_d(self):
        m = IncidenceMatrix.identity(4).replicate_points(3)
        values = [max_r(m, 1, d) for d in range(4)]
        assert values == [3, 3, 3, 0]

    def test_rejects_w_zero(self):
        with pytest.raises(ValueError):
            max_r(IncidenceMatrix.identity(3), 0, 0)


def test_is_k_uniform():
    m = IncidenceMatrix.identity(4)
    assert is_k_uniform(m, 1)
    assert not is_k_uniform(m, 2)


class TestCheckClaim:
    def test_picks_exhaustive_when_affordable(self):
        m = IncidenceMatrix.identity(4)
        assert check_claim(m, params(1, 1, 0, 4, 4)).method == "exhaustive"

    def test_falls_back_to_sampling(self):
        m = IncidenceMatrix.identity(4)
        res = check_claim(m, params(1, 1, 0, 4, 4), budget=1, trials=30)
        assert res.ok and res.method == "sampled"
