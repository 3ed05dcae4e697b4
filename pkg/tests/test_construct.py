from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coverfree.bounds import sperner_T
from coverfree.core import CFFParams, IncidenceMatrix
from coverfree.construct import (
    ConstructionFailedError,
    OrthogonalArray,
    PackingDesign,
    check_orthogonal_array,
    check_packing,
    check_separating,
    oa_construct,
    oa_to_packing,
    packing_to_cff,
    random_cff,
    random_uniform_cff,
    recursive_cff,
    rs_cff,
    shf_compose,
    shf_modular,
    sperner_cff,
    trivial_ds,
)
from coverfree.verify import BudgetExceededError, is_cff, is_disjunct, is_k_uniform


class TestTrivialDS:
    def test_singletons_when_i_side_smaller(self):
        assert trivial_ds(4, 1, 2) == IncidenceMatrix.identity(4)

    def test_transpose_is_cover_free(self):
        m = trivial_ds(5, 2, 2)
        assert m.num_blocks == 10 and m.block_sizes() == (2,) * 10
        t = m.transpose()
        claim = CFFParams(w=2, r=2, d=0, N=10, T=5)
        assert is_cff(t, claim).ok

    def test_tie_prefers_i_subsets(self):
        m = trivial_ds(4, 3, 1)
        assert m.num_blocks == 4 and m.block_sizes() == (3, 3, 3, 3)

    @pytest.mark.parametrize("n,i,j", [(3, 2, 2), (3, 0, 1), (3, 1, 0)])
    def test_rejects(self, n, i, j):
        with pytest.raises(ValueError):
            trivial_ds(n, i, j)

    @given(st.integers(2, 6), st.integers(1, 2), st.integers(1, 2))
    @settings(max_examples=60, deadline=None)
    def test_disjunct_both_routes(self, n, i, j):
        if i + j > n:
            return
        m = trivial_ds(n, i, j)
        assert is_disjunct(m, i, j).ok
        claim = CFFParams(w=i, r=j, d=0, N=m.num_blocks, T=n)
        assert is_cff(m.transpose(), claim).ok


class TestSperner:
    @pytest.mark.parametrize("N", range(2, 7))
    def test_middle_layer_family(self, N):
        m, claim = sperner_cff(N)
        assert claim == CFFParams(w=1, r=1, d=0, N=N, T=comb(N, N // 2), k=N // 2)
        assert claim.T == sperner_T(N)
        assert is_k_uniform(m, N // 2)
        assert is_cff(m, claim).ok

    def test_rejects_single_point(self):
        with pytest.raises(ValueError):
            sperner_cff(1)


class TestOrthogonalArray:
    @pytest.mark.parametrize("q,t", [(2, 2), (3, 2), (4, 2), (5, 3)])
    def test_polynomial_array_has_full_strength(self, q, t):
        oa = oa_construct(q, t)
        assert (oa.k, oa.s, oa.num_columns) == (q + 1, q, q**t)
        assert check_orthogonal_array(oa)

    @pytest.mark.parametrize("q,t", [(3, 0), (3, 4), (6, 2)])
    def test_rejects(self, q, t):
        with pytest.raises(ValueError):
            oa_construct(q, t)

    def test_tampering_detected(self):
        oa = oa_construct(3, 2)
        rows = [list(r) for r in oa.rows]
        rows[0][0] = (rows[0][0] + 1) % 3
        bad = OrthogonalArray(t=2, k=4, s=3, rows=tuple(map(tuple, rows)))
        assert not check_orthogonal_array(bad)

    def test_missing_row_detected(self):
        oa = oa_construct(3, 2)
        bad = OrthogonalArray(t=2, k=4, s=3, rows=oa.rows[:3])
        assert not check_orthogonal_array(bad)


class TestPacking:
    def test_from_orthogonal_array(self):
        p = oa_to_packing(oa_construct(3, 2))
        assert (p.v, p.k, p.t, len(p.blocks)) == (12, 4, 2, 9)
        assert check_packing(p)

    def test_duplicate_block_detected(self):
        p = oa_to_packing(oa_construct(3, 2))
        bad = PackingDesign(v=p.v, k=p.k, t=p.t, blocks=p.blocks[:1] + p.blocks)
        assert not check_packing(bad)

    def test_degenerate_blocks_detected(self):
        assert not check_packing(PackingDesign(v=4, k=2, t=2, blocks=((0, 0),)))
        assert not check_packing(PackingDesign(v=4, k=2, t=2, blocks=((0, 9),)))

    def test_to_cff_with_separation(self):
        m, claim = packing_to_cff(oa_to_packing(oa_construct(3, 2)), d=1)
        assert claim == CFFParams(w=1, r=2, d=1, N=12, T=9, k=4)
        assert is_cff(m, claim).ok

    def test_rejects_exhausted_blocks(self):
        p = oa_to_packing(oa_construct(3, 2))
        with pytest.raises(ValueError):
            packing_to_cff(p, d=3)

    def test_rejects_weak_strength(self):
        p = PackingDesign(v=4, k=2, t=1, blocks=((0, 1), (2, 3)))
        with pytest.raises(ValueError):
            packing_to_cff(p)


class TestReedSolomon:
    def test_full_length_family(self):
        m, claim = rs_cff(5, 5, 4)
        assert claim == CFFParams(w=1, r=4, d=0, N=25, T=25, k=5)
        assert is_k_uniform(m, 5)

    def test_matches_orthogonal_array_route(self):
        m_rs, claim_rs = rs_cff(3, 4, 3)
        m_oa, claim_oa = packing_to_cff(oa_to_packing(oa_construct(3, 2)))
        assert claim_rs == claim_oa
        assert m_rs == m_oa
        assert is_cff(m_rs, claim_rs).ok

    def test_shortening_equals_direct_shorter_length(self):
        direct, claim_direct = rs_cff(5, 5, 4)
        short, claim_short = rs_cff(5, None, 4, 0, 1)
        assert short == direct and claim_short == claim_direct

    def test_shortened_with_separation(self):
        m, claim = rs_cff(5, None, 2, 1, 1)
        assert claim == CFFParams(w=1, r=2, d=1, N=25, T=25, k=5)
        assert is_cff(m, claim).ok

    @pytest.mark.parametrize(
        "args",
        [
            (5, 1, 2),  # N below 2
            (5, 7, 2),  # N above q+1
            (5, None, 2),  # N required when not shortening
            (3, 3, 3),  # exponent collapses below 2
            (3, 4, 1),  # exponent exceeds q
            (3, None, 1, 2, 2),  # s + d too large
            (5, 5, 2, 0, 2),  # explicit N contradicts shortening
            (3, None, 1, 0, 3),  # shortened away to length 1
        ],
    )
    def test_rejects(self, args):
        with pytest.raises(ValueError):
            rs_cff(*args)

    def test_block_cap(self):
        with pytest.raises(BudgetExceededError):
            rs_cff(5, 5, 2, max_blocks=10)


class TestSeparatingHash:
    @pytest.mark.parametrize("n,w,r", [(2, 1, 1), (5, 2, 2)])
    def test_modular_family_separates(self, n, w, r):
        shf = shf_modular(n, w, r)
        assert shf.num_functions == w * r + 1
        assert shf.num_columns == n * n
        assert check_separating(shf)

    def test_rejects_small_or_smooth_modulus(self):
        with pytest.raises(ValueError):
            shf_modular(2, 1, 2)
        with pytest.raises(ValueError):
            shf_modular(6, 2, 2)

    def test_compose_explicit(self):
        base = trivial_ds(2, 1, 1).transpose()
        base_claim = CFFParams(w=1, r=1, d=0, N=2, T=2)
        m, claim = shf_compose(base, base_claim, shf_modular(2, 1, 1))
        assert claim == CFFParams(w=1, r=1, d=0, N=4, T=4)
        assert m.rows == (0b0101, 0b1001, 0b1010, 0b0110)
        assert is_cff(m, claim).ok

    def test_compose_rejects_mismatches(self):
        base = IncidenceMatrix.identity(5)
        claim = CFFParams(w=1, r=1, d=0, N=5, T=5)
        with pytest.raises(ValueError, match="symbols"):
            shf_compose(IncidenceMatrix.identity(3), claim, shf_modular(5, 1, 1))
        with pytest.raises(ValueError, match="profile"):
            shf_compose(base, claim, shf_modular(5, 2, 2))


class TestRecursive:
    def test_one_round_two_two(self):
        m, claim = recursive_cff(2, 2, 0, 1)
        assert claim == CFFParams(w=2, r=2, d=0, N=50, T=25)
        assert is_cff(m, claim).ok

    def test_one_round_with_separation(self):
        m, claim = recursive_cff(1, 1, 1, 1)
        assert claim == CFFParams(w=1, r=1, d=1, N=8, T=4)
        assert is_cff(m, claim).ok

    def test_zero_rounds_is_subset_base(self):
        m, claim = recursive_cff(1, 2)
        assert claim == CFFParams(w=1, r=2, d=0, N=3, T=3)
        assert is_cff(m, claim).ok

    def test_replicated_base(self):
        m, claim = recursive_cff(1, 1, 2)
        assert claim == CFFParams(w=1, r=1, d=2, N=6, T=2)
        assert is_cff(m, claim).ok

    def test_block_cap(self):
        with pytest.raises(BudgetExceededError):
            recursive_cff(2, 2, 0, 3, max_blocks=1000)

    @pytest.mark.parametrize("kwargs", [dict(w=0, r=1), dict(w=1, r=1, d=-1), dict(w=1, r=1, k=-1)])
    def test_rejects(self, kwargs):
        with pytest.raises(ValueError):
            recursive_cff(**kwargs)


class TestRandom:
    def test_default_size_small_profile(self):
        m, claim = random_cff(1, 1, 0, 4)
        assert (claim.N, claim.T) == (10, 4)
        assert is_cff(m, claim).ok

    def test_default_size_wider_profile(self):
        m, claim = random_cff(1, 2, 0, 8)
        assert (claim.N, claim.T) == (39, 8)
        assert is_cff(m, claim).ok

    def test_deterministic_per_seed(self):
        a, _ = random_cff(1, 1, 0, 4, seed=3)
        b, _ = random_cff(1, 1, 0, 4, seed=3)
        assert a == b

    def test_impossible_target_exhausts_attempts(self):
        with pytest.raises(ConstructionFailedError) as exc:
            random_cff(1, 1, 0, 4, N=2, max_attempts=3)
        assert exc.value.attempts == 3

    def test_rejects(self):
        with pytest.raises(ValueError):
            random_cff(1, 1, 0, 1)
        with pytest.raises(ValueError):
            random_cff(1, 1, 0, 4, max_attempts=0)

    def test_uniform_variant(self):
        m, claim = random_uniform_cff(2, 1, 1, 4)
        assert claim == CFFParams(w=1, r=1, d=17, N=130, T=4, k=65)
        assert is_k_uniform(m, 65)
        assert is_cff(m, claim).ok

    def test_uniform_rejects_degenerate_alphabet(self):
        with pytest.raises(ValueError):
            random_uniform_cff(1, 1, 1, 4)
