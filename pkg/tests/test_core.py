import pytest
from hypothesis import given
from hypothesis import strategies as st

from coverfree.core import (
    CFFParams,
    IncidenceMatrix,
    format_matrix,
    parse_matrix,
    read_matrix_file,
    write_matrix_file,
)


def small_matrices(max_points=8, max_blocks=8):
    return st.integers(1, max_points).flatmap(
        lambda n: st.lists(
            st.integers(0, (1 << n) - 1), min_size=1, max_size=max_blocks
        ).map(lambda rows: IncidenceMatrix(n, tuple(rows)))
    )


class TestCFFParams:
    def test_fields(self):
        p = CFFParams(w=1, r=3, d=0, N=12, T=9, k=4)
        assert (p.w, p.r, p.d, p.N, p.T, p.k) == (1, 3, 0, 12, 9, 4)

    def test_k_optional(self):
        assert CFFParams(w=1, r=1, d=0, N=2, T=2).k is None

    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(w=0, r=1, d=0, N=1, T=2),
            dict(w=1, r=0, d=0, N=1, T=2),
            dict(w=1, r=1, d=-1, N=1, T=2),
            dict(w=1, r=1, d=0, N=0, T=2),
            dict(w=1, r=1, d=0, N=1, T=0),
            dict(w=2, r=2, d=0, N=10, T=3),
            dict(w=1, r=1, d=0, N=2, T=2, k=0),
        ],
    )
    def test_rejects(self, kwargs):
        with pytest.raises(ValueError):
            CFFParams(**kwargs)


class TestIncidenceMatrix:
    def test_from_rows_and_get(self):
        m = IncidenceMatrix.from_rows(3, [[1, 0, 1], [0, 1, 0]])
        assert m.num_points == 3
        assert m.num_blocks == 2
        assert [[m.get(i, j) for j in range(3)] for i in range(2)] == [
            [1, 0, 1],
            [0, 1, 0],
        ]
        assert m.block(0) == (0, 2)
        assert m.block(1) == (1,)
        assert m.block_sizes() == (2, 1)

    def test_from_rows_rejects_non_binary(self):
        with pytest.raises(ValueError, match="0 or 1"):
            IncidenceMatrix.from_rows(2, [[1, 2]])

    def test_from_blocks(self):
        m = IncidenceMatrix.from_blocks(4, [(0, 3), (1,)])
        assert m.rows == (0b1001, 0b0010)

    def test_from_blocks_range(self):
        with pytest.raises(ValueError, match="out of range"):
            IncidenceMatrix.from_blocks(3, [(0, 3)])

    def test_row_too_wide(self):
        with pytest.raises(ValueError, match="does not fit"):
            IncidenceMatrix(2, (0b100,))

    def test_needs_blocks_and_points(self):
        with pytest.raises(ValueError):
            IncidenceMatrix(0, (0,))
        with pytest.raises(ValueError):
            IncidenceMatrix(1, ())

    def test_identity(self):
        m = IncidenceMatrix.identity(3)
        assert m.rows == (1, 2, 4)

    def test_transpose_explicit(self):
        m = IncidenceMatrix.from_rows(3, [[1, 1, 0], [0, 1, 1]])
        t = m.transpose()
        assert t.num_points == 2
        assert t.num_blocks == 3
        assert t.rows == (0b01, 0b11, 0b10)

    @given(small_matrices())
    def test_transpose_involution(self, m):
        assert m.transpose().transpose() == m

    @given(small_matrices())
    def test_transpose_swaps_entries(self, m):
        t = m.transpose()
        for i in range(m.num_blocks):
            for j in range(m.num_points):
                assert m.get(i, j) == t.get(j, i)

    def test_replicate_explicit(self):
        m = IncidenceMatrix(3, (0b101,))
        assert m.replicate_points(2).rows == (0b110011,)

    def test_replicate_single_copy_is_identity(self):
        m = IncidenceMatrix(3, (0b101, 0b011))
        assert m.replicate_points(1) == m

    def test_replicate_rejects_zero(self):
        with pytest.raises(ValueError):
            IncidenceMatrix.identity(2).replicate_points(0)

    @given(small_matrices(max_points=6), st.integers(1, 4))
    def test_replicate_scales_block_sizes(self, m, copies):
        r = m.replicate_points(copies)
        assert r.num_points == m.num_points * copies
        assert r.block_sizes() == tuple(s * copies for s in m.block_sizes())


class TestFileFormat:
    def test_format_explicit(self):
        m = IncidenceMatrix.from_rows(3, [[1, 0, 1], [0, 1, 0]])
        claim = CFFParams(w=1, r=1, d=0, N=3, T=2)
        assert format_matrix(m, claim) == "CFF 3 2 1 1 0\n101\n010\n"

    def test_format_unclaimed_zero_fills(self):
        m = IncidenceMatrix(2, (0b01,))
        assert format_matrix(m) == "CFF 2 1 0 0 0\n10\n"

    def test_format_rejects_shape_mismatch(self):
        m = IncidenceMatrix.identity(3)
        with pytest.raises(ValueError, match="does not match"):
            format_matrix(m, CFFParams(w=1, r=1, d=0, N=3, T=2))

    def test_parse_explicit(self):
        m, claim = parse_matrix("CFF 3 2 1 1 0\n101\n010\n")
        assert m.rows == (0b101, 0b010)
        assert claim == CFFParams(w=1, r=1, d=0, N=3, T=2)

    def test_parse_unclaimed(self):
        m, claim = parse_matrix("CFF 2 1 0 0 0\n10\n")
        assert claim is None
        assert m.rows == (0b01,)

    @pytest.mark.parametrize(
        "text",
        [
            "CFF 2 1 0 0 0\n10",  # missing final newline
            "",
            "CFF 2 1 0 0\n10\n",  # five header fields
            "XFF 2 1 0 0 0\n10\n",
            "CFF 2 x 0 0 0\n10\n",
            "CFF 0 1 0 0 0\n\n",
            "CFF 2 2 0 0 0\n10\n",  # row count mismatch
            "CFF 2 1 0 0 0\n101\n",  # row length mismatch
            "CFF 2 1 0 0 0\n12\n",  # bad character
            "CFF 2 1 0 0 0\n10\r\n",  # CR smuggled in
            "CFF 2 1 1 0 0\n10\n",  # half-claimed header
            "CFF 2 1 0 0 3\n10\n",  # d without w, r
        ],
    )
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            parse_matrix(text)

    def test_file_round_trip(self, tmp_path):
        m = IncidenceMatrix.from_blocks(4, [(0, 1), (2, 3), (1, 2)])
        claim = CFFParams(w=1, r=1, d=0, N=4, T=3)
        path = tmp_path / "m.cff"
        write_matrix_file(path, m, claim)
        assert read_matrix_file(path) == (m, claim)
        # byte-exact on disk, LF only
        data = path.read_bytes()
        assert data == b"CFF 4 3 1 1 0\n1100\n0011\n0110\n"

    @given(small_matrices())
    def test_round_trip_unclaimed(self, m):
        assert parse_matrix(format_matrix(m)) == (m, None)

    @given(small_matrices(), st.integers(1, 2), st.integers(1, 2), st.integers(0, 3))
    def test_round_trip_claimed(self, m, w, r, d):
        if m.num_blocks < w + r:
            return
        claim = CFFParams(w=w, r=r, d=d, N=m.num_points, T=m.num_blocks)
        assert parse_matrix(format_matrix(m, claim)) == (m, claim)
