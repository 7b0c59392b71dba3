"""Tests for spin operators, tensor products and partial traces."""

import numpy as np
import pytest

from spin_ring.discord import DomainError
from spin_ring.discord.operators import (
    DenseOperator,
    SectorOperator,
    SubsystemLabel,
    binomial_cos_trace,
    collective_operator,
    identity,
    partial_trace,
    single_spin_operator,
    spin_half,
    spin_matrix,
    spin_sectors,
    tensor,
    trace_cos_sin_identities,
    z_projection_diagonal,
)

AXES = ("x", "y", "z")


class TestDenseOperator:
    def test_coerces_to_complex(self):
        op = DenseOperator(np.eye(4))
        assert op.matrix.dtype == np.complex128
        assert (op.dim, op.num_spins) == (4, 2)

    @pytest.mark.parametrize(
        "matrix",
        [np.eye(3), np.ones((2, 4)), np.ones(4), np.ones((1, 1))],
        ids=["not-power-of-two", "not-square", "vector", "scalar"],
    )
    def test_rejects_bad_shapes(self, matrix):
        with pytest.raises(DomainError):
            DenseOperator(matrix)

    def test_hermitian_assertion_is_checked(self):
        with pytest.raises(DomainError, match="Hermitian"):
            DenseOperator(np.array([[0, 1], [0, 0]]), hermitian=True)

    def test_arithmetic(self):
        sx, sy = spin_half("x"), spin_half("y")
        assert np.allclose((sx + sy).matrix, sx.matrix + sy.matrix)
        assert np.allclose((sx - 0.5).matrix, sx.matrix - 0.5 * np.eye(2))
        assert np.allclose((2 * sx).matrix, (sx * 2).matrix)
        assert np.allclose((np.float64(3.0) * sx).matrix, 3 * sx.matrix)
        assert np.allclose((sx / 2).matrix, sx.matrix / 2)
        assert (1j * sx).hermitian is False

    def test_commutator_is_angular_momentum(self):
        sx, sy, sz = (spin_half(a) for a in AXES)
        assert np.allclose(sx.commutator(sy).matrix, 1j * sz.matrix)

    def test_conjugate_keeps_hermiticity(self, rng):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        unitary, _ = np.linalg.qr(a)
        rho = DenseOperator(np.diag([0.4, 0.3, 0.2, 0.1]), hermitian=True)
        out = rho.conjugate_by(unitary)
        assert out.hermitian
        assert np.isclose(out.trace(), 1)
        assert np.allclose(np.sort(out.eigvalsh()), [0.1, 0.2, 0.3, 0.4])

    def test_tensor_of_nothing(self):
        with pytest.raises(DomainError):
            tensor()


class TestSpinOperators:
    @pytest.mark.parametrize("axis", AXES)
    def test_single_spin_squares_to_quarter(self, axis):
        op = single_spin_operator(2, axis, 3)
        assert np.allclose((op @ op).matrix, 0.25 * np.eye(8))

    @pytest.mark.parametrize("site", [0, 4, -1])
    def test_site_out_of_range(self, site):
        with pytest.raises(DomainError, match="site"):
            single_spin_operator(site, "z", 3)

    def test_bad_axis(self):
        with pytest.raises(DomainError, match="axis"):
            spin_half("w")

    def test_empty_collective(self):
        with pytest.raises(DomainError):
            collective_operator("x", [], 3)

    @pytest.mark.parametrize("n_total", [3, 4])
    def test_ring_collective_angular_momentum(self, n_total):
        ring = range(1, n_total)
        ix, iy, iz = (collective_operator(a, ring, n_total) for a in AXES)
        assert np.allclose(ix.commutator(iy).matrix, 1j * iz.matrix, atol=1e-14)
        assert np.allclose(iy.commutator(iz).matrix, 1j * ix.matrix, atol=1e-14)

    def test_sites_on_different_factors_commute(self):
        i1 = single_spin_operator(1, "x", 3)
        s = single_spin_operator(3, "y", 3)
        assert i1.commutator(s).max_abs() == 0

    def test_leftmost_factor_is_site_one(self):
        expected = np.kron(np.diag([0.5, -0.5]), np.eye(2))
        assert np.allclose(single_spin_operator(1, "z", 2).matrix, expected)

    @pytest.mark.parametrize("n", [1, 2, 5])
    def test_z_projection_matches_collective(self, n):
        iz = collective_operator("z", range(1, n + 1), n)
        assert np.array_equal(np.diagonal(iz.matrix).real, z_projection_diagonal(n))

    def test_z_projection_is_read_only(self):
        with pytest.raises(ValueError, match="read-only"):
            z_projection_diagonal(2)[0] = 3.0


class TestTraceIdentities:
    """Traces of ``cos(2 tau I_z)`` and ``sin(2 tau I_z)`` over the ring."""

    @pytest.mark.parametrize("n", range(1, 11))
    def test_random_times(self, n, rng):
        for tau in rng.uniform(-np.pi, np.pi, size=50):
            tr_cos, tr_sin = trace_cos_sin_identities(n, tau)
            expected = 2**n * np.cos(tau) ** n
            assert abs(tr_cos - expected) < 1e-10
            assert abs(tr_sin) < 1e-10
            assert abs(binomial_cos_trace(n, tau) - expected) < 1e-10

    def test_binomial_rejects_empty_ring(self):
        with pytest.raises(DomainError):
            binomial_cos_trace(0, 0.1)


class TestPartialTrace:
    def test_product_state(self, rng):
        w = rng.uniform(size=4)
        rho_a = DenseOperator(np.diag(w / w.sum()), hermitian=True)
        rho_b = DenseOperator(np.array([[0.7, 0.2j], [-0.2j, 0.3]]), hermitian=True)
        rho = rho_a.kron(rho_b)
        assert np.allclose(partial_trace(rho, SubsystemLabel.RING_A).matrix, rho_a.matrix)
        assert np.allclose(partial_trace(rho, SubsystemLabel.CENTRAL_B).matrix, rho_b.matrix)

    def test_traces_are_preserved(self, rng):
        m = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        op = DenseOperator(m)
        for keep in SubsystemLabel:
            assert np.isclose(partial_trace(op, keep, 3).trace(), op.trace())

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError, match="does not act"):
            partial_trace(identity(3), SubsystemLabel.RING_A, 4)

    def test_single_spin_has_no_ring(self):
        with pytest.raises(DomainError):
            partial_trace(identity(1), SubsystemLabel.RING_A)

    def test_linearity(self, rng):
        a, b = (
            DenseOperator(rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8)))
            for _ in range(2)
        )
        alpha, beta = 0.3 - 1.2j, 2.5
        for keep in SubsystemLabel:
            combined = partial_trace(alpha * a + beta * b, keep)
            separate = alpha * partial_trace(a, keep) + beta * partial_trace(b, keep)
            assert np.allclose(combined.matrix, separate.matrix, atol=1e-13)


##############################################################################
# Total-spin sectors


def _random_blocks(rng, num_ring_spins, factor=1):
    blocks = []
    for two_j, _ in spin_sectors(num_ring_spins):
        d = factor * (two_j + 1)
        a = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
        blocks.append(a @ a.conj().T)
    return blocks


class TestSectors:
    @pytest.mark.parametrize("two_j", range(7))
    def test_spin_matrix_algebra(self, two_j):
        jx, jy, jz = (spin_matrix(two_j, a) for a in AXES)
        j = two_j / 2
        assert np.allclose(jx @ jy - jy @ jx, 1j * jz, atol=1e-13)
        casimir = jx @ jx + jy @ jy + jz @ jz
        assert np.allclose(casimir, j * (j + 1) * np.eye(two_j + 1), atol=1e-13)

    def test_spin_half_matches(self):
        for axis in AXES:
            assert np.array_equal(spin_matrix(1, axis), spin_half(axis).matrix)

    @pytest.mark.parametrize("n", range(1, 13))
    def test_sectors_fill_the_ring(self, n):
        assert sum(m * (two_j + 1) for two_j, m in spin_sectors(n)) == 2**n

    def test_ten_spins(self):
        assert spin_sectors(10) == ((10, 1), (8, 9), (6, 35), (4, 75), (2, 90), (0, 42))

    def test_bad_arguments(self):
        with pytest.raises(DomainError):
            spin_matrix(-1, "z")
        with pytest.raises(DomainError, match="axis"):
            spin_matrix(2, "w")
        with pytest.raises(DomainError):
            spin_sectors(0)

    def test_block_validation(self):
        with pytest.raises(DomainError, match="sectors"):
            SectorOperator((np.eye(6),), 2)
        with pytest.raises(DomainError, match="must be"):
            SectorOperator((np.eye(6), np.eye(3)), 2)
        with pytest.raises(DomainError, match="Hermitian"):
            SectorOperator((np.eye(3), np.array([[1j]])), 2, with_centre=False, hermitian=True)

    def test_spectrum_counts_multiplicities(self):
        op = SectorOperator(
            (np.diag([0.1, 0.2, 0.3, 0.05]), np.diag([0.05, 0.125])), 3, with_centre=False
        )
        assert (op.dim, op.num_spins, op.multiplicities) == (8, 3, (1, 2))
        assert np.allclose(op.eigvalsh(), [0.05, 0.05, 0.05, 0.1, 0.125, 0.125, 0.2, 0.3])
        assert np.isclose(op.trace(), 1.0)
        assert op.is_hermitian()

    def test_partial_trace_of_product(self, rng):
        ring = _random_blocks(rng, 4)
        sectors = spin_sectors(4)
        norm = sum(m * np.trace(b).real for (_, m), b in zip(sectors, ring, strict=True))
        ring = [b / norm for b in ring]
        rho_b = np.array([[0.6, 0.1 - 0.2j], [0.1 + 0.2j, 0.4]])
        op = SectorOperator(tuple(np.kron(b, rho_b) for b in ring), 4, hermitian=True)

        reduced_b = partial_trace(op, SubsystemLabel.CENTRAL_B)
        assert np.allclose(reduced_b.matrix, rho_b, atol=1e-14)
        reduced_a = partial_trace(op, SubsystemLabel.RING_A, 5)
        assert not reduced_a.with_centre
        for got, expected in zip(reduced_a.blocks, ring, strict=True):
            assert np.allclose(got, expected, atol=1e-14)

    def test_ring_only_has_no_centre(self, rng):
        op = SectorOperator(tuple(_random_blocks(rng, 3)), 3, with_centre=False)
        with pytest.raises(DomainError, match="central"):
            op.centre_blocks()
        with pytest.raises(DomainError, match="does not act"):
            partial_trace(op, SubsystemLabel.RING_A, 5)
