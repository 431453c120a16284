# -*- coding: utf-8 -*-
import math

import numpy as np
import pytest

from src.processing.exceptions import DimensionError, DomainError
from src.processing.monoid_core.counting import cardinality
from src.processing.monoid_core.element_index import ElementIndex
from src.processing.monoid_core.group_table import cyclic_group
from src.processing.monoid_core.partial_perm import (
    PartialPerm, compose, identity, partial_identity, zero,
)
from src.processing.monoid_core.wreath import wreath_identity
from src.processing.poset_zeta.coeff_vector import Basis, CoeffVector
from src.processing.poset_zeta.zeta_fast import mobius_transform
from src.processing.poset_zeta.zeta_naive import zeta_naive
from src.processing.semigroup_fft.convolution import convolve_naive, convolve_spectral
from src.processing.semigroup_fft.dclass import build_dclasses, extract_h, rank_blocks
from src.processing.semigroup_fft.direct import direct_fourier, groupoid_product
from src.processing.semigroup_fft.energy import energy_table, isotypic_energy
from src.processing.semigroup_fft.fft import fft, ifft, subgroup_irreps
from src.processing.semigroup_fft.spectrum import BlockSpectrum, load_spectrum, save_spectrum

ROOK_CASES = [(n, None) for n in range(6)]
WREATH_CASES = [(n, 2) for n in range(4)]


def _index(n, m):
    return ElementIndex(n, None if m is None else cyclic_group(m))


def _random(index, rng):
    return CoeffVector.random(index, rng)


# ---------------------------------------------------------------- D 类
def test_dclasses_n3():
    classes = build_dclasses(3)
    assert [d.r for d in classes] == [1, 3, 3, 1]
    assert [d.subgroup.order for d in classes] == [1, 1, 2, 6]
    assert sum(d.size for d in classes) == 34
    assert classes[0].idempotents == [zero(3)]


def test_dclasses_wreath(z2):
    classes = build_dclasses(2, z2)
    assert sum(d.r ** 2 * d.subgroup.order for d in classes) == 17
    assert classes[2].e_k == wreath_identity(2, z2)


def test_extract_h_single_element():
    index = ElementIndex(2)
    v = CoeffVector(index, np.arange(index.total, dtype=float), Basis.GROUPOID)
    b = partial_identity(2, [2])
    a = partial_identity(2, [1])
    h = extract_h(v, 1, b, a)
    assert h.shape == (1,)
    assert h[0] == index.index_of(PartialPerm(2, (2, 0)))


def test_extract_h_on_e_k_reads_subgroup_directly():
    index = ElementIndex(3)
    v = CoeffVector(index, np.arange(index.total, dtype=float), Basis.GROUPOID)
    e2 = partial_identity(3, [1, 2])
    h = extract_h(v, 2, e2, e2)
    assert list(h) == [index.index_of(partial_identity(3, [1, 2])),
                       index.index_of(PartialPerm(3, (2, 1, 0)))]


def test_extract_h_rejects_non_idempotents():
    index = ElementIndex(2)
    v = CoeffVector.zeros(index, Basis.GROUPOID)
    with pytest.raises(DomainError):
        extract_h(v, 1, PartialPerm(2, (2, 0)), partial_identity(2, [1]))
    with pytest.raises(DomainError):
        extract_h(v, 1, identity(2), partial_identity(2, [1]))


@pytest.mark.parametrize("n", range(5))
def test_extract_h_covers_each_rank(n):
    index = ElementIndex(n)
    v = CoeffVector(index, np.arange(index.total, dtype=float), Basis.GROUPOID)
    for d in build_dclasses(n):
        seen = np.concatenate([extract_h(v, d.k, b, a) for b in d.idempotents for a in d.idempotents])
        sl = index.rank_slice(d.k)
        assert sorted(seen.real.astype(int)) == list(range(sl.start, sl.stop))
        assert rank_blocks(v, d.k).shape == (d.r, d.r, d.subgroup.order)


# ---------------------------------------------------------------- 变换
@pytest.mark.parametrize("n, m", ROOK_CASES + WREATH_CASES)
def test_spectrum_size_equals_cardinality(n, m, rng):
    index = _index(n, m)
    spectrum = fft(_random(index, rng))
    assert spectrum.size == index.total == len(spectrum.flatten())
    irreps = subgroup_irreps(index)
    assert sum(math.comb(n, k) ** 2 * sum(d * d for d in s.dims) for k, s in enumerate(irreps)) == index.total


@pytest.mark.parametrize("n, m", ROOK_CASES + WREATH_CASES)
def test_round_trip(n, m, rng):
    index = _index(n, m)
    for _ in range(3):
        f = _random(index, rng)
        assert np.abs(ifft(fft(f)).values - f.values).max(initial=0.0) <= 1e-9


@pytest.mark.parametrize("n, m", [(2, None), (3, None), (2, 2)])
def test_spectrum_round_trip(n, m, rng):
    index = _index(n, m)
    irreps = subgroup_irreps(index)
    spectrum = BlockSpectrum.random(index, irreps, rng)
    assert fft(ifft(spectrum), irreps=irreps).max_abs_diff(spectrum) <= 1e-9


@pytest.mark.parametrize("n, m", [(4, None), (3, 2)])
def test_fft_is_linear(n, m, rng):
    index = _index(n, m)
    irreps = subgroup_irreps(index)
    f, g = _random(index, rng), _random(index, rng)
    alpha, beta = complex(*rng.standard_normal(2)), complex(*rng.standard_normal(2))
    combined = fft(CoeffVector(index, alpha * f.values + beta * g.values), irreps=irreps).flatten()
    expected = alpha * fft(f, irreps=irreps).flatten() + beta * fft(g, irreps=irreps).flatten()
    assert np.abs(combined - expected).max() <= 1e-10 * max(1.0, np.abs(expected).max())


def test_wreath_top_rank_above_full_table(rng, z2):
    """|Z_2≀S_5| = 3840，秩 5 的表示只存分解因子"""
    index = ElementIndex(5, z2)
    irreps = subgroup_irreps(index)
    assert irreps[4].has_tables
    assert irreps[5].is_factored and not irreps[5].has_tables
    f = _random(index, rng)
    spectrum = fft(f, irreps=irreps)
    assert spectrum.size == index.total
    assert np.abs(ifft(spectrum).values - f.values).max() <= 1e-8

    one = fft(CoeffVector.delta(index, wreath_identity(5, z2)), irreps=irreps)
    for i, rho in enumerate(irreps[5]):
        assert np.allclose(one.assembled(5, i), np.eye(rho.dim))


def test_zero_spectrum_inverts_to_zero():
    index = ElementIndex(3)
    f = ifft(BlockSpectrum.zeros(index, subgroup_irreps(index)))
    assert f.basis == Basis.SEMIGROUP
    assert not np.any(f.values)


def test_naive_path_agrees(rng):
    index = ElementIndex(3)
    f = _random(index, rng)
    assert fft(f, naive=True).max_abs_diff(fft(f)) <= 1e-10
    assert np.abs(ifft(fft(f), naive=True).values - f.values).max() <= 1e-9


def test_chain_method_agrees(rng):
    index = ElementIndex(4)
    f = _random(index, rng)
    assert fft(f, method="chain").max_abs_diff(fft(f, method="direct")) <= 1e-10


@pytest.mark.parametrize("n, m", [(0, None), (1, None), (2, None), (3, None), (1, 2), (2, 2)])
def test_matches_direct_evaluation(n, m, rng):
    index = _index(n, m)
    f = _random(index, rng)
    assert fft(f).max_abs_diff(direct_fourier(f)) <= 1e-10


def test_identity_maps_to_identity_blocks():
    index = ElementIndex(3)
    spectrum = fft(CoeffVector.delta(index, identity(3)))
    for k, irreps in enumerate(spectrum.irreps):
        for i, rho in enumerate(irreps):
            size = math.comb(3, k) * rho.dim
            assert np.allclose(spectrum.assembled(k, i), np.eye(size))


def test_zero_map_only_hits_rank_zero():
    index = ElementIndex(2)
    spectrum = fft(CoeffVector.delta(index, zero(2)))
    assert np.allclose(spectrum.blocks[0][0], 1.0)
    for k in (1, 2):
        for block in spectrum.blocks[k]:
            assert not np.any(np.abs(block) > 1e-12)
    assert spectrum.max_abs_diff(direct_fourier(CoeffVector.delta(index, zero(2)))) <= 1e-12


def test_fft_requires_semigroup_basis():
    index = ElementIndex(2)
    with pytest.raises(DomainError):
        fft(CoeffVector.zeros(index, Basis.GROUPOID))


# ---------------------------------------------------------------- 卷积
def test_convolve_deltas():
    index = ElementIndex(3)
    x = PartialPerm(3, (2, 0, 1))
    y = PartialPerm(3, (0, 3, 1))
    h = convolve_naive(CoeffVector.delta(index, x), CoeffVector.delta(index, y))
    assert np.array_equal(h.values, CoeffVector.delta(index, compose(x, y)).values)


def test_identity_is_a_unit(rng):
    index = ElementIndex(3)
    f = _random(index, rng)
    one = CoeffVector.delta(index, identity(3))
    assert np.allclose(convolve_naive(one, f).values, f.values)
    assert np.allclose(convolve_naive(f, one).values, f.values)


def test_convolution_is_associative(rng):
    index = ElementIndex(2)
    f, g, h = (CoeffVector.random(index, rng, integer=True) for _ in range(3))
    lhs = convolve_naive(convolve_naive(f, g), h)
    rhs = convolve_naive(f, convolve_naive(g, h))
    assert np.array_equal(lhs.values, rhs.values)


@pytest.mark.parametrize("n, m", [(3, None), (2, 2)])
def test_convolution_theorem(n, m, rng):
    index = _index(n, m)
    irreps = subgroup_irreps(index)
    for _ in range(5):
        f, g = _random(index, rng), _random(index, rng)
        lhs = fft(convolve_naive(f, g), irreps=irreps)
        rhs = fft(f, irreps=irreps).blockwise_product(fft(g, irreps=irreps))
        assert lhs.max_abs_diff(rhs) <= 1e-9
        assert np.abs(convolve_spectral(f, g).values - convolve_naive(f, g).values).max() <= 1e-9


def test_convolution_with_zero_map(rng):
    index = ElementIndex(3)
    f = _random(index, rng)
    z = CoeffVector.delta(index, zero(3))
    assert np.abs(convolve_spectral(f, z).values - convolve_naive(f, z).values).max() <= 1e-9


def test_convolve_rejects_different_spaces(rng):
    with pytest.raises(DimensionError):
        convolve_naive(_random(ElementIndex(2), rng), _random(ElementIndex(3), rng))


# ---------------------------------------------------------------- groupoid 乘法
def test_groupoid_law_on_r2():
    index = ElementIndex(2)
    elems = list(index.enumerate())
    for s in elems:
        for t in elems:
            product = groupoid_product(s, t)
            if s.domain == t.range:
                assert product == compose(s, t)
                assert product.rank == s.rank
            else:
                assert product is None


def test_groupoid_basis_multiplies_like_groupoid():
    """⌊s⌋⌊t⌋ 在 groupoid 基下等于 ⌊st⌋ 或 0"""
    index = ElementIndex(2)
    elems = list(index.enumerate())
    for s in elems:
        for t in elems:
            bs = mobius_transform(CoeffVector.delta(index, s, Basis.GROUPOID))
            bt = mobius_transform(CoeffVector.delta(index, t, Basis.GROUPOID))
            g = zeta_naive(convolve_naive(bs, bt))
            product = groupoid_product(s, t)
            expected = np.zeros(index.total)
            if product is not None:
                expected[index.index_of(product)] = 1
            assert np.allclose(g.values, expected)


# ---------------------------------------------------------------- 能量与存取
def test_energy_of_zero_spectrum():
    index = ElementIndex(2)
    energy = isotypic_energy(BlockSpectrum.zeros(index, subgroup_irreps(index)))
    assert all(v == 0 for v in energy.values())
    assert len(energy) == 1 + 1 + 2


def test_energy_scales_quadratically(rng):
    index = ElementIndex(3)
    f = _random(index, rng)
    c = 2 - 1j
    base = isotypic_energy(fft(f))
    scaled = isotypic_energy(fft(CoeffVector(index, c * f.values)))
    for key, value in base.items():
        assert scaled[key] == pytest.approx(abs(c) ** 2 * value, rel=1e-10)


def test_energy_table_of_identity():
    index = ElementIndex(3)
    table = energy_table(fft(CoeffVector.delta(index, identity(3))))
    assert list(table.columns) == ["k", "irrep", "dim", "r", "energy", "share"]
    assert np.allclose(table["energy"], table["r"] * table["dim"])
    assert table["share"].sum() == pytest.approx(1.0)


@pytest.mark.parametrize("binary", [False, True])
def test_save_and_load_spectrum(tmp_path, binary, rng, z2):
    index = ElementIndex(2, z2)
    spectrum = fft(_random(index, rng))
    path = save_spectrum(tmp_path / "spec.json", spectrum, binary=binary)
    loaded = load_spectrum(path, index, spectrum.irreps)
    assert loaded.max_abs_diff(spectrum) == 0.0
    assert (tmp_path / "spec.bin").exists() == binary


def test_load_spectrum_rejects_other_n(tmp_path, rng):
    spectrum = fft(_random(ElementIndex(2), rng))
    path = save_spectrum(tmp_path / "spec.json", spectrum)
    other = ElementIndex(3)
    with pytest.raises(DimensionError):
        load_spectrum(path, other, subgroup_irreps(other))


def test_cardinality_helper_consistent():
    assert cardinality(3) == ElementIndex(3).total
