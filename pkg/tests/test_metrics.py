import numpy as np
import pytest

from imgshield.metrics import SsimConfig, mse, psnr, ssim, ssimd, ssimd_gradient

from oracles import finite_diff_gradient, max_relative_error, ssim_bruteforce


def smooth_image(seed, h=16, w=16, channels=1):
    """Band-limited fixture safely inside [0.1, 0.9]."""
    rng = np.random.default_rng(seed)
    rows = np.linspace(0, 2 * np.pi, h)[:, None, None]
    cols = np.linspace(0, 2 * np.pi, w)[None, :, None]
    img = 0.5 * np.ones((h, w, channels))
    for _ in range(3):
        a, b, p, q = rng.uniform(0.5, 2.0, size=4)
        img += 0.1 * np.sin(a * rows + p) * np.cos(b * cols + q)
    return np.clip(img, 0.1, 0.9)


class TestSsim:
    def test_identity_is_exactly_one(self):
        x = np.random.default_rng(0).random((16, 16, 3))
        assert ssim(x, x).value == 1.0

    def test_constant_zero_vs_one_closed_form(self):
        a = np.zeros((16, 16, 1))
        b = np.ones((16, 16, 1))
        c1 = 0.01**2
        assert ssim(a, b).value == pytest.approx(c1 / (1 + c1), abs=1e-12)

    def test_half_and_half_vs_uniform_matches_bruteforce(self):
        a = np.full((12, 12, 1), 0.5)
        b = np.zeros((12, 12, 1))
        b[:, 6:] = 1.0
        assert ssim(a, b).value == pytest.approx(ssim_bruteforce(a, b), abs=1e-12)

    def test_random_pair_matches_bruteforce(self):
        rng = np.random.default_rng(7)
        a = rng.random((14, 15, 3))
        b = rng.random((14, 15, 3))
        assert ssim(a, b).value == pytest.approx(ssim_bruteforce(a, b), abs=1e-10)

    def test_symmetry(self):
        rng = np.random.default_rng(8)
        a, b = rng.random((16, 16, 3)), rng.random((16, 16, 3))
        assert abs(ssim(a, b).value - ssim(b, a).value) < 1e-12

    def test_bounded(self):
        rng = np.random.default_rng(9)
        for _ in range(10):
            a, b = rng.random((16, 16, 1)), rng.random((16, 16, 1))
            assert -1.0 <= ssim(a, b).value <= 1.0

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            ssim(np.zeros((16, 16, 1)), np.zeros((16, 17, 1)))

    def test_too_small_for_window(self):
        with pytest.raises(ValueError):
            ssim(np.zeros((8, 8, 1)), np.zeros((8, 8, 1)))


class TestSsimd:
    def test_identity_zero(self):
        x = np.random.default_rng(1).random((16, 16, 3))
        assert ssimd(x, x).value == 0.0

    def test_constant_pair(self):
        a = np.zeros((16, 16, 1))
        b = np.ones((16, 16, 1))
        c1 = 0.01**2
        assert ssimd(a, b).value == pytest.approx(1 - c1 / (1 + c1), abs=1e-12)

    def test_definitional_complement(self):
        rng = np.random.default_rng(2)
        a, b = rng.random((16, 16, 3)), rng.random((16, 16, 3))
        assert ssimd(a, b).value == pytest.approx(1.0 - ssim(a, b).value, abs=1e-15)

    def test_monotone_under_growing_noise(self):
        x = smooth_image(11)
        n = np.random.default_rng(12).uniform(-1, 1, size=x.shape)
        values = [ssimd(x, x + t * n).value for t in (0.0, 0.05, 0.1, 0.2)]
        assert all(v2 >= v1 for v1, v2 in zip(values, values[1:]))


class TestSsimdGradient:
    def test_zero_at_identity(self):
        x = np.random.default_rng(3).random((16, 16, 3))
        assert np.all(ssimd_gradient(x, x) == 0.0)

    def test_matches_finite_differences(self):
        rng = np.random.default_rng(4)
        for seed in range(3):
            a = rng.random((16, 16, 1))
            b = rng.random((16, 16, 1))
            grad = ssimd_gradient(a, b)
            fd = finite_diff_gradient(lambda v: ssimd(a, v).value, b, h=1e-4)
            assert max_relative_error(fd, grad) < 1e-4

    def test_matches_finite_differences_rgb(self):
        rng = np.random.default_rng(5)
        a = rng.random((12, 12, 3))
        b = rng.random((12, 12, 3))
        grad = ssimd_gradient(a, b)
        fd = finite_diff_gradient(lambda v: ssimd(a, v).value, b, h=1e-4)
        assert max_relative_error(fd, grad) < 1e-4

    def test_constant_pair_uniform_in_interior(self):
        # valid-mode windows给 full coverage only away from borders
        a = np.full((16, 16, 1), 0.25)
        b = np.full((16, 16, 1), 0.75)
        g = ssimd_gradient(a, b)[:, :, 0]
        interior = g[5:11, 5:11]
        assert np.ptp(interior) < 1e-15
        assert np.abs(g).max() == pytest.approx(np.abs(interior).max(), rel=1e-12)


class TestMseAndPsnr:
    def test_identity(self):
        x = np.random.default_rng(6).random((8, 8, 3))
        assert mse(x, x).value == 0.0
        assert psnr(x, x).value == np.inf

    def test_zero_vs_one(self):
        assert mse(np.zeros((8, 8, 1)), np.ones((8, 8, 1))).value == 1.0

    def test_quarter(self):
        a = np.zeros((8, 8, 1))
        b = np.full((8, 8, 1), 0.5)
        assert mse(a, b).value == pytest.approx(0.25, abs=1e-15)
        assert psnr(a, b).value == pytest.approx(6.020599913279624, abs=1e-9)

    def test_symmetry(self):
        rng = np.random.default_rng(7)
        a, b = rng.random((8, 8, 3)), rng.random((8, 8, 3))
        assert mse(a, b).value == mse(b, a).value


class TestSsimConfig:
    def test_default_stabilizers(self):
        c1, c2 = SsimConfig().stabilizers()
        assert c1 == pytest.approx(1e-4)
        assert c2 == pytest.approx(9e-4)

    def test_override(self):
        c1, c2 = SsimConfig(c1=0.5, c2=0.25).stabilizers()
        assert (c1, c2) == (0.5, 0.25)
