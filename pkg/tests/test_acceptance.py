"""Exit criteria, one test (or one parametrized family) per criterion."""

import math
import time
from itertools import product

import numpy as np
import pytest

from spinfid.fidelity import (
    Correlation,
    SpinState,
    closed_form_fidelity,
    pure_fidelity_against,
    uhlmann_fidelity,
)
from spinfid.moments import MomentumSupport, asymptotic_moment, compute_moments, wigner_moment
from spinfid.oracle import build_momentum_grid, oracle_fidelity
from spinfid.verify import REPORT, run_verification

ALL = [(s, c) for s in SpinState for c in Correlation]
GAMMAS = (1.0, 5.0, 20.0)
ETAS = (0.5, 2.0, 5.0, 10.0)
THETAS = (0.0, 0.5, 1.0)
SUPPORTS = (MomentumSupport.POSITIVE, MomentumSupport.SYMMETRIC)


def curves(gamma=20.0, theta=0.0, etas=np.linspace(0.0, 10.0, 201)):
    out = {sc: [] for sc in ALL}
    for eta in etas:
        m = compute_moments(gamma, float(eta), theta)
        for sc in ALL:
            out[sc].append(closed_form_fidelity(*sc, m))
    return {sc: np.array(v) for sc, v in out.items()}


def test_01_unboosted_identity(criterion):
    start = time.perf_counter()
    worst = 0.0
    for gamma in GAMMAS:
        m = compute_moments(gamma, 0.0, 0.0)
        for sc in ALL:
            worst = max(worst, abs(closed_form_fidelity(*sc, m) - 1))
    elapsed = time.perf_counter() - start
    criterion("1", worst < 1e-12 and elapsed < 1.0,
              f"max|F-1|={worst:.1e} runtime={elapsed:.2f}s")


def test_02_collinear_boost_identity(criterion):
    worst = 0.0
    for gamma, eta in product(GAMMAS, (0.5, 2.0, 5.0, 10.0)):
        m = compute_moments(gamma, eta, math.pi / 2)
        grid = build_momentum_grid(gamma, 64, MomentumSupport.POSITIVE)
        for sc in ALL:
            worst = max(worst, abs(closed_form_fidelity(*sc, m) - 1),
                        abs(oracle_fidelity(*sc, grid, eta, math.pi / 2) - 1))
    criterion("2", worst < 1e-10, f"max|F-1|={worst:.1e}")


def test_03_ghz_oracle_equivalence(criterion):
    start = time.perf_counter()
    worst = 0.0
    for support, gamma in product(SUPPORTS, GAMMAS):
        grid = build_momentum_grid(gamma, 128, support)
        for eta, theta in product(ETAS, THETAS):
            m = compute_moments(gamma, eta, theta, support=support)
            for corr in Correlation:
                diff = oracle_fidelity(SpinState.GHZ, corr, grid, eta, theta) - \
                    closed_form_fidelity(SpinState.GHZ, corr, m)
                worst = max(worst, abs(diff))
    elapsed = time.perf_counter() - start
    criterion("3", worst < 1e-8 and elapsed < 10.0,
              f"max|oracle-formula|={worst:.1e} runtime={elapsed:.2f}s")


@pytest.mark.parametrize("corr", list(Correlation), ids=lambda c: c.value)
def test_04_w_oracle_equivalence_symmetric(criterion, corr):
    worst = 0.0
    for gamma in GAMMAS:
        grid = build_momentum_grid(gamma, 128, MomentumSupport.SYMMETRIC)
        for eta in ETAS:
            m = compute_moments(gamma, eta, 0.0, support=MomentumSupport.SYMMETRIC)
            diff = oracle_fidelity(SpinState.W, corr, grid, eta, 0.0) - \
                closed_form_fidelity(SpinState.W, corr, m)
            worst = max(worst, abs(diff))
    criterion(f"4[{corr.value}]", worst < 1e-8, f"max|oracle-formula|={worst:.1e}")


@pytest.mark.parametrize("sc", ALL, ids=lambda sc: f"{sc[0].value}-{sc[1].value}")
def test_05_monotone_decay(criterion, sc):
    f = curves()[sc]
    rise = float(np.max(np.diff(f)))
    criterion(f"5[{sc[0].value}/{sc[1].value}]", rise <= 1e-10,
              f"largest step-to-step increase={rise:.2e}")


def test_06_ghz_ordering(criterion):
    far = compute_moments(20.0, 10.0, 0.0)
    near = compute_moments(20.0, 0.5, 0.0)
    f_far = [closed_form_fidelity(SpinState.GHZ, c, far) for c in Correlation]
    f_near = [closed_form_fidelity(SpinState.GHZ, c, near) for c in Correlation]
    ordered = f_far[0] <= f_far[1] <= f_far[2]
    spread_far = max(f_far) - min(f_far)
    spread_near = max(f_near) - min(f_near)
    criterion("6", ordered and spread_near < spread_far,
              f"eta=10 {['%.6f' % v for v in f_far]} spread {spread_near:.2e} -> {spread_far:.2e}")


def test_07_w_inverse_ordering(criterion):
    m = compute_moments(20.0, 10.0, 0.0)
    w = [closed_form_fidelity(SpinState.W, c, m) for c in Correlation]
    g = [closed_form_fidelity(SpinState.GHZ, c, m) for c in Correlation]
    ok = w[0] >= w[1] >= w[2] and (max(w) - min(w)) > (max(g) - min(g))
    criterion("7", ok, f"W {['%.6f' % v for v in w]} spread W={max(w) - min(w):.4f} "
                       f"GHZ={max(g) - min(g):.4f}")


def test_08_nonzero_asymptote(criterion):
    m = compute_moments(20.0, 40.0, 0.0)
    positive = all(closed_form_fidelity(*sc, m) > 0 for sc in ALL)
    gap = max(abs(wigner_moment(k, 20.0, 40.0, 0.0) - asymptotic_moment(k, 20.0))
              for k in (1, 2, 3))
    criterion("8", positive and gap < 1e-6,
              f"min F={min(closed_form_fidelity(*sc, m) for sc in ALL):.4f} "
              f"max|m_k-asym|={gap:.1e}")


def test_09_width_sensitivity(criterion):
    narrow = closed_form_fidelity(SpinState.GHZ, Correlation.PRODUCT,
                                  compute_moments(1.0, 5.0, 0.0))
    wide = closed_form_fidelity(SpinState.GHZ, Correlation.PRODUCT,
                                compute_moments(20.0, 5.0, 0.0))
    criterion("9", narrow > wide, f"F(gamma=1)={narrow:.6f} F(gamma=20)={wide:.6f}")


def _random_density(rng):
    rank = int(rng.integers(1, 9))
    g = rng.normal(size=(8, rank)) + 1j * rng.normal(size=(8, rank))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def _random_pure(rng):
    psi = rng.normal(size=8) + 1j * rng.normal(size=8)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj()), psi


def test_10_uhlmann_properties(criterion):
    rng = np.random.default_rng(10)
    start = time.perf_counter()
    sym = self_err = pure_err = reduce_err = 0.0
    for _ in range(100):
        rho, sigma = _random_density(rng), _random_density(rng)
        sym = max(sym, abs(uhlmann_fidelity(rho, sigma) - uhlmann_fidelity(sigma, rho)))
        self_err = max(self_err, abs(uhlmann_fidelity(rho, rho) - 1))
        a, psi = _random_pure(rng)
        b, phi = _random_pure(rng)
        pure_err = max(pure_err, abs(uhlmann_fidelity(a, b) - abs(np.vdot(psi, phi)) ** 2))
        reduce_err = max(reduce_err, abs(uhlmann_fidelity(a, sigma) - pure_fidelity_against(a, sigma)))
    elapsed = time.perf_counter() - start
    ok = sym < 1e-10 and self_err < 1e-12 and pure_err < 1e-12 and reduce_err < 1e-10 \
        and elapsed < 2.0
    criterion("10", ok, f"sym={sym:.1e} self={self_err:.1e} pure={pure_err:.1e} "
                        f"reduction={reduce_err:.1e} runtime={elapsed:.2f}s")


def test_11_grid_convergence(criterion):
    worst = 0.0
    for support, gamma in product(SUPPORTS, GAMMAS):
        coarse = build_momentum_grid(gamma, 64, support)
        fine = build_momentum_grid(gamma, 128, support)
        for eta, theta in product(ETAS, THETAS):
            for sc in ALL:
                a = oracle_fidelity(*sc, coarse, eta, theta, cross_check=False)
                b = oracle_fidelity(*sc, fine, eta, theta, cross_check=False)
                worst = max(worst, abs(a - b))
    criterion("11", worst < 1e-10, f"max|F(64)-F(128)|={worst:.1e}")


def test_12_positive_axis_discrepancy_report(criterion):
    results = run_verification()
    reported = [r for r in results if r.check == "w_positive_discrepancy"]
    ok = (
        len(reported) == 3 * len(GAMMAS) * len(ETAS) * len(THETAS)
        and all(r.status == REPORT for r in reported)
        and max(abs(r.value) for r in reported) > 0
    )
    criterion("12", ok, f"{len(reported)} signed differences reported, "
                        f"max |diff|={max(abs(r.value) for r in reported):.3f}")
