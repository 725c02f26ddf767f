"""Oracle-versus-closed-form verification matrix."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from itertools import product
from typing import Optional

from .fidelity import Correlation, SpinState, closed_form_fidelity, symmetric_w_fidelity
from .moments import DEFAULT_SETTINGS, MomentumSupport, compute_moments
from .oracle import build_momentum_grid, grid_moments, oracle_fidelity

GAMMAS = (1.0, 5.0, 20.0)
ETAS = (0.5, 2.0, 5.0, 10.0)
THETAS = (0.0, 0.5, 1.0)

EQUIVALENCE_TOL = 1e-8
GRID_CONSISTENT_TOL = 1e-10
CONVERGENCE_TOL = 1e-10

PASS, FAIL, REPORT = "PASS", "FAIL", "REPORT"


@dataclass(frozen=True)
class CheckResult:
    check: str
    case: str
    value: float
    tolerance: Optional[float]
    status: str

    def as_dict(self):
        return asdict(self)


def _case(state, corr, support, gamma, eta, theta):
    return (f"{state.value}/{corr.value} {support.value} "
            f"gamma={gamma:g} eta={eta:g} theta={theta:g}")


def _bounded(check, case, diff, tol):
    return CheckResult(check, case, diff, tol, PASS if abs(diff) < tol else FAIL)


def run_verification(nodes: int = 128, settings=DEFAULT_SETTINGS):
    """Run every equivalence and convergence check; returns CheckResults.

    Signed differences are always ``oracle - formula``.
    """
    results = []
    grids = {}

    def grid(gamma, n, support):
        key = (gamma, n, support)
        if key not in grids:
            grids[key] = build_momentum_grid(gamma, n, support)
        return grids[key]

    for support, gamma, eta, theta in product(MomentumSupport, GAMMAS, ETAS, THETAS):
        g = grid(gamma, nodes, support)
        coarse = grid(gamma, nodes // 2, support)
        moments = compute_moments(gamma, eta, theta, settings, support)
        on_grid = grid_moments(g, eta, theta)
        for state, corr in product(SpinState, Correlation):
            case = _case(state, corr, support, gamma, eta, theta)
            value = oracle_fidelity(state, corr, g, eta, theta)
            half = oracle_fidelity(state, corr, coarse, eta, theta, cross_check=False)
            results.append(_bounded("grid_convergence", case, value - half,
                                    CONVERGENCE_TOL))
            if state is SpinState.GHZ:
                results.append(_bounded(
                    "ghz_equivalence", case,
                    value - closed_form_fidelity(state, corr, moments), EQUIVALENCE_TOL))
                results.append(_bounded(
                    "ghz_grid_consistent", case,
                    value - closed_form_fidelity(state, corr, on_grid),
                    GRID_CONSISTENT_TOL))
            elif support is MomentumSupport.SYMMETRIC and theta == 0.0:
                results.append(_bounded(
                    "w_equivalence", case,
                    value - closed_form_fidelity(state, corr, moments), EQUIVALENCE_TOL))
                results.append(_bounded(
                    "w_symmetric_rederived", case,
                    value - symmetric_w_fidelity(corr, moments), EQUIVALENCE_TOL))
            elif support is MomentumSupport.POSITIVE:
                diff = value - closed_form_fidelity(state, corr, moments)
                results.append(CheckResult("w_positive_discrepancy", case, diff,
                                           None, REPORT))
    return results


def all_passed(results) -> bool:
    return all(r.status != FAIL for r in results)


def format_table(results) -> str:
    lines = [f"{'status':<7} {'check':<24} {'oracle-formula':>16}  case"]
    for r in results:
        lines.append(f"{r.status:<7} {r.check:<24} {r.value:>16.3e}  {r.case}")
    summary = {}
    for r in results:
        summary.setdefault((r.check, r.status), 0)
        summary[(r.check, r.status)] += 1
    lines.append("")
    for (check, status), count in sorted(summary.items()):
        lines.append(f"{check}: {count} {status}")
    lines.append("OVERALL: " + ("PASS" if all_passed(results) else "FAIL"))
    return "\n".join(lines) + "\n"
