"""Direct scattering on a truncated window.

Modified Jost columns are propagated by 2x2 transfer recursions written
entirely in the uniformization variable (no square-root branch enters).
Scattering coefficients come from Wronskians evaluated at a single site;
their site-independence is a test, not an assumption.  Each column is
integrated from the edge where its boundary vector is exactly stationary,
which is also the direction in which its recursion is contractive inside
the column's analyticity region.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import DivisionNearZero, NearBranchPoint, SingularTransfer
from .ist import EigenSet, theta_minus_inf_constraint
from .lattice import PotentialWindow, partner, theta_products
from .spectral import (Case, CaseConfig, SINGULAR_GUARD, SpectralPoint,
                       lam_squared, point_from_zeta, zeta_bar)

RENORM_THRESHOLD = 1e50
BRANCH_GUARD = 1e-10


class ColumnKind(enum.Enum):
    M = "M"
    MBAR = "Mbar"
    N = "N"
    NBAR = "Nbar"


# Which of the two difference equations each column satisfies, and the
# window edge where its boundary vector is imposed.
_FORWARD = {ColumnKind.M: True, ColumnKind.MBAR: True,
            ColumnKind.N: False, ColumnKind.NBAR: False}
_EQUATION_A = {ColumnKind.M: True, ColumnKind.NBAR: True,
               ColumnKind.MBAR: False, ColumnKind.N: False}


@dataclass(frozen=True)
class EigenfunctionColumn:
    """Column values on n in [-N, N+1] with per-site log renormalization."""

    kind: ColumnKind
    point: SpectralPoint
    N: int
    values: np.ndarray
    log_scale: np.ndarray

    def raw(self, n: int) -> tuple[np.ndarray, float]:
        i = n + self.N
        return self.values[i], float(self.log_scale[i])

    def value(self, n: int) -> np.ndarray:
        vec, s = self.raw(n)
        return vec * math.exp(s)


def _step_matrix_a(cfg: CaseConfig, zeta: complex, qn: complex, rn: complex) -> np.ndarray:
    r = cfg.r
    return np.array(
        [[1.0 / zeta, qn * (zeta * r - 1.0) / (zeta * (zeta - r))],
         [rn, (zeta * r - 1.0) / (zeta - r)]], dtype=complex) / r


def _step_matrix_b(cfg: CaseConfig, zeta: complex, qn: complex, rn: complex) -> np.ndarray:
    r = cfg.r
    return np.array(
        [[(zeta - r) / (zeta * r - 1.0), qn],
         [zeta * (zeta - r) / (zeta * r - 1.0) * rn, zeta]], dtype=complex) / r


def _boundary_vector(cfg: CaseConfig, t: float, zeta: complex, kind: ColumnKind) -> np.ndarray:
    if kind is ColumnKind.M:
        return np.array([cfg.q_minus(t), zeta - cfg.r], dtype=complex)
    if kind is ColumnKind.MBAR:
        return np.array([cfg.r - 1.0 / zeta, -cfg.r_minus(t)], dtype=complex)
    if kind is ColumnKind.NBAR:
        return np.array([cfg.q_plus(t), zeta - cfg.r], dtype=complex)
    return np.array([cfg.r - 1.0 / zeta, -cfg.r_plus(t)], dtype=complex)


def _inv2(m: np.ndarray) -> np.ndarray:
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    if det == 0 or not np.isfinite(det):
        raise SingularTransfer("transfer matrix not invertible")
    return np.array([[m[1, 1], -m[0, 1]], [-m[1, 0], m[0, 0]]], dtype=complex) / det


def jost(window: PotentialWindow, point: SpectralPoint,
         kind: ColumnKind) -> EigenfunctionColumn:
    """Propagate one modified Jost column across the window."""
    cfg = window.cfg
    N = window.N
    zeta = point.zeta
    size = 2 * N + 2
    values = np.empty((size, 2), dtype=complex)
    logs = np.zeros(size)
    step = _step_matrix_a if _EQUATION_A[kind] else _step_matrix_b
    vec = _boundary_vector(cfg, window.t, zeta, kind)
    log = 0.0

    def renorm(v, s):
        m = float(np.max(np.abs(v)))
        if m > RENORM_THRESHOLD or (0.0 < m < 1.0 / RENORM_THRESHOLD):
            return v / m, s + math.log(m)
        return v, s

    if _FORWARD[kind]:
        values[0] = vec
        for i, n in enumerate(range(-N, N + 1)):
            s = step(cfg, zeta, window.site(n), partner(window, n))
            if not np.all(np.isfinite(s)):
                raise SingularTransfer(f"non-finite transfer entry at n={n}, zeta={zeta}")
            vec = s @ vec
            vec, log = renorm(vec, log)
            values[i + 1] = vec
            logs[i + 1] = log
    else:
        values[-1] = vec
        for n in range(N, -N - 1, -1):
            s = step(cfg, zeta, window.site(n), partner(window, n))
            if not np.all(np.isfinite(s)):
                raise SingularTransfer(f"non-finite transfer entry at n={n}, zeta={zeta}")
            vec = _inv2(s) @ vec
            vec, log = renorm(vec, log)
            values[n + N] = vec
            logs[n + N] = log
    return EigenfunctionColumn(kind, point, N, values, logs)


def wronskian(col_a: EigenfunctionColumn, col_b: EigenfunctionColumn, n: int) -> complex:
    """2x2 determinant of the two columns at site n, de-scaled."""
    va, sa = col_a.raw(n)
    vb, sb = col_b.raw(n)
    det = va[0] * vb[1] - va[1] * vb[0]
    return complex(det * math.exp(sa + sb))


def _wronskian_scaled(col_a, col_b, n) -> tuple[complex, float]:
    va, sa = col_a.raw(n)
    vb, sb = col_b.raw(n)
    return va[0] * vb[1] - va[1] * vb[0], sa + sb


@dataclass(frozen=True)
class Coefficients:
    """Modified scattering entries at one zeta (t21/t12 carry the lam-factors)."""

    t11: complex
    t22: complex
    t21_mod: complex
    t12_mod: complex

    @property
    def det(self) -> complex:
        return self.t11 * self.t22 - self.t21_mod * self.t12_mod


def _columns(window: PotentialWindow, point: SpectralPoint) -> dict:
    return {kind: jost(window, point, kind) for kind in ColumnKind}


def _descale(value: complex, log: float) -> complex:
    """value * exp(log), overflowing to inf (columns evaluated far outside
    their analyticity region produce meaningless huge coefficients)."""
    if value == 0:
        return 0.0 + 0.0j
    e = log + math.log(abs(value))
    if e > 700.0:
        return complex(math.inf, 0.0)
    return value * math.exp(log)


def scattering_coefficients(window: PotentialWindow, zeta: complex,
                            n: int = 0) -> Coefficients:
    """Wronskian representation of the scattering coefficients at site n."""
    cfg = window.cfg
    if abs(zeta) > SINGULAR_GUARD and abs(zeta + 1.0 / zeta - 2.0 * cfg.r) < BRANCH_GUARD:
        raise NearBranchPoint(f"zeta + 1/zeta - 2r vanishes at zeta={zeta}")
    point = point_from_zeta(cfg, zeta)
    denom = cfg.r * (zeta + 1.0 / zeta - 2.0 * cfg.r)
    cols = _columns(window, point)
    theta_n = theta_products(window).at(n)
    lam2 = lam_squared(cfg, zeta)
    d_mn, s_mn = _wronskian_scaled(cols[ColumnKind.M], cols[ColumnKind.N], n)
    d_mb_nb, s_mb_nb = _wronskian_scaled(cols[ColumnKind.MBAR], cols[ColumnKind.NBAR], n)
    d_m_nb, s_m_nb = _wronskian_scaled(cols[ColumnKind.M], cols[ColumnKind.NBAR], n)
    d_mb_n, s_mb_n = _wronskian_scaled(cols[ColumnKind.MBAR], cols[ColumnKind.N], n)
    t11 = -theta_n * _descale(d_mn, s_mn) / denom
    t22 = theta_n * _descale(d_mb_nb, s_mb_nb) / denom
    t21 = theta_n * lam2 ** n * _descale(d_m_nb, s_m_nb) / denom
    t12 = -theta_n * lam2 ** (-n) * _descale(d_mb_n, s_mb_n) / denom
    return Coefficients(complex(t11), complex(t22), complex(t21), complex(t12))


def reflection(window: PotentialWindow, zeta: complex) -> tuple[complex, complex]:
    """(rho, rho_bar) = (t21_mod/t11, t12_mod/t22)."""
    c = scattering_coefficients(window, zeta)
    if abs(c.t11) < 1e-13 * max(1.0, abs(c.t21_mod)):
        raise DivisionNearZero(f"t11 vanishes at zeta={zeta}")
    if abs(c.t22) < 1e-13 * max(1.0, abs(c.t12_mod)):
        raise DivisionNearZero(f"t22 vanishes at zeta={zeta}")
    return c.t21_mod / c.t11, c.t12_mod / c.t22


@dataclass(frozen=True)
class SymmetryReport:
    """Max residuals of the involution and conjugation symmetries."""

    first_diag: float
    first_offdiag: float
    second: float
    samples: tuple[complex, ...]


def check_symmetries(window: PotentialWindow, zeta_samples) -> SymmetryReport:
    """Residuals of t11(z) = s*t22(zbar(z)) and its conjugated companion.

    Both diagonal symmetries carry the case sign s = q0**2/delta (+ for
    I/III, - for II/IV); the sign follows from (r*lam - z)(r/lam - z) =
    r**2 - 1 together with q_plus*r_minus = sigma*q0**2.  The off-diagonal
    relation is evaluated in modified variables, t21_mod(z) =
    -(q_plus/r_minus) t12_mod(zbar(z)), which is equivalent on the
    spectral surface and free of the square-root branch.
    """
    cfg = window.cfg
    sign = 1.0 if cfg.case_id in (Case.I, Case.III) else -1.0
    qp = cfg.q_plus(window.t)
    rm = cfg.r_minus(window.t)
    d1 = d2 = d3 = 0.0
    for zeta in zeta_samples:
        zb = zeta_bar(cfg, zeta)
        c_here = scattering_coefficients(window, zeta)
        c_bar = scattering_coefficients(window, zb)
        c_star = scattering_coefficients(window, np.conj(zb))
        d1 = max(d1, abs(c_here.t11 - sign * c_bar.t22))
        d2 = max(d2, abs(c_here.t21_mod + (qp / rm) * c_bar.t12_mod))
        d3 = max(d3, abs(c_here.t11 - sign * np.conj(c_star.t22)))
    return SymmetryReport(d1, d2, d3, tuple(complex(z) for z in zeta_samples))


def trace_formula(cfg: CaseConfig, eigen_data: EigenSet,
                  zeta: complex) -> tuple[complex, complex]:
    """Reflectionless product predictions (t11, t22) from the discrete spectrum."""
    theta_inf = theta_minus_inf_constraint(eigen_data)
    num = 1.0 + 0.0j
    den = 1.0 + 0.0j
    for z, zb in zip(eigen_data.zeros_t11, eigen_data.zeros_t22):
        num *= zeta - z
        den *= zeta - zb
    t11 = num / den if den != 0 else complex(math.inf, 0.0)
    t22 = theta_inf * den / num if num != 0 else complex(math.inf, 0.0)
    return complex(t11), complex(t22)


@dataclass(frozen=True)
class AsymptoticReport:
    """Measured errors of the leading-order limits of columns and coefficients."""

    m_first: float
    m_second: float
    nbar_first: float
    nbar_second: float
    t11_large: float
    t11_branch: float
    t22_zero: float
    t22_branch: float
    branch_sign: float


def asymptotic_checks(window: PotentialWindow, big: float = 1e4,
                      small: float = 1e-4, offset: float = 1e-4) -> AsymptoticReport:
    """Evaluate the columns and coefficients near their distinguished points."""
    cfg = window.cfg
    sign = 1.0 if cfg.case_id in (Case.I, Case.III) else -1.0
    theta = theta_products(window)

    pt_big = point_from_zeta(cfg, big)
    m_col = jost(window, pt_big, ColumnKind.M)
    mv = m_col.value(0)
    m_first = abs(mv[0] - window.site(-1))
    m_second = abs(mv[1] / big - 1.0)

    pt_small = point_from_zeta(cfg, small)
    nbar_col = jost(window, pt_small, ColumnKind.NBAR)
    nv = nbar_col.value(0) * theta.at(0)
    nbar_first = abs(nv[0] - window.site(0))
    nbar_second = abs(nv[1] + cfg.r)

    t11_large = abs(scattering_coefficients(window, big).t11 - 1.0)
    t22_zero = abs(scattering_coefficients(window, small).t22 - 1.0)
    t11_branch = abs(scattering_coefficients(window, 1.0 / cfg.r + offset).t11 - sign)
    t22_branch = abs(scattering_coefficients(window, cfg.r + offset).t22 - sign)
    return AsymptoticReport(m_first, m_second, nbar_first, nbar_second,
                            t11_large, t11_branch, t22_zero, t22_branch, sign)


def continuum_samples(cfg: CaseConfig, count: int, seed: int = 0,
                      offset: float = 1e-6) -> list[complex]:
    """Points just off the continuum, suitable for coefficient evaluation."""
    rng = np.random.default_rng(seed)
    out = []
    angles = rng.uniform(0.0, 2.0 * math.pi, count)
    for i, a in enumerate(angles):
        radius = 1.0 + offset if i % 2 == 0 else 1.0 - offset
        z = radius * cmath.exp(1j * a)
        for bp in cfg.branch_points:
            if abs(z - bp) < 0.05:
                z = radius * cmath.exp(1j * (a + 0.1))
        out.append(z)
    return out


@dataclass(frozen=True)
class ScatteringReport:
    """Per-zeta records with invariant residuals for one window."""

    zeta_grid: tuple[complex, ...]
    t11: tuple[complex, ...]
    t22: tuple[complex, ...]
    t21_mod: tuple[complex, ...]
    t12_mod: tuple[complex, ...]
    rho: tuple[complex, ...]
    rho_bar: tuple[complex, ...]
    det_t: tuple[complex, ...]
    theta_minus_inf: complex
    det_residual: float
    symmetry: SymmetryReport
    trace_residual: float | None
    eigenvalue_residuals: tuple[float, ...]


def scattering_report(window: PotentialWindow, zetas,
                      eigen_data: EigenSet | None = None) -> ScatteringReport:
    """Assemble the full direct-scattering report on a zeta grid."""
    cfg = window.cfg
    theta_inf = theta_products(window).theta_minus_inf
    t11, t22, t21, t12, rho, rho_bar, det_t = [], [], [], [], [], [], []
    det_res = 0.0
    for z in zetas:
        c = scattering_coefficients(window, z)
        t11.append(c.t11)
        t22.append(c.t22)
        t21.append(c.t21_mod)
        t12.append(c.t12_mod)
        det_t.append(c.det)
        det_res = max(det_res, abs(c.det - theta_inf))
        if abs(c.t11) > 1e-13 and abs(c.t22) > 1e-13:
            rho.append(c.t21_mod / c.t11)
            rho_bar.append(c.t12_mod / c.t22)
        else:
            rho.append(complex("nan"))
            rho_bar.append(complex("nan"))
    symmetry = check_symmetries(window, zetas)
    trace_res = None
    eig_res = ()
    if eigen_data is not None and not eigen_data.is_empty():
        trace_res = 0.0
        for z in zetas:
            pred11, _ = trace_formula(cfg, eigen_data, z)
            c = scattering_coefficients(window, z)
            trace_res = max(trace_res, abs(pred11 - c.t11))
        eig_res = tuple(abs(scattering_coefficients(window, z).t11)
                        for z in eigen_data.zeros_t11)
    return ScatteringReport(
        tuple(complex(z) for z in zetas), tuple(t11), tuple(t22), tuple(t21),
        tuple(t12), tuple(rho), tuple(rho_bar), tuple(det_t),
        complex(theta_inf), det_res, symmetry, trace_res, eig_res)
