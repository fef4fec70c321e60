"""Discrete eigenvalues, norming constants, and reflectionless reconstruction.

Admissible spectra are fixed per case by the trace-formula asymptotics:
case I carries one complex quartet on |zeta - 1/r| = q0/r, case II carries
nothing, case III two real pairs linked by the spectral involution, case IV
one real pair.  The reflectionless inverse problem collapses to a dense
(4J+1)-dimensional linear system solved per lattice site and time.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import (DegenerateEigenvalues, DomainError, Inadmissible,
                     SingularSolution)
from .spectral import (Case, CaseConfig, Region, SINGULAR_GUARD, classify,
                       gamma, lam_squared, point_from_zeta, zeta_bar)

CONSTRAINT_TOL = 1e-8
DET_GUARD = 1e-13


@dataclass(frozen=True)
class Quartet:
    """Complex family {zeta, zeta*, zeta_bar, zeta_bar*}; first pair in D-."""

    zeta: complex
    zeta_conj: complex
    zbar: complex
    zbar_conj: complex


@dataclass(frozen=True)
class RealPair:
    """Real family {zeta_hat in D-, zeta_bar_hat in D+}."""

    zeta: complex
    zbar: complex


@dataclass(frozen=True)
class EigenSet:
    case_id: Case
    quartets: tuple[Quartet, ...]
    pairs: tuple[RealPair, ...]

    @property
    def J1(self) -> int:
        return len(self.quartets)

    @property
    def J2(self) -> int:
        return len(self.pairs)

    @property
    def J(self) -> int:
        return 2 * self.J1 + self.J2

    @property
    def zeros_t11(self) -> tuple[complex, ...]:
        out = []
        for q in self.quartets:
            out.extend([q.zeta, q.zeta_conj])
        out.extend(p.zeta for p in self.pairs)
        return tuple(out)

    @property
    def zeros_t22(self) -> tuple[complex, ...]:
        out = []
        for q in self.quartets:
            out.extend([q.zbar, q.zbar_conj])
        out.extend(p.zbar for p in self.pairs)
        return tuple(out)

    def is_empty(self) -> bool:
        return self.J == 0


def empty_eigenset(cfg: CaseConfig) -> EigenSet:
    return EigenSet(cfg.case_id, (), ())


def theta_minus_inf_constraint(eigenset: EigenSet) -> complex:
    """Theta_-inf forced by the zero-argument limit of the trace formula."""
    val = 1.0 + 0.0j
    for q in eigenset.quartets:
        val *= abs(q.zeta) ** 2 / abs(q.zbar) ** 2
    for p in eigenset.pairs:
        val *= p.zeta / p.zbar
    return val


def admissibility_residuals(cfg: CaseConfig, eigenset: EigenSet,
                            theta_inf: complex | None = None) -> dict[str, float]:
    """Residuals of the three trace-formula limits for this case's spectrum.

    The right-hand sides follow the case-dependent branch-point signs of
    t11 near 1/r and t22 near r (+1 for cases I/III, -1 for cases II/IV).
    """
    if eigenset.is_empty():
        return {}
    sign = 1.0 if cfg.case_id in (Case.I, Case.III) else -1.0
    if theta_inf is None:
        theta_inf = theta_minus_inf_constraint(eigenset)
    rinv = 1.0 / cfg.r
    p_rinv = 1.0 + 0.0j
    p_zero = 1.0 + 0.0j
    p_r = 1.0 + 0.0j
    for z, zb in zip(eigenset.zeros_t11, eigenset.zeros_t22):
        p_rinv *= (rinv - z) / (rinv - zb)
        p_zero *= zb / z
        p_r *= (cfg.r - zb) / (cfg.r - z)
    return {
        "t11_at_rinv": abs(p_rinv - sign),
        "t22_at_zero": abs(theta_inf * p_zero - 1.0),
        "t22_at_r": abs(theta_inf * p_r - sign),
    }


def eigenvalues_case1(cfg: CaseConfig, eta1: float, J: int = 2) -> EigenSet:
    """One quartet on |zeta - 1/r| = q0/r, parametrized by the real angle eta1."""
    if cfg.case_id is not Case.I:
        raise DomainError("eigenvalues_case1 requires a case I configuration")
    if J != 2:
        raise Inadmissible(f"case I admits only J = 2 (one quartet); J = {J} requested")
    bound = math.atan2(cfg.r, cfg.q0)
    if not abs(math.pi - eta1) < bound:
        raise Inadmissible(
            f"eta1 = {eta1} violates |pi - eta1| < arctan(r/q0) = {bound:.6f}")
    zb1 = (1.0 + cfg.q0 * cmath.exp(1j * eta1)) / cfg.r
    z1 = cfg.r / (1.0 + cfg.q0 * cmath.exp(-1j * eta1))
    if abs(zeta_bar(cfg, z1) - zb1) > 1e-10 * max(1.0, abs(zb1)):
        raise Inadmissible("zeta_bar pairing failed for the constructed quartet")
    if abs(abs(zb1 - 1.0 / cfg.r) - cfg.q0 / cfg.r) > 1e-12:
        raise Inadmissible("zbar_1 is off the circle |zeta - 1/r| = q0/r")
    if classify(cfg, zb1).tag is not Region.DPlus or classify(cfg, z1).tag is not Region.DMinus:
        raise Inadmissible("quartet landed outside its required regions")
    return EigenSet(cfg.case_id, (Quartet(z1, z1.conjugate(), zb1, zb1.conjugate()),), ())


@dataclass(frozen=True)
class FeasibilityScan:
    """Result of the no-soliton grid scan: min over candidates of the violation."""

    min_violation: float
    argmin: complex
    family: str
    candidates: int


def case2_feasibility_scan(cfg: CaseConfig, samples: int = 10_000,
                           seed: int = 0) -> FeasibilityScan:
    """Scan the three structured spectra of case II against its trace limits.

    Families scanned: a single real pair (J=1), one complex quartet (J=2),
    and two involution-linked real pairs (J=2).  The violation of a
    candidate is the distance of the trace-formula limits from their
    required values; strict positivity over the grid means no admissible
    discrete spectrum exists.
    """
    if cfg.case_id is not Case.II:
        raise DomainError("the feasibility scan is defined for case II")
    rng = np.random.default_rng(seed)
    r, q0 = cfg.r, cfg.q0
    rinv = 1.0 / r

    def ratio_at(point, z, zb):
        return (point - z) / (point - zb)

    best = (math.inf, 0.0 + 0.0j, "")
    n_each = max(1, samples // 3)
    total = 0

    # J = 1: one real zero zeta_hat in D-, partner zeta_bar_hat = involution image.
    reals = np.concatenate([
        rng.uniform(-6.0, -1.0 - 1e-3, n_each // 3),
        rng.uniform(rinv * (1 + 1e-6), 0.999, n_each // 3),
        rng.uniform(r + q0 + 1e-3, 8.0, n_each - 2 * (n_each // 3)),
    ])
    for zh in reals:
        if classify(cfg, zh).tag is not Region.DMinus:
            continue
        total += 1
        zbh = zeta_bar(cfg, zh)
        v1 = abs(ratio_at(rinv, zh, zbh) + 1.0)
        theta = zh / zbh
        v2 = abs(theta * ratio_at(r, zbh, zh) + 1.0)
        v = max(v1, v2)
        if v < best[0]:
            best = (v, complex(zh), "J2=1 real pair")

    # J = 2 with one quartet: the 1/r limit is a positive modulus ratio, so
    # its distance from -1 is at least 1 for every complex candidate.
    for _ in range(n_each):
        zeta = complex(rng.uniform(-4, 4), rng.uniform(-4, 4))
        if classify(cfg, zeta).tag is not Region.DMinus or abs(zeta.imag) < 1e-3:
            continue
        total += 1
        zb = zeta_bar(cfg, zeta)
        lhs = abs(rinv - zeta) ** 2 / abs(rinv - zb) ** 2
        v = abs(lhs + 1.0)
        if v < best[0]:
            best = (v, zeta, "J1=1 quartet")

    # J = 2 with two real pairs linked by zeta_hat_2 = 1/zeta_bar_hat_1.
    for zh1 in reals[: n_each]:
        if classify(cfg, zh1).tag is not Region.DMinus:
            continue
        zbh1 = zeta_bar(cfg, zh1)
        if abs(zbh1) < 1e-12:
            continue
        zh2 = 1.0 / zbh1
        if classify(cfg, zh2).tag is not Region.DMinus:
            continue
        total += 1
        zbh2 = zeta_bar(cfg, zh2)
        prod = ratio_at(rinv, zh1, zbh1) * ratio_at(rinv, zh2, zbh2)
        theta = (zh1 / zbh1) * (zh2 / zbh2)
        v = max(abs(prod + 1.0),
                abs(theta * ratio_at(r, zbh1, zh1) * ratio_at(r, zbh2, zh2) + 1.0))
        if v < best[0]:
            best = (v, complex(zh1), "J2=2 real pairs")

    return FeasibilityScan(best[0], best[1], best[2], total)


def eigenvalues_case2(cfg: CaseConfig, J: int = 2, scan_samples: int = 3000,
                      seed: int = 0) -> EigenSet:
    """Case II has no admissible discrete spectrum; returns the empty set."""
    if cfg.case_id is not Case.II:
        raise DomainError("eigenvalues_case2 requires a case II configuration")
    if J not in (0, 1, 2):
        raise Inadmissible(f"J = {J} not covered by the admissibility analysis")
    if J > 0:
        scan = case2_feasibility_scan(cfg, samples=scan_samples, seed=seed)
        if not scan.min_violation > 0.0:
            raise Inadmissible("feasibility scan unexpectedly reached zero violation")
    return empty_eigenset(cfg)


def eigenvalues_case3(cfg: CaseConfig, zeta_hat_1: float, J: int = 2,
                      check: bool = True) -> EigenSet:
    """Two real pairs {zh1, zbar(zh1)} and {1/zbar(zh1), 1/zh1} for case III."""
    if cfg.case_id is not Case.III:
        raise DomainError("eigenvalues_case3 requires a case III configuration")
    if J != 2:
        raise Inadmissible(f"case III admits only J = 2 (two real pairs); J = {J} requested")
    zh1 = complex(zeta_hat_1)
    if abs(zh1.imag) > 1e-12:
        raise Inadmissible("zeta_hat_1 must be real")
    for bp in cfg.branch_points:
        if abs(zh1 - bp) < SINGULAR_GUARD * 1e6:
            raise Inadmissible(f"zeta_hat_1 = {zeta_hat_1} is a branch point")
    if classify(cfg, zh1).tag is not Region.DMinus:
        raise Inadmissible(f"zeta_hat_1 = {zeta_hat_1} is not in D- (continuum or D+)")
    zbh1 = zeta_bar(cfg, zh1)
    zh2 = 1.0 / zbh1
    zbh2 = zeta_bar(cfg, zh2)
    eigenset = EigenSet(cfg.case_id, (), (RealPair(zh1, zbh1), RealPair(zh2, zbh2)))
    for p in eigenset.pairs:
        if classify(cfg, p.zeta).tag is not Region.DMinus:
            raise Inadmissible(f"derived eigenvalue {p.zeta} left D-")
        if classify(cfg, p.zbar).tag is not Region.DPlus:
            raise Inadmissible(f"derived eigenvalue {p.zbar} left D+")
    if check:
        theta_inf = theta_minus_inf_from_system(cfg, eigenset, unit_norming(cfg, eigenset))
        res = admissibility_residuals(cfg, eigenset, theta_inf)
        worst = max(res.values())
        if worst > CONSTRAINT_TOL:
            raise Inadmissible(f"trace-formula constraints violated: {res}")
    return eigenset


def eigenvalues_case4(cfg: CaseConfig, J: int = 1) -> EigenSet:
    """The single real pair zbar_1 = (1-q0)/r, zeta_1 = r/(1-q0) of case IV."""
    if cfg.case_id is not Case.IV:
        raise DomainError("eigenvalues_case4 requires a case IV configuration")
    if J != 1:
        raise Inadmissible(f"case IV admits only J = 1 (one real pair); J = {J} requested")
    zb1 = complex((1.0 - cfg.q0) / cfg.r)
    z1 = complex(cfg.r / (1.0 - cfg.q0))
    if abs(zeta_bar(cfg, z1) - zb1) > 1e-12:
        raise Inadmissible("zeta_bar pairing failed for the case IV pair")
    return EigenSet(cfg.case_id, (), (RealPair(z1, zb1),))


@dataclass(frozen=True)
class NormingData:
    """Norming constants at t = 0 plus their case time factors.

    cbar0 is aligned with EigenSet.zeros_t22; C_j always follows from the
    symmetry C_j = -q_plus(t)**2 / (zbar_j - r)**2 * Cbar_j.
    """

    cfg: CaseConfig
    eigenset: EigenSet
    cbar0: tuple[complex, ...]
    params: dict

    def cbar(self, j: int, t: float) -> complex:
        zb = self.eigenset.zeros_t22[j]
        return self.cbar0[j] * cmath.exp(-1j * (self.cfg.rotation + gamma(self.cfg, zb)) * t)

    def c(self, j: int, t: float) -> complex:
        zb = self.eigenset.zeros_t22[j]
        qp = self.cfg.q_plus(t)
        return -(qp * qp) / (zb - self.cfg.r) ** 2 * self.cbar(j, t)


def time_factors(cfg: CaseConfig, zeta: complex, t: float) -> tuple[complex, complex]:
    """Evolution factors for (C_j, Cbar_j); t11 and t22 are time invariants."""
    phase = (cfg.rotation + gamma(cfg, zeta)) * t
    return cmath.exp(1j * phase), cmath.exp(-1j * phase)


def norming_case1(cfg: CaseConfig, eigenset: EigenSet, kappa1: float,
                  thbar1: float, thbar2: float, t: float = 0.0) -> NormingData:
    """Quartet norming constants pinned to the nonlocal reduction.

    The pair below is the unique choice (given Cbar_1) for which the
    reconstructed field satisfies r_n = sigma * conj(q_{-n}) at every time;
    it requires thbar2 = thbar1 (mod 2pi) and carries lam**-3 in Cbar_2
    together with a fixed relative phase of pi between the two constants,
    split symmetrically so that thbar1 = thbar2 = 0 yields the symmetric
    dark-dark profile at theta = 0.  lam(zbar_1) is real and positive on
    the admissible circle |zeta - 1/r| = q0/r.
    """
    if kappa1 == 0.0:
        raise DomainError("kappa1 must be nonzero")
    if eigenset.J1 != 1 or eigenset.J2 != 0:
        raise DomainError("case I norming needs exactly one quartet")
    qt = eigenset.quartets[0]
    zb1, z1 = qt.zbar, qt.zeta
    if abs(zb1.imag) < 1e-12:
        raise DegenerateEigenvalues("zbar_1 is real; the quartet collapses")
    lam_b = point_from_zeta(cfg, zb1).lam
    zb2 = zb1.conjugate()
    cbar1 = (kappa1 * lam_b ** 3 * (zb1 - z1) * (zb1 - z1.conjugate())
             / (zb1 - zb2) * cmath.exp(1j * (thbar1 - math.pi / 2.0)))
    cbar2 = ((1.0 / kappa1) * lam_b ** -3 * (zb2 - z1) * (zb2 - z1.conjugate())
             / (zb2 - zb1) * cmath.exp(1j * (thbar2 + math.pi / 2.0)))
    # t enters through cbar()/c(); the stored values are the t = 0 residues.
    del t
    return NormingData(cfg, eigenset, (cbar1, cbar2),
                       {"kappa1": kappa1, "thbar1": thbar1, "thbar2": thbar2})


def norming_case4(cfg: CaseConfig, eigenset: EigenSet, thbar1: float,
                  t: float = 0.0) -> NormingData:
    """Single-pair norming constant pinned to the nonlocal reduction.

    The modulus lam**-1 * |zbar_1 - zeta_1| is forced (it centers the
    soliton at the reduction's mirror point); the phase thbar1 is the one
    free parameter of the family.  The profile is bright or dark according
    to theta_plus + thbar1, with an amplitude singularity on the member
    theta_plus + thbar1 = 0 (mod 2pi).
    """
    if eigenset.J1 != 0 or eigenset.J2 != 1:
        raise DomainError("case IV norming needs exactly one real pair")
    pair = eigenset.pairs[0]
    zb1, z1 = pair.zbar, pair.zeta
    lam_b = point_from_zeta(cfg, zb1).lam
    cbar1 = lam_b ** -1 * (zb1 - z1) * cmath.exp(1j * thbar1)
    del t  # t enters through cbar()/c()
    return NormingData(cfg, eigenset, (cbar1,), {"thbar1": thbar1})


def unit_norming(cfg: CaseConfig, eigenset: EigenSet) -> NormingData:
    """Placeholder constants (position-only) for limit computations."""
    return NormingData(cfg, eigenset, (1.0 + 0.0j,) * eigenset.J, {})


@dataclass(frozen=True)
class ReflectionlessSystem:
    """Dense system B X = Y of dimension 4J+1 at one lattice site and time.

    Unknown ordering: N1(zeta_j), N2(zeta_j), Nbar1(zbar_j), Nbar2(zbar_j),
    1/Theta_n.
    """

    B: np.ndarray
    Y: np.ndarray
    n: int
    t: float
    row_coeffs: tuple[complex, ...]  # multipliers of N1(zeta_j) in the field sum

    @property
    def labels(self) -> tuple[str, ...]:
        J = (self.B.shape[0] - 1) // 4
        out = [f"N1(zeta_{j + 1})" for j in range(J)]
        out += [f"N2(zeta_{j + 1})" for j in range(J)]
        out += [f"Nbar1(zbar_{j + 1})" for j in range(J)]
        out += [f"Nbar2(zbar_{j + 1})" for j in range(J)]
        out.append("1/Theta_n")
        return tuple(out)


def build_system(cfg: CaseConfig, eigenset: EigenSet, norming: NormingData,
                 n: int, t: float) -> ReflectionlessSystem:
    """Assemble the (4J+1)-dimensional reflectionless system at site n, time t."""
    zs = eigenset.zeros_t11
    zbs = eigenset.zeros_t22
    J = len(zs)
    r = cfg.r
    rinv = 1.0 / r
    cpow = []
    cbarpow = []
    for j in range(J):
        cpow.append(norming.c(j, t) * lam_squared(cfg, zs[j]) ** (-n))
        cbarpow.append(norming.cbar(j, t) * lam_squared(cfg, zbs[j]) ** n)
    dim = 4 * J + 1
    B = np.eye(dim, dtype=complex)
    Y = np.zeros(dim, dtype=complex)
    qp = cfg.q_plus(t)
    rp = cfg.r_plus(t)
    for i in range(J):
        Y[i] = r - 1.0 / zs[i]
        Y[3 * J + i] = zbs[i] - r
        B[J + i, dim - 1] = rp
        B[2 * J + i, dim - 1] = -qp
        for j in range(J):
            kbar = (zs[i] - rinv) * cbarpow[j] / ((zbs[j] - rinv) * (zs[i] - zbs[j]))
            B[i, 2 * J + j] = -kbar
            B[J + i, 3 * J + j] = -kbar
            k = (zbs[i] - r) * cpow[j] / ((zs[j] - r) * (zbs[i] - zs[j]))
            B[2 * J + i, j] = -k
            B[3 * J + i, J + j] = -k
    row = []
    for j in range(J):
        lj = cpow[j] / (zs[j] * (zs[j] - r))
        B[dim - 1, J + j] = lj
        row.append(lj)
    Y[dim - 1] = 1.0
    return ReflectionlessSystem(B, Y, n, t, tuple(row))


def _solve_system(system: ReflectionlessSystem) -> np.ndarray:
    """Solve B X = Y with a backward-error check instead of a raw det test.

    The system is badly scaled but well posed at large |n| (lam**(2n)
    entries), so singularity is judged by the solve's backward error and,
    downstream, by divergence of Theta_n = 1/X[-1].
    """
    B = system.B
    if not np.all(np.isfinite(B)):
        raise SingularSolution(f"system entries overflowed at n={system.n}, t={system.t}")
    try:
        X = np.linalg.solve(B, system.Y)
    except np.linalg.LinAlgError as exc:
        raise SingularSolution(f"exactly singular system at n={system.n}, t={system.t}") from exc
    if not np.all(np.isfinite(X)):
        raise SingularSolution(f"solution overflowed at n={system.n}, t={system.t}")
    backward = np.max(np.abs(B @ X - system.Y))
    scale = np.max(np.abs(B)) * max(np.max(np.abs(X)), 1e-300) + np.max(np.abs(system.Y))
    if backward > 1e-8 * scale:
        raise SingularSolution(f"solve backward error {backward:.2e} at n={system.n}, t={system.t}")
    return X


def reconstruct(cfg: CaseConfig, eigenset: EigenSet, norming: NormingData | None,
                n: int, t: float) -> complex:
    """Reflectionless potential q_n(t); equals q_plus(t) for an empty spectrum."""
    q, _r = reconstruct_pair(cfg, eigenset, norming, n, t)
    return q


def reconstruct_pair(cfg: CaseConfig, eigenset: EigenSet,
                     norming: NormingData | None, n: int,
                     t: float) -> tuple[complex, complex]:
    """Both reconstructed fields (q_n, r_n) from one solve.

    r_n follows from the large-argument limit of the second components and
    must coincide with sigma * conj(q_{-n}) for admissible data; the pair
    is exposed so that the reduction can be verified independently.
    """
    if eigenset.is_empty():
        return cfg.q_plus(t), cfg.r_plus(t)
    if norming is None:
        raise DomainError("nonempty eigenset requires norming data")
    system = build_system(cfg, eigenset, norming, n, t)
    X = _solve_system(system)
    theta_inv = X[-1]
    if abs(theta_inv) < DET_GUARD * max(1.0, float(np.max(np.abs(X)))):
        raise SingularSolution(f"Theta_n diverges at n={n}, t={t}")
    acc = 0.0 + 0.0j
    for j, lj in enumerate(system.row_coeffs):
        acc += lj * X[j]
    qn = cfg.q_plus(t) + cfg.r * acc / theta_inv
    zbs = eigenset.zeros_t22
    J = len(zbs)
    acc_r = 0.0 + 0.0j
    for j in range(J):
        cbarpow = norming.cbar(j, t) * lam_squared(cfg, zbs[j]) ** n
        acc_r += cbarpow / (zbs[j] - 1.0 / cfg.r) * X[3 * J + j]
    rn = cfg.r_plus(t) - acc_r / theta_inv
    if not (np.isfinite(qn.real) and np.isfinite(qn.imag)):
        raise SingularSolution(f"amplitude diverges at n={n}, t={t}")
    return complex(qn), complex(rn)


def make_evaluator(cfg: CaseConfig, eigenset: EigenSet, norming: NormingData | None):
    """Closure (n, t) -> q_n(t) over the reflectionless reconstruction."""

    def evaluator(n: int, t: float) -> complex:
        return reconstruct(cfg, eigenset, norming, n, t)

    return evaluator


@dataclass(frozen=True)
class SingularityScan:
    """Minimum of |1/Theta_n| over a refined (n, t) sweep.

    A vanishing minimum marks a real-time amplitude pole of the family
    member (Theta_n -> infinity somewhere on the lattice).
    """

    min_theta_inv: float
    at_site: int
    at_time: float
    singular: bool


def singularity_scan(cfg: CaseConfig, eigenset: EigenSet, norming: NormingData,
                     n_range: tuple[int, int] = (-25, 25),
                     t_span: tuple[float, float] = (-10.0, 10.0),
                     coarse_dt: float = 0.1, flag_below: float = 1e-6) -> SingularityScan:
    """Locate the deepest dip of |1/Theta_n| and refine it in time."""

    def theta_inv_at(n, t):
        system = build_system(cfg, eigenset, norming, n, t)
        try:
            X = _solve_system(system)
        except SingularSolution:
            return 0.0
        return float(abs(X[-1]))

    best = (math.inf, 0, 0.0)
    for n in range(n_range[0], n_range[1] + 1):
        t = t_span[0]
        while t <= t_span[1]:
            v = theta_inv_at(n, t)
            if v < best[0]:
                best = (v, n, t)
            t += coarse_dt
    _, n_star, t_star = best
    lo, hi = t_star - coarse_dt, t_star + coarse_dt
    for _ in range(80):
        ts = np.linspace(lo, hi, 7)
        vals = [theta_inv_at(n_star, float(x)) for x in ts]
        i = int(np.argmin(vals))
        lo, hi = float(ts[max(0, i - 1)]), float(ts[min(6, i + 1)])
    t_ref = 0.5 * (lo + hi)
    v_ref = min(best[0], theta_inv_at(n_star, t_ref))
    return SingularityScan(v_ref, n_star, t_ref, v_ref < flag_below)


def soliton_closed_form_case4(cfg: CaseConfig, thbar1: float, n: int, t: float) -> complex:
    """First-order closed form for case IV, independent of the linear solve.

    Uses the explicit elimination of the 5x5 system: with v_n**2 = R1*R2,
    1/Theta_n and N1(zeta_1) have rational closed forms, and
    q_n = q_plus + r*R3*N1/( 1/Theta_n ).
    """
    if cfg.case_id is not Case.IV:
        raise DomainError("closed form defined for case IV only")
    eigenset = eigenvalues_case4(cfg)
    pair = eigenset.pairs[0]
    zb1, z1 = pair.zbar, pair.zeta
    norming = norming_case4(cfg, eigenset, thbar1)
    cbar1 = norming.cbar(0, t)
    c1 = norming.c(0, t)
    r = cfg.r
    qp = cfg.q_plus(t)
    rp = cfg.r_plus(t)
    lam_b = point_from_zeta(cfg, zb1).lam
    lam2n_b = lam_squared(cfg, zb1) ** n
    v = qp * cbar1 * lam_b * lam2n_b / (zb1 * zb1 - 2.0 * r * zb1 + 1.0)
    v2 = v * v
    r1 = -(z1 - 1.0 / r) * cbar1 * lam2n_b / ((zb1 - 1.0 / r) * (z1 - zb1))
    r3 = c1 * lam_squared(cfg, z1) ** (-n) / (z1 * (z1 - r))
    den1 = v2 - 1.0
    den2 = v2 + r3 * rp - 1.0
    if abs(den1) < DET_GUARD or abs(den2) < DET_GUARD:
        raise SingularSolution(f"closed-form denominator vanishes at n={n}, t={t}")
    theta_inv = (v2 * zb1 / z1 - 1.0) / den2
    if abs(theta_inv) < DET_GUARD:
        raise SingularSolution(f"Theta_n diverges at n={n}, t={t}")
    n1 = (cfg.q0 ** 2 * zb1 / (r * zb1 - 1.0) + qp * r1 * theta_inv) / den1
    return complex(qp + r * r3 * n1 / theta_inv)


def theta_minus_inf_from_system(cfg: CaseConfig, eigenset: EigenSet,
                                norming: NormingData, n_large: int = 200,
                                t: float = 0.0) -> complex:
    """Theta_n from the solved system at a deeply negative site.

    The site is capped so that the lam**(2n) system entries stay finite in
    double precision; the limit is machine-converged long before the cap.
    """
    if eigenset.is_empty():
        return 1.0 + 0.0j
    max_log = 1e-6
    for z in (*eigenset.zeros_t11, *eigenset.zeros_t22):
        max_log = max(max_log, abs(math.log10(abs(lam_squared(cfg, z)))))
    n_eff = min(n_large, max(8, int(140.0 / max_log)))
    system = build_system(cfg, eigenset, norming, -n_eff, t)
    X = _solve_system(system)
    if abs(X[-1]) < DET_GUARD:
        raise SingularSolution("Theta_n diverged in the minus-infinity limit")
    return complex(1.0 / X[-1])
