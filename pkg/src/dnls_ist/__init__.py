"""Inverse scattering transform for the nonlocal PT-symmetric AL lattice."""

from .errors import (BlowupDetected, ConfigError, DegenerateEigenvalues,
                     DivisionNearZero, DomainError, GridMismatch, Inadmissible,
                     IstError, NearBranchPoint, SingularPoint, SingularProduct,
                     SingularSolution, SingularTransfer)
from .spectral import (Case, CaseConfig, Region, RegionTag, SpectralPoint,
                       classify, gamma, lam_squared, make_case,
                       point_from_zeta, zeta_bar)
from .lattice import (PotentialWindow, ThetaProduct, al_rhs, background_field,
                      partner, theta_products)
from .ist import (EigenSet, NormingData, Quartet, RealPair,
                  ReflectionlessSystem, build_system, case2_feasibility_scan,
                  eigenvalues_case1, eigenvalues_case2, eigenvalues_case3,
                  eigenvalues_case4, empty_eigenset, make_evaluator,
                  norming_case1, norming_case4, reconstruct, reconstruct_pair,
                  singularity_scan, soliton_closed_form_case4,
                  theta_minus_inf_constraint, theta_minus_inf_from_system,
                  time_factors, unit_norming)
from .scattering import (AsymptoticReport, Coefficients, ColumnKind,
                         EigenfunctionColumn, ScatteringReport, SymmetryReport,
                         asymptotic_checks, check_symmetries, continuum_samples,
                         jost, reflection, scattering_coefficients,
                         scattering_report, trace_formula, wronskian)
from .verify import (ResidualReport, Trajectory, compare, equation_residual,
                     simulate)

__version__ = "0.1.0"
