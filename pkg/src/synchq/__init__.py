"""Exact verification of the finite Jacobi identity and its combinatorial
proof through synchronized partitions."""

from .involutions import phi, phi_inverse, tau, tau_case
from .partitions import DistinctPartition, InvalidPartition, enumerate_distinct
from .qpoly import ArithmeticOverflow, QPoly, ZQLaurent
from .qseries import (IdentityViolation, finite_jacobi_lhs, finite_jacobi_rhs, gauss_binomial,
                      jacobi_truncated_series, macmahon_lhs, macmahon_rhs, pochhammer,
                      square_jacobi_rhs, theorem1_proof_replay)
from .syncpart import (RootedSyncPartition, SyncPartition, enumerate_R, enumerate_S, gf_R,
                       gf_S_discrepancy, render)
from .verifier import VerificationReport, run_check, run_grid

__version__ = "0.1.0"
