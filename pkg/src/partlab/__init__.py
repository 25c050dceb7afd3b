"""Exact enumeration, bijections and q-series checks for k-regular partition identities."""

from .bijections import (
    BijectionTrace,
    DomainError,
    alpha_split,
    beta_regroup,
    glaisher_to_distinct,
    glaisher_to_regular,
    phi,
    phi_inv,
    psi,
    psi_inv,
)
from .classes import ClassSpec, Family, ScaleBoundError, all_partitions, count, enumerate_class, is_member
from .partition import Partition, format_partition, from_parts, parse_partition, union
from .qseries import TruncatedSeries, gf_A, gf_B, gf_Bprime, gf_C, poch, verify_telescoping
from .verification import VerificationReport, ek_threshold_experiment, oracle_partition_count, verify_theorem

__version__ = "0.1.0"
