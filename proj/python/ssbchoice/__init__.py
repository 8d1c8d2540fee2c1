"""Exact skew-symmetric bilinear aggregation and maximal lotteries."""

from ._core import (
    EnumerationBoundExceeded,
    ParseError,
    Profile,
    aggregate,
    audit_domain,
    budget,
    check_iia,
    cycle_witness,
    evaluate,
    maximal_lottery,
    maximal_set,
    parse_ballots,
)

__all__ = [
    "EnumerationBoundExceeded",
    "ParseError",
    "Profile",
    "aggregate",
    "audit_domain",
    "budget",
    "check_iia",
    "cycle_witness",
    "evaluate",
    "maximal_lottery",
    "maximal_set",
    "parse_ballots",
]
