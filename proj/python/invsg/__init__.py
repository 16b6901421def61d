"""Inverse semigroups: finite carriers, symbolic families and property suites."""

from ._core import (
    Carrier,
    Family,
    InvalidInput,
    LimitExceeded,
    ValidationError,
    canonical_form,
    check,
    classify,
    coset_monoid,
    enumerate_inverse_subsemigroups,
    family,
    isomorphic,
    read_subject_file,
    small_group_names,
    suite_names,
    symmetric_inverse_monoid,
)

__all__ = [
    "Carrier",
    "Family",
    "InvalidInput",
    "LimitExceeded",
    "ValidationError",
    "canonical_form",
    "check",
    "classify",
    "coset_monoid",
    "enumerate_inverse_subsemigroups",
    "family",
    "isomorphic",
    "read_subject_file",
    "small_group_names",
    "suite_names",
    "symmetric_inverse_monoid",
]
