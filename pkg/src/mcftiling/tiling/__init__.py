"""Tilings of boards by stacked squares, dominoes and bars."""
from .conditions import (
    KINDS,
    HeightConditions,
    Placement,
    Tiling,
    check_mixed,
    inadmissibility,
    mixed_case,
    plain_violations,
)
from .counts import count_B, count_C, count_circular, count_fast, count_mixed
from .degree import count_degree_m, enumerate_degree_m
from .enumeration import (
    DEFAULT_BUDGET,
    enumerate_circular,
    enumerate_mixed,
    enumerate_mixed_candidates,
    enumerate_plain,
    enumerate_prefixed,
    enumerate_shifted,
    enumeration_budget,
)

__all__ = [
    "KINDS",
    "HeightConditions",
    "Placement",
    "Tiling",
    "check_mixed",
    "inadmissibility",
    "mixed_case",
    "plain_violations",
    "count_fast",
    "count_B",
    "count_C",
    "count_circular",
    "count_mixed",
    "count_degree_m",
    "enumerate_degree_m",
    "DEFAULT_BUDGET",
    "enumeration_budget",
    "enumerate_plain",
    "enumerate_prefixed",
    "enumerate_shifted",
    "enumerate_circular",
    "enumerate_mixed",
    "enumerate_mixed_candidates",
]
