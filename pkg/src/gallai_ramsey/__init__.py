"""Gallai-Ramsey numbers for monochromatic K4PLUS or K3: constructions, detectors, partitions, search."""

from .coloring import (K2, K3, K4, K4PLUS, EdgeColoring, Pattern, TargetProfile, find_any_violation,
                       find_mono_pattern, find_rainbow_triangle, is_gallai, naive_mono_oracle,
                       new_complete)
from .construct import BlowupSpec, blow_up, build_extremal, q1, q2, q3, verify_extremal
from .formulas import f, gr_value, ramsey_constant, verify_inequalities
from .partition import classify_parts, coarsen_to_two, find_gallai_partition, reduce
from .search import SearchTask, prove_upper_bound, search_sharpness

__version__ = "0.1.0"
