"""OEIS A345973 by three formulas, plus the bicolored trees it counts."""

from .partitions import partitions_all, partitions_min2, to_frequency
from .sequence import SequenceTable, SeriesCoeffs, a, a_eq1, a_eq3, a_gf, terms
from .trees import (
    EdgeColor,
    Tree,
    count_no_gray,
    deserialize,
    enumerate_naive,
    enumerate_structural,
    is_valid,
    serialize,
    size,
    to_dot,
    violations,
)

__version__ = "0.1.0"
