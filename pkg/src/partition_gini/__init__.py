"""Exact Gini index of integer partitions, its generating function, and
dominance-lattice width bounds."""

from .dominance import (
    Comparison,
    DominancePoset,
    build_poset,
    compare,
    covers,
    is_antichain,
)
from .errors import BudgetExceeded, PartitionError, WeightMismatch
from .gini import (
    e2_direct,
    e2_lemma1,
    gini,
    gini_via_integral,
    line_of_equality,
    lorenz,
    normalized_gini,
    normalized_gini_euclidean,
)
from .partitions import (
    Partition,
    conjugate,
    count_partitions,
    enumerate_partitions,
    format_partition,
    from_repeated_form,
    make_partition,
    padded_parts,
    parse_partition,
    to_repeated_form,
)
from .series import (
    GiniProfile,
    QPolynomial,
    expand_product,
    gini_profile,
    level_set_max,
    profile_direct,
)
from .width import WidthReport, early_expression, exact_width, max_level_set, width_report

__all__ = [name for name in dir() if not name.startswith("_")]
