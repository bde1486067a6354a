"""Exact Burnside-ring computations for wreath products.

Computes tables of marks, the combinatorial subring of A(G wr Sigma_n) indexed
by decorated partitions, total power operations, parks characters, induced
transfer/restriction maps, Frobenius-Wielandt maps, and norms, all with exact
integer/rational arithmetic and cross-checked against brute-force group-action
oracles.
"""

from .burnside import (AdditiveMapMatrix, BurnsideElement, MarksVector, chi,
                       from_marks, matrix_of_additive_map, table_of_marks)
from .errors import (CapExceeded, FWIntegralityError, GroupSpecError, NotInImage,
                     WreathmarksError)
from .groups import (ConjugacyClassTable, GroupHom, PermGroup, SubgroupRef,
                     cyclic_group, double_cosets, group_from_spec,
                     monomial_representation, normalizer, subgroup_conjugacy_classes,
                     symmetric_group, wreath_product)
from .partitions import Composition, DecoratedPartition
from .wreath_power import (AAElement, ParksVector, alpha, beta, beta_pullback,
                           from_parks, hull, parks_char, parks_power_char, parts_for,
                           power_op, r_map)

__version__ = "0.1.0"

__all__ = [
    "AAElement", "AdditiveMapMatrix", "BurnsideElement", "CapExceeded", "Composition",
    "ConjugacyClassTable", "DecoratedPartition", "FWIntegralityError", "GroupHom",
    "GroupSpecError", "MarksVector", "NotInImage", "ParksVector", "PermGroup",
    "SubgroupRef", "WreathmarksError", "alpha", "beta", "beta_pullback", "chi",
    "cyclic_group", "double_cosets", "from_marks", "from_parks", "group_from_spec",
    "hull", "matrix_of_additive_map", "monomial_representation", "normalizer",
    "parks_char", "parks_power_char", "parts_for", "power_op", "r_map",
    "subgroup_conjugacy_classes", "symmetric_group", "table_of_marks", "wreath_product",
]
