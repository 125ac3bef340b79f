"""sutor: exact torsion invariants of balanced sutured 3-manifolds.

Computes the determinant of the abelianized Fox-derivative matrix of a group
presentation together with R_- image words, normalizes it up to +-monomial,
and derives support-polytope observables from it.
"""

__version__ = "0.1.0"

from .words import Generator, Word, free_reduce, concat, invert, parse_word, render
from .abelian import (
    AbelianGroup,
    AbElement,
    INFINITE,
    IntMatrix,
    abelianize,
    order,
    quotient,
    smith_normal_form,
)
from .groupring import (
    GRMatrix,
    GroupRingElement,
    augmentation,
    determinant,
    exact_div,
    external_product,
    normalize,
    push_forward,
    sim_equal,
    sum_of_all_elements,
)
from .fox import fox_derivative, fox_matrix
from .engine import (
    SuturedInput,
    TorsionResult,
    augmentation_order_check,
    evaluation_check,
    nielsen_move,
    tietze_add_generator,
    torsion,
    validate,
)
from .polytope import (
    Support,
    difference_polytope,
    disk_obstruction_report,
    extremal_part,
    is_centrally_symmetric,
    support,
    vertices,
    width,
)
