"""Exact knot-polynomial tools for testing the Jones gap conjecture on
quasi-alternating links: Laurent polynomials, planar diagrams, 3-braids,
Montesinos links and quasi-alternating certificates."""

from __future__ import annotations

from .braid import (
    BaldwinNormalForm,
    BraidWord,
    baldwin_qa,
    birman_jones,
    burau,
    closure,
    expand_normal_form,
    full_twist_check,
    torus_2n_jones,
)
from .diagram import (
    PlanarDiagram,
    bracket,
    bracket_skein,
    bracket_state_sum,
    determinant,
    jones,
    mirror,
    orient,
    smooth,
    writhe,
)
from .laurent import GapReport, LaurentPoly, eval_gaussian, gap_report
from .montesinos import (
    ContinuedFraction,
    MontesinosData,
    continued_fraction,
    determinant_formula,
    equivalent,
    montesinos_qa,
    standardize,
    t_sequence,
    to_diagram,
)
from .quasialt import (
    Inconclusive,
    QACertificate,
    TwistSpec,
    breadth_check,
    conjecture_check,
    qa_search,
    twist_bracket,
    twist_diagram,
)

__version__ = "0.1.0"
