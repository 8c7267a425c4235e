"""Picard numbers and period-field degrees of complex tori with algebraic periods."""

__version__ = "0.1.0"

from .analysis import (  # noqa: E402
    AnalysisReport,
    classify,
    dij_bounds,
    end_rank,
    extension_degree,
    hom_rank,
    ns_basis,
    picard_g2_oracle,
    picard_number,
)
from .numberfield import FieldElement, NumberField, embed, field_new, generated_subfield_dimension  # noqa: E402
from .torus import (  # noqa: E402
    NSClass,
    PeriodMatrix,
    build_hom_system,
    build_T,
    direct_sum,
    dual,
    period_matrix_new,
    unimodular_transform,
)

__all__ = [
    "AnalysisReport",
    "FieldElement",
    "NSClass",
    "NumberField",
    "PeriodMatrix",
    "build_T",
    "build_hom_system",
    "classify",
    "dij_bounds",
    "direct_sum",
    "dual",
    "embed",
    "end_rank",
    "extension_degree",
    "field_new",
    "generated_subfield_dimension",
    "hom_rank",
    "ns_basis",
    "period_matrix_new",
    "picard_g2_oracle",
    "picard_number",
    "unimodular_transform",
]
