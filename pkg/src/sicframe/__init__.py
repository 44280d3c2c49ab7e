"""Heisenberg-Weyl orbits, SIC frame potentials, and Fubini-Study averages."""

from .errors import (
    CountError,
    DimensionError,
    NormError,
    NotTabulatedError,
    SicframeError,
    UnsupportedDimensionError,
    UnsupportedError,
    UnsupportedSubspaceError,
)
from .numcore import (
    Cyclo3,
    as_unit_vector,
    fs_moment,
    inner,
    rng_stream,
    sample_fs,
    sample_fs_batch,
)
from .heisenberg import (
    CliffordElement,
    HWGroup,
    displacement,
    hw_group,
    orbit,
    parity_operator,
    zauner7_operator,
)
from .framepot import (
    FrameReport,
    f_general,
    f_H_batch,
    f_H_direct,
    f_H_fast,
    f_H_gradient,
    frame_potential,
    frame_report,
)
from .subspace import (
    SubspaceEmbedding,
    build_parity_subspaces,
    build_zauner7_subspaces,
    embed,
    embedding_for_label,
    sample_subspace,
    sample_subspace_batch,
)
from .averages import (
    AverageResult,
    McEstimate,
    analytic_avg_f,
    analytic_avg_fH,
    analytic_avg_fH_subspace,
    exact_avg_fH,
    mc_avg,
    mc_avg_f,
    monomial_pattern_counts,
)
from .sicsearch import SearchConfig, SearchResult, search, verify_sic

__version__ = "0.1.0"

__all__ = [
    "AverageResult",
    "CliffordElement",
    "CountError",
    "Cyclo3",
    "DimensionError",
    "FrameReport",
    "HWGroup",
    "McEstimate",
    "NormError",
    "NotTabulatedError",
    "SearchConfig",
    "SearchResult",
    "SicframeError",
    "SubspaceEmbedding",
    "UnsupportedDimensionError",
    "UnsupportedError",
    "UnsupportedSubspaceError",
    "analytic_avg_f",
    "analytic_avg_fH",
    "analytic_avg_fH_subspace",
    "as_unit_vector",
    "build_parity_subspaces",
    "build_zauner7_subspaces",
    "displacement",
    "embed",
    "embedding_for_label",
    "exact_avg_fH",
    "f_general",
    "f_H_batch",
    "f_H_direct",
    "f_H_fast",
    "f_H_gradient",
    "frame_potential",
    "frame_report",
    "fs_moment",
    "hw_group",
    "inner",
    "mc_avg",
    "mc_avg_f",
    "monomial_pattern_counts",
    "orbit",
    "parity_operator",
    "rng_stream",
    "sample_fs",
    "sample_fs_batch",
    "sample_subspace",
    "sample_subspace_batch",
    "search",
    "verify_sic",
    "zauner7_operator",
]
