"""Conflict and correlation measures for Dempster-Shafer mass functions."""

from ._core import (
    ConflictReport,
    EvConflictError,
    Frame,
    GramCheck,
    LiuConflict,
    MassFunction,
    SweepRow,
    __version__,
    bpa_equal,
    combine_dempster,
    conflict_k,
    conflict_kr,
    conflict_report,
    correlation_coefficient,
    correlation_degree,
    dif_betp,
    dump_document,
    gram_check,
    gram_positive_definite,
    jaccard,
    jousselme_distance,
    liu_cf,
    parse_document,
    pignistic,
    run_sweep,
    song_cor,
    vacuous_bpa,
)

__all__ = [name for name in dir() if not name.startswith("_")]
