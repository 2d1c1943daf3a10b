"""Transition-system solver for SM(ASP) and PC(ID) theories."""

from ._smasp import (
    MODES,
    LimitExceeded,
    SmaspError,
    __version__,
    answer_sets,
    check_trace,
    greatest_unfounded_set,
    pcid_models,
    run_cli,
    smasp_models,
    solve,
    translate,
    well_founded_model,
)

__all__ = [
    "MODES",
    "LimitExceeded",
    "SmaspError",
    "__version__",
    "answer_sets",
    "check_trace",
    "greatest_unfounded_set",
    "pcid_models",
    "run_cli",
    "smasp_models",
    "solve",
    "translate",
    "well_founded_model",
]
