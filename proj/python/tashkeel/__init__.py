"""Arabic diacritization dataset preparation and evaluation."""

from ._core import (
    BaseTextMismatchError,
    LookupModel,
    SegmentIndex,
    TashkeelError,
    analyze_overlap,
    canonicalize,
    chunk_document,
    clean_text,
    compare_pair,
    evaluate,
    judge,
    nw_align,
    repair,
    similarity,
    strip_diacritics,
    templatize,
)

__all__ = [
    "BaseTextMismatchError",
    "LookupModel",
    "SegmentIndex",
    "TashkeelError",
    "analyze_overlap",
    "canonicalize",
    "chunk_document",
    "clean_text",
    "compare_pair",
    "evaluate",
    "judge",
    "nw_align",
    "repair",
    "similarity",
    "strip_diacritics",
    "templatize",
]
