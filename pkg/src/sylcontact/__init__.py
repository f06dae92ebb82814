"""Syllable-contact phonotactics for phonemically transcribed lexicons."""

from .errors import (
    EmptyTableError,
    InventoryError,
    LexiconFormatError,
    RepairError,
    SylContactError,
    SyllabificationError,
    TokenizationError,
    TrendFitError,
    UndefinedEventError,
)
from .generate import CategoryWeights, bundled_weights, generate_corpus, load_weights
from .inventory import (
    Inventory,
    Phoneme,
    PhonemeClass,
    SonorityCategory,
    classify,
    default_inventory,
    load_inventory,
    load_inventory_file,
    sonority_of,
)
from .lexicon import LexicalEntry, bundled_lexicon, read_lexicon, write_lexicon
from .repair import RepairKind, RepairOutcome, RepairStrategy, apply_repair, suggest_repairs
from .report import ReportBundle, build_report, write_report
from .stats import (
    ContactTable,
    Granularity,
    PmiResult,
    Position,
    SlopePmi,
    TrendLine,
    Weighting,
    build_contact_table,
    fit_trend,
    pmi,
    pmi_by_slope,
    pmi_from_counts,
    pmi_matrix,
    positional_distribution,
    slope_histogram,
)
from .syllabifier import (
    BoundaryHintWarning,
    ContactPair,
    Syllable,
    SyllabifiedWord,
    extract_contacts,
    filter_cvc_cvc,
    parse_word,
    shape_of,
    syllabify,
    tokenize,
)

__version__ = "0.1.0"
