"""Finite real multiple zeta values: exact algebra and high-precision numerics."""
from .algebra import Combination
from .finite import FiniteZetaValue, fmzv_mod_p, stuffle_check_mod_p, symmetric_check_mod_p
from .index import (
    IndexFormatError,
    depth,
    dual,
    format_index,
    height,
    index_to_word,
    is_admissible,
    parse_index,
    weight,
    word_to_index,
)
from .numerics import eval_combo, eval_star, mzv, mzv_direct, mzv_holder, mzv_holder_at
from .products import shuffle, shuffle_indices, star_expand, stuffle
from .regularization import HarmonicPoly, ShufflePoly, reg_harmonic, reg_shuffle, regularize
from .series import BiSeries, gamma_quotient_series
from .symmetric import (
    FrmzvExpansion,
    frmzv,
    frmzv_star_star,
    mod_zeta2_reduce,
    partition_reduce,
    sum_S,
    sum_S_star,
    symmetric_sum,
    zeta2_ideal_witness,
)

__version__ = "0.1.0"

__all__ = [
    "Combination", "FiniteZetaValue", "fmzv_mod_p", "stuffle_check_mod_p",
    "symmetric_check_mod_p", "IndexFormatError", "depth", "dual", "format_index", "height",
    "index_to_word", "is_admissible", "parse_index", "weight", "word_to_index", "eval_combo",
    "eval_star", "mzv", "mzv_direct", "mzv_holder", "mzv_holder_at", "shuffle",
    "shuffle_indices", "star_expand", "stuffle", "HarmonicPoly", "ShufflePoly",
    "reg_harmonic", "reg_shuffle", "regularize", "BiSeries", "gamma_quotient_series",
    "FrmzvExpansion", "frmzv", "frmzv_star_star", "mod_zeta2_reduce", "partition_reduce",
    "sum_S", "sum_S_star", "symmetric_sum", "zeta2_ideal_witness",
]
