"""
Utility modules for the toolkit.
"""

from secorder.utils.bit_utils import (
    WORD_MAX_WIDTH, check_width, mask, popcount, coordinate_bit, coordinates,
    set_bits, next_same_weight, fixed_weight_values, successor_values,
    word_to_text, text_to_word, permute_value, popcount_array
)
from secorder.utils.file_utils import load_json, dump_json, save_output
from secorder.utils.matching_utils import maximum_matching, has_perfect_matching

__all__ = [
    # Packed words
    'WORD_MAX_WIDTH',
    'check_width',
    'mask',
    'popcount',
    'coordinate_bit',
    'coordinates',
    'set_bits',
    'next_same_weight',
    'fixed_weight_values',
    'successor_values',
    'word_to_text',
    'text_to_word',
    'permute_value',
    'popcount_array',

    # Files
    'load_json',
    'dump_json',
    'save_output',

    # Matching
    'maximum_matching',
    'has_perfect_matching'
]
