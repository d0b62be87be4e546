"""
Sparse seed of the least monotone cover.
"""

from dataclasses import dataclass, field
from typing import Dict, List

from secorder.models.bitword import BitWord
from secorder.utils.bit_utils import fixed_weight_values, set_bits, word_to_text


@dataclass
class CoverMap:
    """
    Sparse map from words to words; missing keys read as the bottom word.

    Seeded with entries[chi_Y(a)] |= chi_X(a). finalize() closes it downward
    into the total function u -> join of entries[v] over v <= u, which is
    the least increasing f with f(chi_Y(a)) >= chi_X(a).
    """
    width: int
    entries: Dict[int, int] = field(default_factory=dict)

    def add(self, key: int, value: int):
        self.entries[key] = self.entries.get(key, 0) | value

    def value_at(self, key: int) -> int:
        return self.entries.get(key, 0)

    def __getitem__(self, word: BitWord) -> BitWord:
        return BitWord(self.width, self.value_at(word.value))

    def __len__(self) -> int:
        return len(self.entries)

    def as_text(self) -> Dict[str, str]:
        """Entries as renderings, e.g. {'01': '01'}."""
        return {word_to_text(self.width, key): word_to_text(self.width, value)
                for key, value in sorted(self.entries.items())}

    def finalize(self) -> List[int]:
        """
        Downward closure over all of B^n.

        Returns:
            List of 2^n packed outputs indexed by packed input
        """
        n = self.width
        table = [0] * (1 << n)
        for w in range(n + 1):
            for u in fixed_weight_values(n, w):
                v = self.entries.get(u, 0)
                for bit in set_bits(u):
                    v |= table[u ^ bit]
                table[u] = v
        return table
