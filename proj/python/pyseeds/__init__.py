"""Seeds of a word: all seeds as compact ranges and a shortest seed.

Texts are ``str`` (UTF-8 bytes), ``bytes``, or a list of non-negative ints.
Positions are 1-based; a seed is reported as ``(pos, len)``, the word
``text[pos-1 : pos-1+len]``.
"""

from ._pyseeds import (
    Analysis,
    SeedRange,
    TextError,
    all_seeds,
    factorize,
    is_cover,
    is_quasiseed,
    is_seed,
    quasigaps,
    shortest_seed,
)

__all__ = [
    "Analysis",
    "SeedRange",
    "TextError",
    "all_seeds",
    "factorize",
    "is_cover",
    "is_quasiseed",
    "is_seed",
    "quasigaps",
    "shortest_seed",
]
