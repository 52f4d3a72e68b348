"""
Word-level helpers: failure function, minimal period and spacer runs.
"""
from itertools import groupby
from typing import List


def prefix_function(word: str) -> List[int]:
    """
    Knuth-Morris-Pratt failure function: pi[i] is the length of the longest proper border of word[:i + 1].

    >>> prefix_function("0010010")
    [0, 1, 0, 1, 2, 3, 4]
    """
    pi = [0] * len(word)
    k = 0
    for i in range(1, len(word)):
        while k > 0 and word[i] != word[k]:
            k = pi[k - 1]
        if word[i] == word[k]:
            k += 1
        pi[i] = k
    return pi


def minimal_period(word: str) -> int:
    """
    Smallest p >= 1 with word[i] == word[i + p] wherever both are defined.

    >>> minimal_period("0101010")
    2
    >>> minimal_period("0010")
    3
    """
    if not word:
        return 0
    return len(word) - prefix_function(word)[-1]


def longest_spacer_run(word: str) -> int:
    """Length of the longest block of consecutive 1s."""
    return max((len(list(run)) for symbol, run in groupby(word) if symbol == "1"), default=0)
