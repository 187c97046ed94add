"""The two-letter word over {1, 2} built by a sandwich recursion, and its series.

Stage words: ``w(0)`` is empty, ``w(1) = 1``, and for n >= 2

    w(n) = w(n-1), 2, w(n-2), 2, w(n-1).

Each stage is a prefix of the next, so the stages converge to an infinite
word ``1 2 2 1 2 1 2 1 2 2 1 2 ...``; this module serves its letters and the
coefficient source of its generating Laurent series  sum_i  letter_i / T^i.
"""

from __future__ import annotations

import threading
from fractions import Fraction

_LETTER = {1: Fraction(1), 2: Fraction(2)}


class WordStream:
    """Memoized letters of the infinite word.

    The stages are materialized as flat integer lists; no substitution shortcut
    exists (the word is not automatic), so extension rebuilds by concatenation,
    which is cheap at the ~10^5-letter scale this package needs.  Extension is
    serialized behind a lock; reads of produced letters are safe from any thread.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._prev = [1]            # stage 1
        self._buf = [1, 2, 2, 1]    # stage 2

    def _ensure(self, k: int) -> None:
        with self._lock:
            while len(self._buf) < k:
                self._prev, self._buf = (
                    self._buf,
                    self._buf + [2] + self._prev + [2] + self._buf,
                )

    def prefix(self, k: int) -> list[int]:
        """The first k letters, as a fresh list of 1s and 2s."""
        if k < 0:
            raise ValueError("prefix length must be >= 0")
        self._ensure(k)
        return self._buf[:k]

    def letter(self, index: int) -> int:
        """The letter at 1-based position ``index``."""
        if index < 1:
            raise ValueError("letter positions start at 1")
        self._ensure(index)
        return self._buf[index - 1]


class WordSeriesSource:
    """Coefficient source of the word's generating series: c_i = letter_i."""

    def __init__(self, stream: WordStream | None = None) -> None:
        self._stream = stream if stream is not None else _shared_stream

    def coefficient(self, index: int) -> Fraction:
        return _LETTER[self._stream.letter(index)]


_shared_stream = WordStream()

_lengths = [0, 1]
_lengths_lock = threading.Lock()


def word_prefix(k: int) -> list[int]:
    """First k letters of the infinite word (shared memoized stream)."""
    return _shared_stream.prefix(k)


def series_source() -> WordSeriesSource:
    """The generating-series coefficient source backed by the shared stream."""
    return WordSeriesSource()


def stage_length(n: int) -> int:
    """Length of stage word w(n): 0, 1, then len(n+1) = 2*len(n) + len(n-1) + 2."""
    if n < 0:
        raise ValueError("stage index must be >= 0")
    if n >= len(_lengths):
        with _lengths_lock:
            while len(_lengths) <= n:
                _lengths.append(2 * _lengths[-1] + _lengths[-2] + 2)
    return _lengths[n]


def combined_length(n: int) -> int:
    """2*stage_length(n) - stage_length(n-1) + 1, for n >= 1.

    Starts 3, 8, 19, 46, ... and satisfies the same three-term recurrence
    c(n+1) = 2*c(n) + c(n-1) as the quotient scaling sequence it normalizes.
    """
    if n < 1:
        raise ValueError("combined_length is defined for n >= 1")
    return 2 * stage_length(n) - stage_length(n - 1) + 1
