"""Shuffle products, shuffle linear forms, and the Lie/group-like tests.

The shuffle of two words is the sum over all interleavings; the induced
linear forms on a level tensor characterize Lie elements (all forms vanish)
and group-like elements (forms factor multiplicatively).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .scalars import values_close
from .tensor import LevelTensor, TensorSeries
from .words import all_words, word_index


@dataclass(frozen=True)
class WordCombination:
    """Sparse integer combination of equal-length words."""

    terms: dict

    def length(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def mass(self) -> int:
        """Sum of absolute coefficients; binomial(|I|+|J|, |I|) for a shuffle."""
        return sum(abs(c) for c in self.terms.values())

    def eval_on(self, tensor: LevelTensor):
        total = 0
        for word, coeff in self.terms.items():
            total = total + coeff * tensor.entries[word_index(word, tensor.d)]
        return total


@lru_cache(maxsize=None)
def _shuffle(left: tuple, right: tuple) -> dict:
    if not left:
        return {right: 1}
    if not right:
        return {left: 1}
    out: dict = {}
    for word, coeff in _shuffle(left[:-1], right).items():
        key = word + (left[-1],)
        out[key] = out.get(key, 0) + coeff
    for word, coeff in _shuffle(left, right[:-1]).items():
        key = word + (right[-1],)
        out[key] = out.get(key, 0) + coeff
    return out


def shuffle_words(left: Sequence[int], right: Sequence[int]) -> WordCombination:
    """Shuffle product of two words as a sparse combination."""
    return WordCombination(dict(_shuffle(tuple(left), tuple(right))))


def shuffle_combinations(a: dict, b: dict) -> dict:
    """Shuffle product extended bilinearly to sparse combinations."""
    out: dict = {}
    for wa, ca in a.items():
        for wb, cb in b.items():
            for word, coeff in _shuffle(wa, wb).items():
                out[word] = out.get(word, 0) + ca * cb * coeff
    return {w: c for w, c in out.items() if c != 0}


def shuffle_word_list(words: Sequence[Sequence[int]]) -> WordCombination:
    """Iterated shuffle of a list of words."""
    acc = {(): 1}
    for word in words:
        acc = shuffle_combinations(acc, {tuple(word): 1})
    return WordCombination(acc)


def shuffle_form_eval(left: Sequence[int], right: Sequence[int], tensor: LevelTensor):
    """Evaluate the shuffle linear form of a pair of words on a level tensor."""
    left, right = tuple(left), tuple(right)
    if len(left) + len(right) != tensor.k:
        raise ValueError(f"form of total length {len(left) + len(right)} on an order-{tensor.k} tensor")
    return shuffle_words(left, right).eval_on(tensor)


def _form_pairs(d: int, n: int):
    """Unordered pairs of non-empty words with total length <= n."""
    for total in range(2, n + 1):
        for r in range(1, total // 2 + 1):
            s = total - r
            for left in all_words(d, r):
                for right in all_words(d, s):
                    if r == s and right < left:
                        continue
                    yield left, right


def find_lie_violation(series: TensorSeries, tol: float | None = None):
    """First (I, J, value) with a nonvanishing shuffle form, or None."""
    if not values_close(series.constant_term, 0 * series.constant_term, tol):
        return ((), (), series.constant_term)
    for left, right in _form_pairs(series.d, series.n):
        value = shuffle_form_eval(left, right, series.levels[len(left) + len(right)])
        if not values_close(value, 0 * value, tol):
            return (left, right, value)
    return None


def is_lie(series: TensorSeries, tol: float | None = None) -> bool:
    """True when the constant term is 0 and every shuffle linear form vanishes."""
    return find_lie_violation(series, tol) is None


def find_grouplike_violation(series: TensorSeries, tol: float | None = None):
    """First (I, J, form value, product value) breaking multiplicativity, or None."""
    one = series.constant_term
    if not values_close(one, 1 + 0 * one, tol):
        return ((), (), one, 1)
    for left, right in _form_pairs(series.d, series.n):
        lhs = shuffle_form_eval(left, right, series.levels[len(left) + len(right)])
        rhs = series.coefficient(left) * series.coefficient(right)
        if not values_close(lhs, rhs, tol):
            return (left, right, lhs, rhs)
    return None


def is_grouplike(series: TensorSeries, tol: float | None = None) -> bool:
    """True when the constant term is 1 and shuffle forms factor as products."""
    return find_grouplike_violation(series, tol) is None
