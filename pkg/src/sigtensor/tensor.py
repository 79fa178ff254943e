"""Truncated tensor algebra: dense level tensors and graded series.

A LevelTensor is a dense order-k tensor over {1..d}, a TensorSeries stacks
levels 0..n (level 0 is a single scalar) and carries the concatenation
product, exponential and logarithm, truncated at order n.  Values are
immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .scalars import format_scalar, is_exact, parse_scalar, values_close
from .words import all_words, index_word, word_index, word_to_string


class LevelTensor:
    """Dense order-k tensor with d^k entries indexed by words."""

    __slots__ = ("d", "k", "entries")

    def __init__(self, d: int, k: int, entries: Sequence):
        if d < 1 or k < 0:
            raise ValueError("need d >= 1 and k >= 0")
        entries = tuple(entries)
        if len(entries) != d**k:
            raise ValueError(f"expected {d ** k} entries, got {len(entries)}")
        self.d = d
        self.k = k
        self.entries = entries

    @classmethod
    def zeros(cls, d: int, k: int, zero=Fraction(0)) -> "LevelTensor":
        return cls(d, k, [zero] * d**k)

    @classmethod
    def from_map(cls, d: int, k: int, mapping, zero=Fraction(0)) -> "LevelTensor":
        entries = [zero] * d**k
        for word, value in mapping.items():
            entries[word_index(word, d)] = value
        return cls(d, k, entries)

    def __getitem__(self, word) -> object:
        if isinstance(word, int):
            return self.entries[word]
        return self.entries[word_index(word, self.d)]

    def __repr__(self):
        return f"LevelTensor(d={self.d}, k={self.k})"

    def is_exact(self) -> bool:
        return all(is_exact(v) for v in self.entries)

    def equals(self, other: "LevelTensor", tol: float | None = None) -> bool:
        if self.d != other.d or self.k != other.k:
            return False
        return all(values_close(a, b, tol) for a, b in zip(self.entries, other.entries))

    def __eq__(self, other):
        return isinstance(other, LevelTensor) and self.equals(other)

    def __hash__(self):
        return hash((self.d, self.k, self.entries))

    def add(self, other: "LevelTensor") -> "LevelTensor":
        if (self.d, self.k) != (other.d, other.k):
            raise ValueError("shape mismatch")
        return LevelTensor(self.d, self.k, [a + b for a, b in zip(self.entries, other.entries)])

    def scale(self, c) -> "LevelTensor":
        return LevelTensor(self.d, self.k, [c * v for v in self.entries])

    def negate(self) -> "LevelTensor":
        return LevelTensor(self.d, self.k, [-v for v in self.entries])

    def norm_max(self) -> float:
        return max((abs(v) for v in self.entries), default=0)

    def is_zero(self, tol: float | None = None) -> bool:
        return all(values_close(v, 0 * v, tol) for v in self.entries)

    def tensor_product(self, other: "LevelTensor") -> "LevelTensor":
        """Concatenation (outer) product of two levels."""
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        block = len(other.entries)
        out = [Fraction(0)] * (len(self.entries) * block)
        for i, a in enumerate(self.entries):
            if a == 0:
                continue
            base = i * block
            for j, b in enumerate(other.entries):
                if b == 0:
                    continue
                out[base + j] = a * b
        return LevelTensor(self.d, self.k + other.k, out)

    def symmetrize(self) -> "LevelTensor":
        """Sum of entries over all k! position permutations of each word.

        With this convention the entry at a word (i1..ik) evaluates the
        iterated shuffle form of the single letters i1, ..., ik, so on a
        group-like level it equals the product of the level-1 coordinates.
        """
        d, k = self.d, self.k
        out = []
        for word in all_words(d, k):
            total = 0
            for perm in itertools.permutations(word):
                total = total + self.entries[word_index(perm, d)]
            out.append(total)
        return LevelTensor(d, k, out)

    def to_float(self) -> "LevelTensor":
        return LevelTensor(self.d, self.k, [float(v) for v in self.entries])

    def to_json(self) -> dict:
        exact = self.is_exact()
        entries = {}
        for i, v in enumerate(self.entries):
            if v == 0:
                continue
            entries[word_to_string(index_word(i, self.d, self.k))] = format_scalar(v)
        return {
            "dim": self.d,
            "order": self.k,
            "scalar": "rational" if exact else "float",
            "entries": entries,
        }

    @classmethod
    def from_json(cls, data: dict) -> "LevelTensor":
        d, k = int(data["dim"]), int(data["order"])
        exact = data.get("scalar", "rational") == "rational"
        zero = Fraction(0) if exact else 0.0
        entries = [zero] * d**k
        for key, raw in data.get("entries", {}).items():
            word = tuple(int(ch) for ch in key) if key else ()
            if len(word) != k:
                raise ValueError(f"word {key!r} has wrong length for order {k}")
            entries[word_index(word, d)] = parse_scalar(raw, exact)
        return cls(d, k, entries)


class TensorSeries:
    """Graded stack of levels 0..n of the truncated tensor algebra."""

    __slots__ = ("d", "n", "levels")

    def __init__(self, d: int, n: int, levels: Sequence[LevelTensor]):
        levels = tuple(levels)
        if len(levels) != n + 1:
            raise ValueError(f"expected {n + 1} levels, got {len(levels)}")
        for k, lvl in enumerate(levels):
            if lvl.d != d or lvl.k != k:
                raise ValueError(f"level {k} has shape (d={lvl.d}, k={lvl.k})")
        self.d = d
        self.n = n
        self.levels = levels

    def __repr__(self):
        return f"TensorSeries(d={self.d}, n={self.n})"

    @property
    def constant_term(self):
        return self.levels[0].entries[0]

    def coefficient(self, word) -> object:
        """Coefficient of the given word (any length <= n)."""
        word = tuple(word)
        return self.levels[len(word)][word]

    def is_exact(self) -> bool:
        return all(lvl.is_exact() for lvl in self.levels)

    def equals(self, other: "TensorSeries", tol: float | None = None) -> bool:
        if self.d != other.d or self.n != other.n:
            return False
        return all(a.equals(b, tol) for a, b in zip(self.levels, other.levels))

    def __eq__(self, other):
        return isinstance(other, TensorSeries) and self.equals(other)

    def __hash__(self):
        return hash((self.d, self.n, self.levels))

    def add(self, other: "TensorSeries") -> "TensorSeries":
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError("shape mismatch")
        return TensorSeries(self.d, self.n, [a.add(b) for a, b in zip(self.levels, other.levels)])

    def scale(self, c) -> "TensorSeries":
        return TensorSeries(self.d, self.n, [lvl.scale(c) for lvl in self.levels])

    def negate(self) -> "TensorSeries":
        return TensorSeries(self.d, self.n, [lvl.negate() for lvl in self.levels])

    def eta_scale(self, eta) -> "TensorSeries":
        """Scale level k by eta**k (the grading action of a scalar eta)."""
        return TensorSeries(self.d, self.n, [lvl.scale(eta**k) for k, lvl in enumerate(self.levels)])

    def truncate(self, n: int) -> "TensorSeries":
        """Copy truncated (or zero-extended) to order n."""
        if n <= self.n:
            return TensorSeries(self.d, n, self.levels[: n + 1])
        extra = [LevelTensor.zeros(self.d, k) for k in range(self.n + 1, n + 1)]
        return TensorSeries(self.d, n, list(self.levels) + extra)

    def to_float(self) -> "TensorSeries":
        return TensorSeries(self.d, self.n, [lvl.to_float() for lvl in self.levels])

    def to_json(self) -> dict:
        levels = [format_scalar(self.constant_term)]
        levels += [lvl.to_json() for lvl in self.levels[1:]]
        return {"dim": self.d, "trunc": self.n, "levels": levels}

    @classmethod
    def from_json(cls, data: dict) -> "TensorSeries":
        d, n = int(data["dim"]), int(data["trunc"])
        raw_levels = data["levels"]
        if len(raw_levels) != n + 1:
            raise ValueError("level count does not match trunc")
        tensors = [lvl if isinstance(lvl, dict) else None for lvl in raw_levels]
        exact = all(t is None or t.get("scalar", "rational") == "rational" for t in tensors)
        levels = [LevelTensor(d, 0, [parse_scalar(raw_levels[0], exact)])]
        for k in range(1, n + 1):
            levels.append(LevelTensor.from_json(raw_levels[k]))
        return cls(d, n, levels)


def zero_series(d: int, n: int) -> TensorSeries:
    return TensorSeries(d, n, [LevelTensor.zeros(d, k) for k in range(n + 1)])


def unit_series(d: int, n: int) -> TensorSeries:
    levels = [LevelTensor(d, 0, [Fraction(1)])]
    levels += [LevelTensor.zeros(d, k) for k in range(1, n + 1)]
    return TensorSeries(d, n, levels)


def basis_series(d: int, n: int, letter: int) -> TensorSeries:
    """The generator e_letter as a series."""
    if not 1 <= letter <= d:
        raise ValueError(f"letter {letter} outside alphabet 1..{d}")
    vec = [Fraction(0)] * d
    vec[letter - 1] = Fraction(1)
    return from_vector(vec, n)


def from_vector(vector: Sequence, n: int) -> TensorSeries:
    """Series whose only nonzero level is level 1."""
    d = len(vector)
    levels = [LevelTensor.zeros(d, 0), LevelTensor(d, 1, list(vector))]
    levels += [LevelTensor.zeros(d, k) for k in range(2, n + 1)]
    return TensorSeries(d, n, levels)


def series_from_level(level: LevelTensor, n: int | None = None) -> TensorSeries:
    """Series with a single nonzero homogeneous component."""
    if n is None:
        n = level.k
    levels = [LevelTensor.zeros(level.d, k) for k in range(n + 1)]
    levels[level.k] = level
    return TensorSeries(level.d, n, levels)


def concat_product(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    """Concatenation product in the truncated tensor algebra."""
    if a.d != b.d or a.n != b.n:
        raise ValueError("series must share dimension and truncation order")
    levels = []
    for k in range(a.n + 1):
        acc = None
        for p in range(k + 1):
            term = a.levels[p].tensor_product(b.levels[k - p])
            acc = term if acc is None else acc.add(term)
        levels.append(acc)
    return TensorSeries(a.d, a.n, levels)


def commutator(a: TensorSeries, b: TensorSeries) -> TensorSeries:
    return concat_product(a, b).add(concat_product(b, a).negate())


def exp_series(p: TensorSeries) -> TensorSeries:
    """exp(p) = sum p^r / r!, which terminates at r = n for constant term 0."""
    if p.constant_term != 0:
        raise ValueError("exponential requires constant term 0")
    result = unit_series(p.d, p.n)
    term = unit_series(p.d, p.n)
    for r in range(1, p.n + 1):
        term = concat_product(term, p).scale(Fraction(1, r))
        result = result.add(term)
    return result


def log_series(q: TensorSeries) -> TensorSeries:
    """log(q) = sum (-1)^(r-1)/r (q-1)^r, defined for constant term 1."""
    if q.constant_term != 1:
        raise ValueError("logarithm requires constant term 1")
    p = q.add(unit_series(q.d, q.n).negate())
    result = zero_series(q.d, q.n)
    power = unit_series(q.d, q.n)
    for r in range(1, q.n + 1):
        power = concat_product(power, p)
        result = result.add(power.scale(Fraction((-1) ** (r - 1), r)))
    return result


def project_level(series: TensorSeries, k: int) -> LevelTensor:
    """Copy of the order-k homogeneous component."""
    if not 0 <= k <= series.n:
        raise ValueError(f"level {k} outside 0..{series.n}")
    src = series.levels[k]
    return LevelTensor(src.d, src.k, src.entries)
