from __future__ import annotations

import itertools
import logging
import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from qrsv.series import _dense
from qrsv.series._scan import safety_radius, scan_rows
from qrsv.series.core import QSeries, RationalLike, as_fraction
from qrsv.series.errors import TruncationUnbounded
from qrsv.series.qfunctions import reciprocal_dense

LOGGER = logging.getLogger(__name__)

MAX_RANK = 3

Vector = tuple[int, ...]


def _rank(vectors: Sequence[Sequence[int]]) -> int:
    rows = [[Fraction(x) for x in v] for v in vectors]
    rank = 0
    columns = len(rows[0]) if rows else 0
    for col in range(columns):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                factor = rows[i][col] / rows[rank][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank], strict=True)]
        rank += 1
    return rank


@dataclass(frozen=True, slots=True)
class NahmSpec:
    """Partial Nahm sum data ``(A, B, C)`` over the coset ``v + L``."""

    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[Fraction, ...]
    C: Fraction = Fraction(0)
    v: Vector | None = None
    L: tuple[Vector, ...] | None = None

    def __post_init__(self) -> None:
        rank = len(self.A)
        if not 1 <= rank <= MAX_RANK:
            raise ValueError(f"Nahm sums are supported up to rank {MAX_RANK}, got {rank}")
        A = tuple(tuple(as_fraction(x) for x in row) for row in self.A)
        if any(len(row) != rank for row in A):
            raise ValueError("matrix A must be square")
        if any(A[i][j] != A[j][i] for i in range(rank) for j in range(rank)):
            raise ValueError("matrix A must be symmetric")
        B = tuple(as_fraction(x) for x in self.B)
        if len(B) != rank:
            raise ValueError(f"vector B must have {rank} entries, got {len(B)}")
        v = tuple(self.v) if self.v is not None else (0,) * rank
        if len(v) != rank:
            raise ValueError(f"coset offset v must have {rank} entries, got {len(v)}")
        L = (
            tuple(tuple(g) for g in self.L)
            if self.L is not None
            else tuple(tuple(int(i == j) for j in range(rank)) for i in range(rank))
        )
        if not L or any(len(g) != rank for g in L):
            raise ValueError(f"lattice generators must be nonempty {rank}-vectors")
        if _rank(L) != len(L):
            raise ValueError("lattice generators must be linearly independent")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)
        object.__setattr__(self, "C", as_fraction(self.C))
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "L", L)

    @property
    def rank(self) -> int:
        return len(self.A)

    @property
    def offset(self) -> Vector:
        assert self.v is not None
        return self.v

    @property
    def generators(self) -> tuple[Vector, ...]:
        assert self.L is not None
        return self.L

    def exponent(self, n: Sequence[int]) -> Fraction:
        quadratic = sum(
            self.A[i][j] * n[i] * n[j] for i in range(self.rank) for j in range(self.rank)
        )
        return quadratic / 2 + sum(b * x for b, x in zip(self.B, n, strict=True))

    def point(self, k: Sequence[int]) -> Vector:
        return tuple(
            self.offset[i] + sum(c * g[i] for c, g in zip(k, self.generators, strict=True))
            for i in range(self.rank)
        )

    def nearest_origin(self) -> Vector:
        """Coefficients ``k`` of the coset point closest to the origin, rounded.

        Solves the normal equations of ``v + k.L = 0`` exactly.
        """
        gens = self.generators
        size = len(gens)
        rows = [
            [Fraction(sum(a * b for a, b in zip(g, h, strict=True))) for h in gens]
            + [Fraction(-sum(a * b for a, b in zip(g, self.offset, strict=True)))]
            for g in gens
        ]
        for col in range(size):
            pivot = next(i for i in range(col, size) if rows[i][col] != 0)
            rows[col], rows[pivot] = rows[pivot], rows[col]
            for i in range(size):
                if i != col and rows[i][col] != 0:
                    factor = rows[i][col] / rows[col][col]
                    rows[i] = [a - factor * b for a, b in zip(rows[i], rows[col], strict=True)]
        return tuple(math.floor(rows[i][size] / rows[i][i] + Fraction(1, 2)) for i in range(size))

    def permuted(self, order: Sequence[int]) -> NahmSpec:
        """Relabel coordinates; the sum is unchanged."""
        return NahmSpec(
            A=tuple(tuple(self.A[i][j] for j in order) for i in order),
            B=tuple(self.B[i] for i in order),
            C=self.C,
            v=tuple(self.offset[i] for i in order),
            L=tuple(tuple(g[i] for i in order) for g in self.generators),
        )


def _shell(radius: int, dims: int) -> Iterator[Vector]:
    """Integer vectors with max-norm exactly ``radius``."""
    if radius == 0:
        yield (0,) * dims
        return
    inner = range(-radius + 1, radius)
    outer = range(-radius, radius + 1)
    for pivot in range(dims):
        for before in itertools.product(inner, repeat=pivot):
            for edge in (-radius, radius):
                for after in itertools.product(outer, repeat=dims - pivot - 1):
                    yield (*before, edge, *after)


@lru_cache(maxsize=4096)
def _stretched(n: int, width: int, scale: int) -> tuple[int, ...]:
    """Dense ``1/(q;q)_n`` in the variable ``q^(1/scale)``."""
    if scale == 1:
        return reciprocal_dense(n, width)
    base = reciprocal_dense(n, -(-width // scale))
    out = [0] * width
    for i, c in enumerate(base):
        if c and i * scale < width:
            out[i * scale] = c
    return tuple(out)


def coset_points(spec: NahmSpec, valid_through: RationalLike) -> list[tuple[Vector, Fraction]]:
    """Every coset point in the nonnegative orthant with exponent below the window.

    Shells are taken around the coset point nearest the origin. Shells before
    the first one that meets the orthant do not count toward the stop; a coset
    that misses the orthant up to the safety radius contributes nothing.
    """
    window = as_fraction(valid_through)
    center = spec.nearest_origin()
    found: list[tuple[Vector, Fraction]] = []
    pending: dict[int, list[tuple[Vector, Fraction]]] = {}
    reached = False

    def shell_minimum(t: int) -> Fraction | None:
        nonlocal reached
        points: list[tuple[Vector, Fraction]] = []
        low: Fraction | None = None
        for k in _shell(t, len(center)):
            n = spec.point([c + d for c, d in zip(center, k, strict=True)])
            if min(n) < 0:
                continue
            e = spec.exponent(n)
            low = e if low is None else min(low, e)
            if e < window:
                points.append((n, e))
        pending[t] = points
        if low is None:
            return window if reached else None
        reached = True
        return low

    def visit(t: int) -> None:
        found.extend(pending.pop(t))

    radius = safety_radius(window, Fraction(1), 2 * window)
    try:
        scan_rows(0, 1, shell_minimum, visit, window, radius, what="Nahm sum")
    except TruncationUnbounded:
        if reached:
            raise
        LOGGER.debug("Nahm coset misses the nonnegative orthant within radius %d", radius)
        return []
    return found


def nahm_sum(spec: NahmSpec, valid_through: RationalLike) -> QSeries:
    """``sum q^(n.A.n/2 + n.B) / prod (q;q)_(n_i)`` over the coset, ``q^C`` omitted."""
    window = as_fraction(valid_through)
    points = coset_points(spec, window)
    scale = window.denominator
    for _, e in points:
        scale = math.lcm(scale, e.denominator)
    top = math.ceil(window * scale)
    base = min([0, *(int(e * scale) for _, e in points)])
    width = top - base
    LOGGER.debug("Nahm sum: %d coset points below q^%s (scale %d)", len(points), window, scale)
    grouped: dict[Vector, list[int]] = {}
    for n, e in points:
        head = n[:-1]
        buf = grouped.get(head)
        if buf is None:
            buf = grouped[head] = [0] * width
        _dense.add_shifted(buf, _stretched(n[-1], width, scale), int(e * scale) - base)
    acc = [0] * width
    for head, buf in grouped.items():
        for part in head:
            buf = _dense.convolve(buf, _stretched(part, width, scale), width)
        for i, c in enumerate(buf):
            acc[i] += c
    return QSeries.from_dense(acc, base, top, scale).normalized()
