from __future__ import annotations

from collections.abc import Iterable, Sequence

# Dense buffers hold coefficients of consecutive exponent indices starting at an
# offset the caller keeps track of. Every routine truncates to len(buf).


def multiply_binomial(buf: list[int], step: int, sign: int = 1) -> None:
    """In place ``buf *= (1 - sign * q^step)``."""
    if step <= 0:
        raise ValueError("binomial step must be positive")
    for i in range(len(buf) - 1, step - 1, -1):
        if buf[i - step]:
            buf[i] -= sign * buf[i - step]


def divide_binomial(buf: list[int], step: int, sign: int = 1) -> None:
    """In place ``buf /= (1 - sign * q^step)``."""
    if step <= 0:
        raise ValueError("binomial step must be positive")
    for i in range(step, len(buf)):
        if buf[i - step]:
            buf[i] += sign * buf[i - step]


def add_terms(buf: list[int], terms: Iterable[tuple[int, int]], shift: int = 0) -> None:
    width = len(buf)
    for index, coeff in terms:
        pos = index + shift
        if 0 <= pos < width:
            buf[pos] += coeff


def add_shifted(buf: list[int], src: Sequence[int], shift: int, stride: int = 1) -> None:
    """Add ``src[k]`` into ``buf[shift + k * stride]`` while it stays in range."""
    width = len(buf)
    for k, coeff in enumerate(src):
        pos = shift + k * stride
        if pos >= width:
            break
        if coeff and pos >= 0:
            buf[pos] += coeff


def convolve(a: Sequence[int], b: Sequence[int], width: int) -> list[int]:
    out = [0] * width
    b_nonzero = [(j, cb) for j, cb in enumerate(b[:width]) if cb]
    for i, ca in enumerate(a[:width]):
        if not ca:
            continue
        limit = width - i
        for j, cb in b_nonzero:
            if j >= limit:
                break
            out[i + j] += ca * cb
    return out
