"""Number-theoretic transform multiplication over NTT-friendly prime fields.

Residues are held in ``int64`` numpy arrays, so the modulus must satisfy
``p < 2**31`` for butterfly products to stay below ``2**63``.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np

from .ops import tally

MAX_NUMPY_MODULUS = 1 << 31


def ntt_capable(field, length: int) -> bool:
    p = getattr(field, "p", None)
    if p is None or p >= MAX_NUMPY_MODULUS:
        return False
    return length <= 1 << field.two_adicity


@lru_cache(maxsize=64)
def _twiddles(p: int, root: int, size: int) -> np.ndarray:
    # root**j for j < size // 2, built by block doubling
    half = max(size // 2, 1)
    powers = np.ones(half, dtype=np.int64)
    filled = 1
    step = root
    while filled < half:
        take = min(filled, half - filled)
        powers[filled:filled + take] = powers[:take] * step % p
        filled += take
        step = step * step % p
    return powers


@lru_cache(maxsize=64)
def _bit_reversal(size: int) -> np.ndarray:
    bits = size.bit_length() - 1
    idx = np.arange(size, dtype=np.int64)
    rev = np.zeros(size, dtype=np.int64)
    for b in range(bits):
        rev |= ((idx >> b) & 1) << (bits - 1 - b)
    return rev


def _transform(values: np.ndarray, p: int, root: int) -> np.ndarray:
    size = len(values)
    twiddles = _twiddles(p, root, size)
    a = values[_bit_reversal(size)]
    half = 1
    while half < size:
        w = twiddles[:: size // (2 * half)][:half]
        a = a.reshape(-1, 2 * half)
        u = a[:, :half]
        v = a[:, half:] * w % p
        a = np.concatenate(((u + v) % p, (u - v) % p), axis=1)
        half *= 2
    tally(mul=(size // 2) * (size.bit_length() - 1))
    return a.reshape(size)


def _root_of_order(field, size: int) -> int:
    return pow(field.two_power_root, (1 << field.two_adicity) // size, field.p)


def mul_ntt(a: list, b: list, field) -> list:
    """Product of two residue lists; the caller strips and checks capability."""
    p = field.p
    out_len = len(a) + len(b) - 1
    size = 1 << (out_len - 1).bit_length()
    root = _root_of_order(field, size)
    fa = np.zeros(size, dtype=np.int64)
    fb = np.zeros(size, dtype=np.int64)
    fa[: len(a)] = a
    fb[: len(b)] = b
    fa = _transform(fa, p, root)
    fb = _transform(fb, p, root)
    prod = fa * fb % p
    back = _transform(prod, p, pow(root, -1, p))
    scale = pow(size, -1, p)
    tally(mul=size + out_len)
    return (back[:out_len] * scale % p).tolist()
