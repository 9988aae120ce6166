"""Field-operation counter.

Only multiplications and inversions are tallied; additions are free in the
counting model. Counting is opt-in through :func:`count_ops` and is carried
in a context variable, so concurrent computations do not interfere.
"""
from __future__ import annotations

from contextlib import contextmanager
from contextvars import ContextVar
from dataclasses import dataclass


@dataclass
class OpCounter:
    mul: int = 0
    inv: int = 0

    @property
    def total(self) -> int:
        return self.mul + self.inv


_active: ContextVar[OpCounter | None] = ContextVar("hankeldet_op_counter", default=None)


@contextmanager
def count_ops():
    """Count field multiplications and inversions inside the ``with`` block."""
    counter = OpCounter()
    token = _active.set(counter)
    try:
        yield counter
    finally:
        _active.reset(token)


def tally(mul: int = 0, inv: int = 0) -> None:
    counter = _active.get()
    if counter is not None:
        counter.mul += mul
        counter.inv += inv
