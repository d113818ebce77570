"""Shift-register synthesis for one or several sequences."""

from dataclasses import dataclass

from .failures import RECURRENCE_NOT_FOUND, Failure
from .kernels import kernel_for


@dataclass(frozen=True)
class Recurrence:
    """Connection polynomial ``lam`` (lam[0] = 1) of register length ``length``.

    For every sequence s and every index j with start + length <= j < len(s):
    sum_i lam[i] * s[j - i] = 0.  deg(lam) <= length.
    """

    lam: tuple
    length: int

    @property
    def degree(self):
        return len(self.lam) - 1


def feng_tzeng(F, sequences, start=0, cap=None):
    """Shortest linear recurrence shared by all sequences, constrained from
    index ``start`` on.  Returns a Recurrence, or a Failure when the shortest
    length exceeds ``cap``."""
    rows = [list(s) for s in sequences]
    if not rows:
        return Recurrence((1,), 0)
    end = len(rows[0])
    if any(len(r) != end for r in rows):
        raise ValueError("sequences must have equal length")
    if not 0 <= start <= end:
        raise ValueError("start out of range")
    k = kernel_for(F)
    length, lam = k.feng_tzeng(rows, start, end)
    if length > 0 and k.exact_recurrence(rows, start, end, length - 1) is not None:
        # not minimal: take the shortest exact solution instead
        for shorter in range(length):
            sol = k.exact_recurrence(rows, start, end, shorter)
            if sol is not None:
                length, lam = shorter, sol
                break
    if cap is not None and length > cap:
        return Failure(RECURRENCE_NOT_FOUND, detail="shortest length %d > cap %d" % (length, cap))
    return Recurrence(tuple(lam), length)


def massey(F, sequence, start=0, cap=None):
    """Berlekamp-Massey: the single-sequence case of feng_tzeng."""
    return feng_tzeng(F, [sequence], start, cap)


def annihilates(F, rec, sequences, start=0):
    """Direct check that rec holds on every sequence from start + length on."""
    lam = rec.lam
    for s in sequences:
        for j in range(start + rec.length, len(s)):
            acc = 0
            for i, c in enumerate(lam):
                acc = F.add(acc, F.mul(c, s[j - i]))
            if acc:
                return False
    return True
