"""Typed decoding failures.  Failures are returned, not raised."""

RECURRENCE_NOT_FOUND = "recurrence-not-found"
LOCATOR_NOT_SPLITTING = "locator-not-splitting"
INCONSISTENT = "inconsistent"
CAPABILITY_EXCEEDED = "capability-exceeded"
AMBIGUOUS_SUPPORT = "ambiguous-support"
RANK_DEFICIENT = "rank-deficient"


class Failure:
    """A decoding failure.  Falsy, so ``if not result`` tests for it."""

    __slots__ = ("kind", "step", "detail", "info")

    def __init__(self, kind, step=None, detail="", info=None):
        self.kind = kind
        self.step = step
        self.detail = detail
        self.info = dict(info or {})

    def __bool__(self):
        return False

    def __eq__(self, other):
        return isinstance(other, Failure) and (self.kind, self.step) == (other.kind, other.step)

    def __repr__(self):
        s = "Failure(%r" % self.kind
        if self.step:
            s += ", step=%r" % self.step
        if self.detail:
            s += ", %r" % self.detail
        return s + ")"

    def at(self, step):
        """Same failure tagged with an outer step name."""
        inner = self.step
        return Failure(self.kind, step if inner is None else "%s/%s" % (step, inner), self.detail, self.info)
