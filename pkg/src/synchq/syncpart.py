"""Synchronized and rooted synchronized partitions.

A synchronized partition is just the pair (alpha, beta); the star padding of
the shorter row is derived from the length difference and never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import InvalidPartition, graded_key, _subsets, validate_distinct
from .qpoly import QPoly


class BoundsViolation(ValueError):
    pass


@dataclass(frozen=True)
class SyncPartition:
    alpha: tuple[int, ...] = ()
    beta: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(int(x) for x in self.alpha))
        object.__setattr__(self, "beta", tuple(int(x) for x in self.beta))
        validate_distinct(self.alpha, zero_allowed=False)
        validate_distinct(self.beta, zero_allowed=True)

    @property
    def discrepancy(self) -> int:
        return len(self.alpha) - len(self.beta)

    @property
    def weight(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    @property
    def has_zero(self) -> bool:
        return bool(self.beta) and self.beta[-1] == 0

    @property
    def sign(self) -> int:
        return -1 if self.discrepancy % 2 else 1

    def within(self, m: int, n: int) -> bool:
        return (not self.alpha or self.alpha[0] <= m) and (not self.beta or self.beta[0] <= n)

    def rows(self) -> tuple[list, list]:
        """Both rows padded with '*' to equal length."""
        width = max(len(self.alpha), len(self.beta))
        top = list(self.alpha) + ["*"] * (width - len(self.alpha))
        bottom = list(self.beta) + ["*"] * (width - len(self.beta))
        return top, bottom

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "bar": None}

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class RootedSyncPartition:
    base: SyncPartition
    bar: int

    def __post_init__(self):
        k = self.base.discrepancy
        if k == 0:
            raise InvalidPartition("a rooted synchronized partition needs nonzero discrepancy")
        if not 1 <= self.bar <= abs(k):
            raise InvalidPartition(f"bar position {self.bar} outside 1..{abs(k)}")

    @classmethod
    def of(cls, alpha, beta, bar: int) -> "RootedSyncPartition":
        return cls(SyncPartition(tuple(alpha), tuple(beta)), bar)

    alpha = property(lambda self: self.base.alpha)
    beta = property(lambda self: self.base.beta)
    discrepancy = property(lambda self: self.base.discrepancy)
    weight = property(lambda self: self.base.weight)
    has_zero = property(lambda self: self.base.has_zero)

    @property
    def delta(self) -> int:
        # a barred star on the bottom row still counts
        k = self.base.discrepancy
        return k if k > 0 else -k - 1

    @property
    def sign(self) -> int:
        return -1 if self.delta % 2 else 1

    @property
    def degenerate(self) -> bool:
        k = self.base.discrepancy
        if k > 0:
            return not self.base.has_zero and self.bar == 1
        return self.base.has_zero and self.bar == -k

    def within(self, m: int, n: int) -> bool:
        return self.base.within(m, n)

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "bar": self.bar}

    def __str__(self):
        return render(self)


def sign_sync(s: SyncPartition) -> int:
    return s.sign


def delta(s: RootedSyncPartition) -> int:
    return s.delta


def sign_rooted(s: RootedSyncPartition) -> int:
    return s.sign


def is_degenerate(s: RootedSyncPartition) -> bool:
    return s.degenerate


def from_json(obj: dict, rooted: bool | None = None):
    """Parse {"alpha": [...], "beta": [...], "bar": p|null}.

    With ``rooted=True`` a missing bar is an error.
    """
    try:
        alpha = tuple(obj.get("alpha", ()))
        beta = tuple(obj.get("beta", ()))
    except (AttributeError, TypeError) as exc:
        raise InvalidPartition(f"malformed synchronized partition: {obj!r}") from exc
    for x in alpha + beta:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InvalidPartition(f"non-integer part {x!r}")
    bar = obj.get("bar")
    base = SyncPartition(alpha, beta)
    if bar is None:
        if rooted:
            raise InvalidPartition("rooted input requires a 'bar' position")
        return base
    if rooted is False:
        raise InvalidPartition("unexpected 'bar' on an unrooted synchronized partition")
    if not isinstance(bar, int) or isinstance(bar, bool):
        raise InvalidPartition(f"bar must be an integer, got {bar!r}")
    return RootedSyncPartition(base, bar)


def _order_key(s: SyncPartition):
    # weight, then alpha descending, then beta ascending
    return (s.weight, tuple(-x for x in s.alpha) + (1,), s.beta)


def enumerate_S(m: int, n: int, weight: int | None = None,
                zero_free: bool = False) -> Iterator[SyncPartition]:
    """All of S_{m,n} (optionally one weight / zero-free only), in a fixed order."""
    if m < 0 or n < 0:
        raise ValueError("m and n must be nonnegative")
    alphas = _subsets(m, False)
    betas = _subsets(n, not zero_free)
    items = [SyncPartition(a, b) for a in alphas for b in betas
             if weight is None or sum(a) + sum(b) == weight]
    items.sort(key=_order_key)
    yield from items


def enumerate_R(m: int, n: int, weight: int | None = None) -> Iterator[RootedSyncPartition]:
    for s in enumerate_S(m, n, weight):
        k = abs(s.discrepancy)
        for bar in range(1, k + 1):
            yield RootedSyncPartition(s, bar)


def gf_of(items, signed: bool = False) -> QPoly:
    acc: dict[int, int] = {}
    for s in items:
        acc[s.weight] = acc.get(s.weight, 0) + (s.sign if signed else 1)
    return QPoly(acc)


def gf_S(m: int, n: int, zero_free: bool = False, signed: bool = False) -> QPoly:
    return gf_of(enumerate_S(m, n, zero_free=zero_free), signed)


def gf_S_discrepancy(m: int, n: int, k: int) -> QPoly:
    return gf_of(s for s in enumerate_S(m, n) if s.discrepancy == k)


def gf_R(m: int, n: int, signed: bool = False) -> QPoly:
    return gf_of(enumerate_R(m, n), signed)


BAR_ASCII = "#"
BAR_UNICODE = "*̄"


def render(s, unicode: bool = False) -> str:
    """Two-row aligned text form; the barred star is '#' unless ``unicode``."""
    base = s.base if isinstance(s, RootedSyncPartition) else s
    top, bottom = base.rows()
    if not top:
        return "( )\n( )"
    if isinstance(s, RootedSyncPartition):
        k = base.discrepancy
        row = bottom if k > 0 else top
        first_star = len(row) - abs(k)
        row[first_star + s.bar - 1] = "#"
    cols = [(str(a), str(b)) for a, b in zip(top, bottom)]
    widths = [max(len(a), len(b)) for a, b in cols]
    bar = BAR_UNICODE if unicode else BAR_ASCII

    def line(idx):
        cells = [c[idx].rjust(w) for c, w in zip(cols, widths)]
        return " ".join(cells).replace("#", bar)

    return f"{line(0)}\n{line(1)}"
