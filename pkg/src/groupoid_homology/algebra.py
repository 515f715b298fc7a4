"""Convolution on integer functions of a finite groupoid, and scalar pairing.

Every function on a finite groupoid has compact support and every fibre is
finite, so the convolution sum is always a finite integer sum.

>>> from groupoid_homology.groupoid import pair_groupoid
>>> g = pair_groupoid(2)
>>> e12 = GroupoidFunction.indicator(g, [1])
>>> e21 = GroupoidFunction.indicator(g, [2])
>>> convolve(g, e12, e21).values
(1, 0, 0, 0)
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .abelian import FgAbGroup
from .groupoid import FiniteGroupoid


@dataclass(frozen=True)
class GroupoidFunction:
    """Values indexed by arrows; integers, or elements of ``coefficients`` when set."""

    groupoid: FiniteGroupoid
    values: tuple
    coefficients: FgAbGroup | None = None

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        if len(vals) != self.groupoid.arrow_count:
            raise ValueError(f"{len(vals)} values for {self.groupoid.arrow_count} arrows")
        if self.coefficients is None:
            vals = tuple(int(v) for v in vals)
        else:
            vals = tuple(self.coefficients.normalize(v) for v in vals)
        object.__setattr__(self, "values", vals)

    @classmethod
    def zero(cls, g: FiniteGroupoid) -> GroupoidFunction:
        return cls(g, (0,) * g.arrow_count)

    @classmethod
    def indicator(cls, g: FiniteGroupoid, arrows: Iterable[int]) -> GroupoidFunction:
        s = set(arrows)
        return cls(g, tuple(int(a in s) for a in range(g.arrow_count)))

    def __add__(self, other: GroupoidFunction) -> GroupoidFunction:
        _same(self, other)
        grp = self.coefficients
        if grp != other.coefficients:
            raise ValueError("functions take values in different groups")
        add = (lambda a, b: a + b) if grp is None else grp.add
        return GroupoidFunction(self.groupoid, tuple(add(a, b) for a, b in zip(self.values, other.values)), grp)

    def scale(self, k: int) -> GroupoidFunction:
        return GroupoidFunction(self.groupoid, tuple(k * a for a in self.values))

    def support(self) -> set[int]:
        zero = 0 if self.coefficients is None else self.coefficients.zero()
        return {a for a, v in enumerate(self.values) if v != zero}


def _same(f1: GroupoidFunction, f2: GroupoidFunction) -> None:
    if f1.groupoid != f2.groupoid:
        raise ValueError("functions live on different groupoids")


def convolve(g: FiniteGroupoid, f1: GroupoidFunction, f2: GroupoidFunction) -> GroupoidFunction:
    """``(f1 * f2)(c) = sum over h with s(h) = r(c) of f1(h^-1) f2(h c)``."""
    if f1.groupoid != g or f2.groupoid != g:
        raise ValueError("functions do not live on this groupoid")
    if f1.coefficients is not None or f2.coefficients is not None:
        raise ValueError("convolution is defined here for integer functions only")
    a, b, inv = f1.values, f2.values, g.inverse
    out = []
    for c in range(g.arrow_count):
        total = 0
        for h in g.arrows_by_source[g.range[c]]:
            x = a[inv[h]]
            if x:
                total += x * b[g.mul(h, c)]
        out.append(total)
    return GroupoidFunction(g, tuple(out))


def local_unit(g: FiniteGroupoid) -> GroupoidFunction:
    return GroupoidFunction.indicator(g, g.units)


def scalar_pair(f: Sequence[int], zeta: Sequence, group: FgAbGroup | None = None):
    """Pointwise ``f(x) * zeta(x)`` with ``f`` integer valued.

    Accepts two :class:`GroupoidFunction` values on the same groupoid, or two
    plain sequences over the same index set together with the coefficient
    group of ``zeta`` (``None`` for integers).
    """
    if isinstance(f, GroupoidFunction):
        if not isinstance(zeta, GroupoidFunction):
            raise TypeError("pair a groupoid function with a groupoid function")
        _same(f, zeta)
        if f.coefficients is not None:
            raise ValueError("the first factor must be integer valued")
        vals = scalar_pair(f.values, zeta.values, zeta.coefficients)
        return GroupoidFunction(f.groupoid, vals, zeta.coefficients)
    if len(f) != len(zeta):
        raise ValueError("functions are indexed by sets of different sizes")
    if group is None:
        return tuple(int(a) * int(z) for a, z in zip(f, zeta))
    return tuple(group.scale(int(a), z) for a, z in zip(f, zeta))


def push_values(mapping: Sequence[int], target_size: int, values: Sequence, group: FgAbGroup | None = None) -> tuple:
    """Fibre sums along ``mapping`` for integer or group-valued functions."""
    if group is None:
        out = [0] * target_size
        for x, y in enumerate(mapping):
            out[y] += int(values[x])
        return tuple(out)
    acc = [group.zero()] * target_size
    for x, y in enumerate(mapping):
        acc[y] = group.add(acc[y], values[x])
    return tuple(acc)


def pull_values(mapping: Sequence[int], values: Sequence) -> tuple:
    """``zeta o mapping``."""
    return tuple(values[y] for y in mapping)
