"""Cyclic integer-vector sequences (multi-fans) and their rewrites.

A multi-fan is an ordered tuple of nonzero vectors read cyclically.  It is
admissible when every consecutive pair (including the wrap-around pair) is a
lattice basis and all consecutive determinants carry one common sign, so the
sequence turns consistently counterclockwise (+1) or clockwise (-1).  The
shared sign is equivalent to the existence, at every index, of an integer
a[i] with v[i+1] = -a[i]*v[i] - v[i-1]; the validator checks the
one-comparison-per-edge determinant form.

All values are immutable; rewrites return fresh, re-validated fans.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice
from .errors import (
    DomainError,
    IndexOutOfRange,
    InternalInconsistency,
    NotABasis,
    NotBlowDownable,
    OrientationFlip,
    PreconditionViolated,
    TooShort,
    ZeroVector,
)
from .lattice import Vec

CCW = 1
CW = -1

ROTATIONS = "rotations"
ROTATIONS_AND_REVERSAL = "full"
_MODES = (ROTATIONS, ROTATIONS_AND_REVERSAL)


@dataclass(frozen=True)
class MultiFan:
    """A validated cyclic vector sequence; build one via validate_multifan."""

    vectors: tuple[Vec, ...]

    def __len__(self):
        return len(self.vectors)


@dataclass(frozen=True)
class MultiFanFamily:
    """A nonempty collection of multi-fans, one per cycle of fixed points."""

    fans: tuple[MultiFan, ...]

    def __len__(self):
        return len(self.fans)


def _as_vec(item, index) -> Vec:
    try:
        x, y = item
    except (TypeError, ValueError):
        raise DomainError(f"vector at index {index} is not a pair") from None
    if not isinstance(x, int) or not isinstance(y, int):
        raise DomainError(f"vector at index {index} must have integer entries")
    return (x, y)


def validate_multifan(raw) -> MultiFan:
    """Check a vector list for admissibility and wrap it as a MultiFan.

    Errors name the first offending index: ZeroVector, then NotABasis for
    the pair ending at that index, then OrientationFlip where consecutive
    determinants first disagree.
    """
    vs = tuple(_as_vec(item, i) for i, item in enumerate(raw))
    k = len(vs)
    if k < 3:
        raise TooShort(k)
    for i, (x, y) in enumerate(vs):
        if x == 0 and y == 0:
            raise ZeroVector(i)
    sign = 0
    prev = vs[-1]
    for i, cur in enumerate(vs):
        d = prev[0] * cur[1] - prev[1] * cur[0]
        if d != 1 and d != -1:
            raise NotABasis(i)
        if sign == 0:
            sign = d
        elif d != sign:
            raise OrientationFlip(i)
        prev = cur
    return MultiFan(vs)


def validate_family(raw_fans) -> MultiFanFamily:
    """Validate a list of raw vector lists as a family."""
    fans = tuple(validate_multifan(r) for r in raw_fans)
    if not fans:
        raise DomainError("a family needs at least one fan")
    return MultiFanFamily(fans)


def orientation(fan: MultiFan) -> int:
    """+1 (counterclockwise) or -1 (clockwise): the shared determinant sign."""
    return lattice.det2(fan.vectors[-1], fan.vectors[0])


def self_intersections(fan: MultiFan) -> list[int]:
    """The integer a[i] with v[i+1] = -a[i]*v[i] - v[i-1], at every index.

    a[i] is the self-intersection number of the invariant sphere joining
    fixed points i and i+1; a[i] = -1 marks a blow-downable sphere.
    """
    vs = fan.vectors
    k = len(vs)
    eps = orientation(fan)
    return [eps * lattice.det2(vs[(i + 1) % k], vs[i - 1]) for i in range(k)]


def blow_up_fan(fan: MultiFan, i: int) -> MultiFan:
    """Insert v[i] + v[i+1] between cyclic positions i and i+1."""
    vs = fan.vectors
    k = len(vs)
    if not 0 <= i < k:
        raise IndexOutOfRange(i, k)
    inserted = lattice.add(vs[i], vs[(i + 1) % k])
    return validate_multifan(vs[: i + 1] + (inserted,) + vs[i + 1 :])


def blow_down_fan(fan: MultiFan, i: int) -> MultiFan:
    """Delete v[i]; applies only when v[i] = v[i-1] + v[i+1]."""
    vs = fan.vectors
    k = len(vs)
    if not 0 <= i < k:
        raise IndexOutOfRange(i, k)
    if vs[i] != lattice.add(vs[i - 1], vs[(i + 1) % k]):
        raise NotBlowDownable(i)
    return validate_multifan(vs[:i] + vs[i + 1 :])


def blow_up_in_family(fam: MultiFanFamily, fan_index: int, i: int) -> MultiFanFamily:
    """Blow up one member fan, leaving the others untouched."""
    if not 0 <= fan_index < len(fam.fans):
        raise IndexOutOfRange(fan_index, len(fam.fans))
    new = blow_up_fan(fam.fans[fan_index], i)
    return MultiFanFamily(fam.fans[:fan_index] + (new,) + fam.fans[fan_index + 1 :])


def blow_down_in_family(fam: MultiFanFamily, fan_index: int, i: int) -> MultiFanFamily:
    """Blow down one member fan, leaving the others untouched."""
    if not 0 <= fan_index < len(fam.fans):
        raise IndexOutOfRange(fan_index, len(fam.fans))
    new = blow_down_fan(fam.fans[fan_index], i)
    return MultiFanFamily(fam.fans[:fan_index] + (new,) + fam.fans[fan_index + 1 :])


def is_minimal_fan(fan: MultiFan) -> bool:
    """True iff every vector is a unit vector.

    Admissibility then forces the repeating pattern (1,0), (0,±1), (-1,0),
    (0,∓1), so a minimal fan has length 4s; that consequence is asserted.
    """
    if any(lattice.norm_sq(v) != 1 for v in fan.vectors):
        return False
    if len(fan.vectors) % 4 != 0:
        raise InternalInconsistency(
            f"unit-vector fan of length {len(fan.vectors)} not divisible by 4")
    return True


def winding_number(fan: MultiFan, xi: Vec | None = None) -> int:
    """Number of revolutions the cyclic sequence makes around the origin.

    Counts the indices where the sequence crosses from the strictly negative
    to the strictly positive side of a direction xi that pairs nonzero with
    every vector.  Each revolution enters the positive side exactly once, so
    the count does not depend on the admissible xi chosen, and is always
    reported positive regardless of turning direction.
    """
    vs = fan.vectors
    if xi is None:
        xi = lattice.generic_direction(vs)
    sides = [lattice.dot(v, xi) for v in vs]
    if any(s == 0 for s in sides):
        raise PreconditionViolated(f"direction {xi} is orthogonal to a fan vector")
    return sum(1 for i in range(len(vs)) if sides[i - 1] < 0 and sides[i] > 0)


def _rotations(vs):
    return [vs[i:] + vs[:i] for i in range(len(vs))]


def canonical_form(fan: MultiFan, mode: str = ROTATIONS) -> MultiFan:
    """Deterministic representative of a fan's equivalence orbit.

    ``rotations`` minimizes over cyclic rotations only; ``full`` also admits
    the reversed traversal with negated vectors (the same cycle of spheres
    walked backwards).  Vectors compare lexicographically by (x, y); the
    specific order is arbitrary but fixed.
    """
    if mode not in _MODES:
        raise DomainError(f"unknown canonical-form mode {mode!r}")
    candidates = _rotations(fan.vectors)
    if mode == ROTATIONS_AND_REVERSAL:
        reversed_negated = tuple(lattice.neg(v) for v in reversed(fan.vectors))
        candidates.extend(_rotations(reversed_negated))
    return MultiFan(min(candidates))


def fans_equivalent(f1: MultiFan, f2: MultiFan, mode: str = ROTATIONS) -> bool:
    """True iff the two fans share a canonical form under the given mode."""
    return canonical_form(f1, mode) == canonical_form(f2, mode)


def family_union(a: MultiFanFamily, b: MultiFanFamily) -> MultiFanFamily:
    """Concatenate two families; every additive invariant adds up."""
    return MultiFanFamily(a.fans + b.fans)
