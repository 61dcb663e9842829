"""Exact arithmetic on integer vectors in the plane.

Vectors are plain ``(x, y)`` tuples of Python ints, so nothing here ever
rounds or overflows; repeated blow-ups grow coordinates without bound and
every comparison below stays exact.
"""

from __future__ import annotations

from .errors import InternalInconsistency, PreconditionViolated

Vec = tuple[int, int]


def det2(u: Vec, v: Vec) -> int:
    """Determinant of the 2x2 matrix with rows u and v."""
    return u[0] * v[1] - u[1] * v[0]


def is_basis(u: Vec, v: Vec) -> bool:
    """True iff u and v generate the full integer lattice."""
    return abs(det2(u, v)) == 1


def norm_sq(v: Vec) -> int:
    """Squared Euclidean length; preserves every strict length comparison."""
    return v[0] * v[0] + v[1] * v[1]


def add(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1])


def sub(u: Vec, v: Vec) -> Vec:
    return (u[0] - v[0], u[1] - v[1])


def neg(v: Vec) -> Vec:
    return (-v[0], -v[1])


def dot(u: Vec, v: Vec) -> int:
    return u[0] * v[0] + u[1] * v[1]


def reduction_choice(v1: Vec, v2: Vec) -> int:
    """Sign s in {-1, +1} such that v2 + s*v1 is strictly shorter than v2.

    Requires (v1, v2) to be a lattice basis with norm_sq(v1) < norm_sq(v2);
    at least one sign then always works.  Were both ever to work, the one
    giving the smaller result would win, with -1 on an exact tie, so the
    returned sign is deterministic.
    """
    if not is_basis(v1, v2):
        raise PreconditionViolated(f"reduction_choice: {v1}, {v2} is not a basis")
    target = norm_sq(v2)
    if norm_sq(v1) >= target:
        raise PreconditionViolated(
            f"reduction_choice: need norm_sq({v1}) < norm_sq({v2})")
    n_minus = norm_sq(sub(v2, v1))
    n_plus = norm_sq(add(v2, v1))
    ok_minus = n_minus < target
    ok_plus = n_plus < target
    if not ok_minus and not ok_plus:
        raise InternalInconsistency(
            f"neither v2-v1 nor v2+v1 is shorter than v2 for v1={v1}, v2={v2}")
    if ok_minus and ok_plus:
        return -1 if n_minus <= n_plus else 1
    return -1 if ok_minus else 1


def generic_direction(vectors) -> Vec:
    """Deterministic direction (1, N) not orthogonal to any given vector.

    Scans N = 1, 2, ...; a vector (x, y) rules out at most the single value
    N = -x/y, so the scan succeeds within (number of distinct vectors) + 1
    candidates.
    """
    distinct = set(vectors)
    for n in range(1, len(distinct) + 2):
        if all(x + n * y != 0 for x, y in distinct):
            return (1, n)
    raise InternalInconsistency("generic-direction scan exceeded its bound")
