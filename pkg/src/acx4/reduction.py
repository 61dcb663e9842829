"""Rewrite any valid family down to unit vectors, logging every move.

Each outer iteration removes the longest vector w of the family (first fan,
first position on ties).  Its neighbors w1, w2 are strictly shorter (two
equally long basis vectors longer than 1 cannot exist), which pins the
sphere's self-intersection a to {-1, 0, +1}, and each case is a short
blow-up/blow-down script:

  a = -1   w equals w1 + w2: one blow-down deletes it.
  a =  0   w2 = -w1: blow up beside w, then blow down w itself, replacing
           it by the strictly shorter of w - w1 and w + w1 (the sign comes
           from reduction_choice, which prefers w - w1 on a tie).
  a = +1   w equals -w1 - w2: blow-ups bracket w with -w2 and -w1, both
           strictly shorter, and a blow-down removes w.

Every iteration strictly shrinks the multiset of squared norms, so the loop
terminates; the engine re-checks that, the case bound on a, and the
admissibility of every rewritten fan as it goes, raising
InternalInconsistency if any of them ever fails.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import lattice
from .errors import (
    DomainError,
    InternalInconsistency,
    MoveInapplicable,
    NotToddOne,
)
from .lattice import Vec
from .multifan import (
    MultiFan,
    MultiFanFamily,
    blow_down_in_family,
    blow_up_in_family,
    is_minimal_fan,
    orientation,
    winding_number,
)

BLOW_UP = "blow_up"
BLOW_DOWN = "blow_down"


@dataclass(frozen=True)
class Move:
    """One rewrite step; the vector is recorded so logs audit themselves.

    For blow-ups the position names the pair (v[i], v[i+1]) by its first
    index and the vector is the inserted sum; for blow-downs the position
    is the deleted index and the vector the deleted value.
    """

    kind: str
    fan_index: int
    position: int
    vector: Vec


@dataclass(frozen=True)
class MoveLog:
    """A replayable witness: replay(initial, moves) == final."""

    initial: MultiFanFamily
    moves: tuple[Move, ...]
    final: MultiFanFamily


def apply_move(fam: MultiFanFamily, move: Move) -> MultiFanFamily:
    """Apply one move, verifying the recorded vector against the rewrite."""
    if move.kind == BLOW_UP:
        new_fam = blow_up_in_family(fam, move.fan_index, move.position)
        got = new_fam.fans[move.fan_index].vectors[move.position + 1]
        if got != move.vector:
            raise DomainError(
                f"recorded vector {move.vector} differs from inserted {got}")
        return new_fam
    if move.kind == BLOW_DOWN:
        fan = fam.fans[move.fan_index] if 0 <= move.fan_index < len(fam.fans) else None
        if fan is not None and (
            not 0 <= move.position < len(fan.vectors)
            or fan.vectors[move.position] != move.vector
        ):
            raise DomainError(
                f"recorded vector {move.vector} is not at position {move.position}")
        return blow_down_in_family(fam, move.fan_index, move.position)
    raise DomainError(f"unknown move kind {move.kind!r}")


def replay(initial: MultiFanFamily, moves) -> MultiFanFamily:
    """Apply a move sequence to a family, failing on the first mismatch."""
    fam = initial
    for i, mv in enumerate(moves):
        try:
            fam = apply_move(fam, mv)
        except DomainError as exc:
            raise MoveInapplicable(i, str(exc)) from exc
    return fam


def _norm_profile(fam: MultiFanFamily):
    # squared norms, sorted descending: the termination metric
    return tuple(
        sorted((lattice.norm_sq(v) for fan in fam.fans for v in fan.vectors),
               reverse=True)
    )


def _longest_position(fam: MultiFanFamily):
    # first (fan, index) holding the strictly largest norm > 1, else None
    best = 1
    where = None
    for j, fan in enumerate(fam.fans):
        for i, (x, y) in enumerate(fan.vectors):
            n = x * x + y * y
            if n > best:
                best = n
                where = (j, i)
    return where


def _iteration_moves(fam: MultiFanFamily, j: int, i: int) -> list[Move]:
    """The move script removing vector i of fan j (the current longest)."""
    vs = fam.fans[j].vectors
    k = len(vs)
    w1 = vs[(i - 1) % k]
    w = vs[i]
    w2 = vs[(i + 1) % k]
    a = orientation(fam.fans[j]) * lattice.det2(w2, w1)
    if a not in (-1, 0, 1):
        raise InternalInconsistency(
            f"self-intersection {a} at the longest vector {w}; neighbors "
            f"{w1}, {w2} should have forced -1 <= a <= 1")
    if a == -1:
        return [Move(BLOW_DOWN, j, i, w)]
    if a == 0:
        if lattice.reduction_choice(w1, w) == -1:
            # insert w - w1 after w; w keeps its index
            return [
                Move(BLOW_UP, j, i, lattice.sub(w, w1)),
                Move(BLOW_DOWN, j, i, w),
            ]
        pair = (i - 1) % k
        w_pos = i + 1 if pair + 1 <= i else i
        return [
            Move(BLOW_UP, j, pair, lattice.add(w, w1)),
            Move(BLOW_DOWN, j, w_pos, w),
        ]
    # a == +1: w1 + w == -w2 and w + w2 == -w1
    pair = (i - 1) % k
    w_pos = i + 1 if pair + 1 <= i else i
    return [
        Move(BLOW_UP, j, pair, lattice.neg(w2)),
        Move(BLOW_UP, j, w_pos, lattice.neg(w1)),
        Move(BLOW_DOWN, j, w_pos, w),
    ]


def reduce_to_minimal(fam: MultiFanFamily) -> tuple[MultiFanFamily, MoveLog]:
    """Drive every vector of the family to a unit vector.

    Returns the minimal family and a replayable log; an already minimal
    family yields an empty log.  Fans are never reordered, merged, or
    dropped, and each keeps its winding number throughout.
    """
    state = fam
    moves = []
    profile = _norm_profile(state)
    while True:
        where = _longest_position(state)
        if where is None:
            break
        step = _iteration_moves(state, *where)
        for mv in step:
            state = apply_move(state, mv)
        moves.extend(step)
        new_profile = _norm_profile(state)
        if not new_profile < profile:
            raise InternalInconsistency(
                "norm profile failed to decrease in an iteration")
        profile = new_profile
    for fan in state.fans:
        if not is_minimal_fan(fan):
            raise InternalInconsistency("reduction ended on a non-unit vector")
    return state, MoveLog(fam, tuple(moves), state)


@dataclass(frozen=True)
class ComplexModel:
    """Names the unit 4-fan a winding-one reduction lands on.

    The final fan equals the pattern (1,0), (0,a), (-1,0), (0,-a) read from
    offset ``rotation``: final.vectors[(rotation + t) % 4] == pattern[t].
    """

    name: str
    a: int
    rotation: int


def normalize_complex(fan: MultiFan) -> tuple[MoveLog, ComplexModel]:
    """Reduce a winding-one fan and identify the 4-vector unit fan reached.

    Winding one is exactly the case describing a complex manifold; the
    minimal target then has four vectors and matches the standard
    product-of-lines action up to rotation and the sign a.
    """
    t = winding_number(fan)
    if t != 1:
        raise NotToddOne(t)
    final_family, log = reduce_to_minimal(MultiFanFamily((fan,)))
    (final,) = final_family.fans
    if len(final.vectors) != 4:
        raise InternalInconsistency(
            f"winding-one reduction ended with {len(final.vectors)} vectors")
    for a in (1, -1):
        pattern = ((1, 0), (0, a), (-1, 0), (0, -a))
        for rotation in range(4):
            if all(final.vectors[(rotation + t_) % 4] == pattern[t_] for t_ in range(4)):
                return log, ComplexModel("CP1 x CP1", a, rotation)
    raise InternalInconsistency("minimal 4-fan does not match the unit pattern")
