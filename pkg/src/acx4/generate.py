"""Seeded random families, grown from unit fans by random blow-ups.

Only blow-ups are applied: families reachable this way are always valid
with no search, and every component keeps winding number one.
"""

from __future__ import annotations

import random

from .errors import DomainError
from .classify import make_minimal_family
from .multifan import MultiFanFamily, blow_up_in_family


def gen_random_family(seed, components: int = 1, blowups: int = 0,
                      signs=None) -> MultiFanFamily:
    """Reproducible family: `components` unit fans plus `blowups` random
    insertions at a uniformly chosen fan and position each."""
    if components < 1:
        raise DomainError(f"components must be >= 1, got {components}")
    if blowups < 0:
        raise DomainError(f"blowups must be >= 0, got {blowups}")
    if signs is None:
        signs = [1] * components
    signs = list(signs)
    if len(signs) != components:
        raise DomainError("signs, when given, must have one entry per component")
    fam = make_minimal_family(signs)
    rng = random.Random(seed)
    for _ in range(blowups):
        j = rng.randrange(len(fam.fans))
        i = rng.randrange(len(fam.fans[j].vectors))
        fam = blow_up_in_family(fam, j, i)
    return fam
