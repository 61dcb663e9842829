"""Independent reference computations backing the test expectations.

Everything here deliberately avoids the library's algorithms: winding
numbers come from a floating-point angle sum, admissibility from literally
solving the recurrence, and basis pairs from an extended-gcd line
parametrization.  Agreement between the package and these oracles is the
evidence the tests rely on.
"""

import math
import random

import acx4


def angle_sum_winding(vectors):
    """Net revolutions of the cyclic sequence, from summed signed turns."""
    total = 0.0
    k = len(vectors)
    for i in range(k):
        x1, y1 = vectors[i]
        x2, y2 = vectors[(i + 1) % k]
        total += math.atan2(x1 * y2 - y1 * x2, x1 * x2 + y1 * y2)
    return abs(round(total / (2 * math.pi)))


def integer_multiple(u, v):
    """The integer a with u == a*v, or None; v must be nonzero."""
    for c in (0, 1):
        if v[c] != 0:
            if u[c] % v[c] != 0:
                return None
            a = u[c] // v[c]
            return a if (a * v[0], a * v[1]) == (u[0], u[1]) else None
    return None


def recurrence_admissible(vectors):
    """Admissibility checked the literal way: every consecutive pair a
    basis, and at each index an integer a with v[i+1] = -a*v[i] - v[i-1]."""
    vs = [tuple(v) for v in vectors]
    k = len(vs)
    if k < 3 or any(v == (0, 0) for v in vs):
        return False
    for i in range(k):
        u, v = vs[i - 1], vs[i]
        if abs(u[0] * v[1] - u[1] * v[0]) != 1:
            return False
    for i in range(k):
        prev, nxt = vs[i - 1], vs[(i + 1) % k]
        target = (nxt[0] + prev[0], nxt[1] + prev[1])  # equals -a * v[i]
        if target != (0, 0) and integer_multiple(target, vs[i]) is None:
            return False
    return True


def extended_gcd(a, b):
    """(g, p, q) with a*p + b*q = g = gcd(a, b)."""
    old_r, r = a, b
    old_p, p = 1, 0
    old_q, q = 0, 1
    while r:
        quot = old_r // r
        old_r, r = r, old_r - quot * r
        old_p, p = p, old_p - quot * p
        old_q, q = q, old_q - quot * q
    return old_r, old_p, old_q


def _line_in_box(x0, y0, a, b, bound):
    # points (x0 + a*t, y0 + b*t) with both coordinates in [-bound, bound]
    lo, hi = -(10 ** 9), 10 ** 9
    for start, coeff in ((x0, a), (y0, b)):
        if coeff == 0:
            if abs(start) > bound:
                return
            continue
        t1 = (-bound - start) / coeff
        t2 = (bound - start) / coeff
        lo = max(lo, math.ceil(min(t1, t2)))
        hi = min(hi, math.floor(max(t1, t2)))
    for t in range(lo, hi + 1):
        yield (x0 + a * t, y0 + b * t)


def basis_pairs_in_box(bound):
    """Every ordered pair (v1, v2) with coordinates in [-bound, bound] and
    determinant ±1, enumerated along the two solution lines per v1."""
    rng = range(-bound, bound + 1)
    for a in rng:
        for b in rng:
            if (a, b) == (0, 0) or math.gcd(a, b) != 1:
                continue
            g, p, q = extended_gcd(a, b)  # a*p + b*q = 1
            for s in (1, -1):
                # a*y2 - b*x2 = s has particular solution (-q*s, p*s)
                for v2 in _line_in_box(-q * s, p * s, a, b, bound):
                    yield (a, b), v2


def enumerate_admissible_fans(k, bound):
    """All admissible fans of length k (3 or 4) with coordinates in the box.

    Complete by construction: the first two vectors range over all in-box
    basis pairs and each later vector is -a*previous - one_before for every
    integer a that keeps it inside the box; each full cycle is accepted by
    the literal recurrence check.
    """
    assert k in (3, 4)
    amax = 2 * bound
    for v1, v2 in basis_pairs_in_box(bound):
        for a in range(-amax, amax + 1):
            v3 = (-a * v2[0] - v1[0], -a * v2[1] - v1[1])
            if not (abs(v3[0]) <= bound and abs(v3[1]) <= bound):
                continue
            if k == 3:
                if recurrence_admissible([v1, v2, v3]):
                    yield (v1, v2, v3)
                continue
            for b in range(-amax, amax + 1):
                v4 = (-b * v3[0] - v2[0], -b * v3[1] - v2[1])
                if not (abs(v4[0]) <= bound and abs(v4[1]) <= bound):
                    continue
                if recurrence_admissible([v1, v2, v3, v4]):
                    yield (v1, v2, v3, v4)


def five_directions(fam):
    """The first five (1, N) directions clearing every vector of a family."""
    vectors = [v for fan in fam.fans for v in fan.vectors]
    out = []
    n = 1
    while len(out) < 5:
        if all(x + n * y != 0 for x, y in vectors):
            out.append((1, n))
        n += 1
    return out


def random_mutation(fam, rng):
    """One random blow-up, or a random blow-down when any sphere allows it."""
    down = [
        (j, i)
        for j, fan in enumerate(fam.fans)
        for i, a in enumerate(acx4.self_intersections(fan))
        if a == -1
    ]
    if down and rng.random() < 0.5:
        j, i = down[rng.randrange(len(down))]
        return acx4.blow_down_in_family(fam, j, i)
    j = rng.randrange(len(fam.fans))
    i = rng.randrange(len(fam.fans[j].vectors))
    return acx4.blow_up_in_family(fam, j, i)


def random_mutated_family(seed, max_blowups=50, mutations=10):
    """The acceptance-scale generator: up to 3 components of random
    orientation, up to `max_blowups` blow-ups, then `mutations` random
    blow-up/blow-down moves."""
    meta = random.Random(seed)
    components = meta.randint(1, 3)
    blowups = meta.randint(0, max_blowups)
    signs = [meta.choice((1, -1)) for _ in range(components)]
    fam = acx4.gen_random_family(seed, components, blowups, signs)
    rng = random.Random((seed << 1) ^ 0xACE)
    for _ in range(mutations):
        fam = random_mutation(fam, rng)
    return fam


def random_winding_fan(seed, winding, max_blowups=12):
    """A single fan of the requested winding number: the unit pattern
    repeated `winding` times, then random blow-ups."""
    rng = random.Random(seed)
    fan = acx4.validate_multifan([(1, 0), (0, 1), (-1, 0), (0, -1)] * winding)
    for _ in range(rng.randint(0, max_blowups)):
        fan = acx4.blow_up_fan(fan, rng.randrange(len(fan.vectors)))
    return fan


def scramble_graph(g, rng):
    """The same graph stored differently: renamed vertices, shuffled vertex
    and edge order, and random edges reversed with negated labels."""
    names = {v: f"w{i}_{rng.randrange(1000)}" for i, v in enumerate(g.vertices)}
    vertices = [names[v] for v in g.vertices]
    rng.shuffle(vertices)
    edges = []
    for e in g.edges:
        if rng.random() < 0.5:
            edges.append((names[e.dst], names[e.src], (-e.label[0], -e.label[1])))
        else:
            edges.append((names[e.src], names[e.dst], e.label))
    rng.shuffle(edges)
    return acx4.validate_graph(vertices, edges)
