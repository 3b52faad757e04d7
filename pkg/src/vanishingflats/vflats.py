"""Vanishing flats of a function: enumeration, counting identities, closed forms.

A vanishing flat of f is a 2-dimensional flat {x1, x2, x3, x4} (four distinct
points with XOR zero) on which the values of f also XOR to zero. The block set
of all vanishing flats makes (GF(2^n), blocks) a partial quadruple system.
"""

from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
import math

from .gf2n import GF, kloosterman
from .boolfunc import FunctionTable

_SHIFT = 16  # blocks pack four 16-bit point encodings into one int


def _pack(block):
    x1, x2, x3, x4 = sorted(block)
    return ((x1 << _SHIFT * 3) | (x2 << _SHIFT * 2) | (x3 << _SHIFT) | x4)


def _unpack(key):
    mask = (1 << _SHIFT) - 1
    return (key >> _SHIFT * 3 & mask, key >> _SHIFT * 2 & mask,
            key >> _SHIFT & mask, key & mask)


def canonical_block(points):
    """Sorted 4-tuple form of a block; validates the 2-flat conditions."""
    pts = tuple(sorted(points))
    if len(set(pts)) != 4:
        raise ValueError(f"block points must be distinct: {points}")
    if pts[0] ^ pts[1] ^ pts[2] ^ pts[3] != 0:
        raise ValueError(f"points do not form a 2-dimensional flat: {points}")
    return pts


@dataclass
class PartialQuadrupleSystem:
    """The block set of vanishing flats over GF(2^n), canonically sorted."""

    field: GF
    blocks: list

    def __post_init__(self):
        self.blocks = sorted(canonical_block(b) for b in self.blocks)
        if len(set(self.blocks)) != len(self.blocks):
            raise ValueError("duplicate blocks")

    def __len__(self):
        return len(self.blocks)

    def block_set(self):
        return set(self.blocks)

    def blocks_through(self, *points):
        want = set(points)
        return [b for b in self.blocks if want <= set(b)]

    def to_json(self):
        return {"field": self.field.to_json(),
                "block_count": len(self.blocks),
                "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, obj):
        return cls(GF.from_json(obj["field"]), [tuple(b) for b in obj["blocks"]])

    def to_text(self):
        return "\n".join(" ".join(map(str, b)) for b in self.blocks)


def _direction_blocks(f, a):
    """Packed candidate blocks seen along direction a (one emit per direction).

    Points are bucketed by the derivative value; a same-bucket pair
    (x, y) with x < x+a, y < y+a yields the flat {x, x+a, y, y+a}.
    """
    table = f.values
    buckets = defaultdict(list)
    for x in range(len(table)):
        y = x ^ a
        if x < y:
            buckets[table[x] ^ table[y]].append(x)
    out = []
    for xs in buckets.values():
        if len(xs) > 1:
            for x, y in combinations(xs, 2):
                out.append(_pack((x, x ^ a, y, y ^ a)))
    return out


def candidate_blocks(f):
    """All per-direction emits, before deduplication (each flat appears 3 times)."""
    for a in range(1, f.field.order):
        yield from _direction_blocks(f, a)


def enumerate_flats(f, threads=1):
    """The partial quadruple system of f, by direction bucketing."""
    if threads > 1:
        keys = set()
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(lambda a: _direction_blocks(f, a),
                                  range(1, f.field.order)):
                keys.update(chunk)
    else:
        keys = set(candidate_blocks(f))
    pqs = PartialQuadrupleSystem.__new__(PartialQuadrupleSystem)
    pqs.field = f.field
    pqs.blocks = [_unpack(k) for k in sorted(keys)]
    return pqs


def count_via_spectrum(f):
    """Block count from the delta_f(a, b) values alone, without materializing.

    Each flat is derived exactly three times over the (a, b) pairs, so the
    count is (1/3) * sum over (a, b) of C(delta_f(a,b)/2, 2).
    """
    total = 0
    table = f.values
    for a in range(1, f.field.order):
        hist = Counter(table[x ^ a] ^ table[x] for x in range(len(table)))
        for m in hist.values():
            total += math.comb(m // 2, 2)
    if total % 3 != 0:
        raise ArithmeticError("triple-cover identity violated: count not divisible by 3")
    return total // 3


def flats_through_pair(f, x, a):
    """Number of vanishing flats containing both x and x+a: delta_f(a,b)/2 - 1."""
    if a == 0:
        raise ValueError("direction a must be nonzero")
    b = f[x ^ a] ^ f[x]
    return f.delta(a, b) // 2 - 1


def bounds(f, is_monomial):
    """(lower, upper) bounds on the block count.

    Monomial non-APN functions need at least ceil((2^n - 1)/3) flats, i.e.
    (2^n + 1)/3 for odd n; for other functions the lower bound is 0. The upper
    bound is the total number of 2-flats, attained by x^1.
    """
    n = f.field.n
    q = f.field.order
    upper = (q // 4) * ((q // 2) - 1) * (q - 1) // 3
    lower = 0
    if is_monomial and f.spectrum().uniformity > 2:
        lower = (q + 1) // 3 if n % 2 else (q - 1) // 3
    return lower, upper


def total_flats(gf):
    """|B_n|, the number of all 2-dimensional flats in GF(2^n)."""
    q = gf.order
    return (q // 4) * ((q // 2) - 1) * (q - 1) // 3


def map_blocks(pqs, point_map):
    """Apply a point permutation to every block and re-canonicalize."""
    q = pqs.field.order
    if callable(point_map):
        perm = [point_map(x) for x in range(q)]
    else:
        perm = list(point_map)
    if sorted(perm) != list(range(q)):
        raise ValueError("point map is not a bijection on the field")
    return PartialQuadrupleSystem(
        pqs.field, [tuple(perm[x] for x in b) for b in pqs.blocks])


def isomorphism_witness_check(p, q, point_map):
    """True iff the point permutation maps the blocks of p onto the blocks of q."""
    if p.field != q.field:
        raise ValueError("partial quadruple systems live over different fields")
    return map_blocks(p, point_map).blocks == q.blocks


# Known vanishing-flat counts of x^d over GF(2^n), one representative d per
# equivalence class (d ~ 2d, and d ~ d^-1 when invertible). Golden data for
# the acceptance tests and the `table table2` command.
KNOWN_MONOMIAL_COUNTS = {
    2: [(1, 1)],
    3: [(1, 14), (3, 0)],
    4: [(1, 140), (3, 0), (5, 20), (7, 5)],
    5: [(1, 1240), (3, 0), (5, 0), (15, 0)],
    6: [(1, 10416), (3, 0), (5, 336), (7, 84), (9, 1008), (11, 336),
        (15, 126), (21, 2520), (27, 1260), (31, 21)],
    7: [(1, 85344), (3, 0), (5, 0), (7, 889), (9, 0), (11, 0), (19, 889),
        (21, 889), (23, 0), (63, 0)],
    8: [(1, 690880), (3, 0), (5, 5440), (7, 3655), (9, 0), (11, 5185),
        (13, 5185), (15, 1785), (17, 38080), (19, 4420), (21, 2040),
        (23, 4930), (25, 4420), (27, 15810), (31, 2380), (39, 0),
        (43, 27625), (45, 1785), (51, 66300), (53, 7480), (55, 5440),
        (63, 3570), (85, 174760), (87, 24480), (95, 2380), (111, 1020),
        (119, 41905), (127, 85)],
}


class MonomialFamily(str, Enum):
    """Power-function families with known closed-form vanishing-flat counts."""

    GOLD = "gold"              # d = 2^t + 1
    KASAMI = "kasami"          # d = 2^(2t) - 2^t + 1
    INVERSE = "inverse"        # d = 2^n - 2
    NIHO = "niho"              # n = 4t, d = 2^(2t) + 2^t + 1
    D7 = "d7"                  # d = 7
    ODD_LOW = "odd-low"        # d = 2^(n-2) - 1 or 2^((n-1)/2) - 1, n odd
    HALF = "half"              # d = 2^(n/2) - 1, n even
    HALF_PLUS = "half-plus"    # d = 2^(n/2 + 1) - 1, n even
    ODD_PLUS = "odd-plus"      # d = 2^((n+3)/2) - 1, n odd
    TWIN_ODD_T = "twin-odd-t"  # n = 2t, t odd, d = 2^t + 2^((t+1)/2) + 1 or 2^(t+1) + 3


def _need(condition, message):
    if not condition:
        raise ValueError(f"side condition violated: {message}")


def _divides(a, b):
    return 1 if b % a == 0 else 0


def closed_form_count(family, n, t=None):
    """Exact closed-form vanishing-flat count for the given monomial family.

    All arithmetic is exact-rational; a non-integer result signals a
    transcription bug and raises.
    """
    family = MonomialFamily(family)
    q1 = (1 << n) - 1
    result = None

    if family is MonomialFamily.GOLD:
        _need(n >= 2, "gold requires n >= 2")
        _need(t is not None and 1 <= t <= n // 2, "gold requires 1 <= t <= n/2")
        s = math.gcd(n, t)
        result = Fraction((1 << (n - 2)) * ((1 << (s - 1)) - 1) * q1, 3)
    elif family is MonomialFamily.KASAMI:
        _need(t is not None and 2 <= t <= n // 2, "kasami requires 2 <= t <= n/2")
        _need(n != 3 * t, "kasami requires n != 3t")
        s = math.gcd(n, t)
        _need((n // s) % 2 == 1, "kasami requires n/gcd(n,t) odd")
        result = Fraction((1 << (n - 2)) * ((1 << (s - 1)) - 1) * q1, 3)
    elif family is MonomialFamily.INVERSE:
        _need(n % 2 == 0, "inverse count requires n even")
        result = Fraction(q1, 3)
    elif family is MonomialFamily.NIHO:
        _need(t is not None and n == 4 * t, "requires n = 4t")
        result = Fraction(((1 << (n - 3)) - (1 << (3 * t - 3))) * q1, 3)
    elif family is MonomialFamily.D7:
        _need(n >= 6, "d = 7 row requires n >= 6")
        w4 = _divides(2, n)
        k = kloosterman(n)
        result = (Fraction((1 << (n - 2)) + 1 - 3 * w4, 6)
                  + Fraction((-1) ** n * k, 8)) * q1
    elif family is MonomialFamily.ODD_LOW:
        # Table header admits n >= 6 but the row needs n odd; enabled for odd n >= 7.
        _need(n % 2 == 1 and n >= 7, "requires n odd, n >= 7")
        w8 = _divides(3, n)
        k = kloosterman(n)
        result = (Fraction((1 << (n - 1)) - 3 - (-1) ** n * 5, 12)
                  + Fraction((-1) ** n * k, 8) + w8) * q1
    elif family is MonomialFamily.HALF:
        _need(n % 2 == 0 and n >= 6, "requires n even, n >= 6")
        w4 = 1 - _divides(4, n)
        h = n // 2
        result = Fraction((((1 << (h - 1)) - 1) * ((1 << (h - 2)) - 1) + w4) * q1, 3)
    elif family is MonomialFamily.HALF_PLUS:
        _need(n % 2 == 0 and n >= 6, "requires n even, n >= 6")
        h = n // 2
        result = Fraction((1 << (h - 2)) * ((1 << (h - 1)) - 1) * q1, 3)
    elif family is MonomialFamily.ODD_PLUS:
        _need(n % 2 == 1 and n >= 7, "requires n odd, n >= 7")
        k = kloosterman(n)
        result = (Fraction((1 << (n - 2)) + 1, 6) - Fraction(k, 8)) * q1
    elif family is MonomialFamily.TWIN_ODD_T:
        _need(n % 2 == 0, "requires n = 2t")
        t = n // 2
        _need(t >= 5 and t % 2 == 1, "requires t >= 5 odd")
        result = Fraction((1 << (n - 2)) * q1, 3)

    if result.denominator != 1:
        raise ArithmeticError(f"closed form for {family} at n={n} is not an integer: {result}")
    return int(result)


def family_exponent(family, n, t=None):
    """A representative exponent d for the family at the given parameters."""
    family = MonomialFamily(family)
    if family is MonomialFamily.GOLD:
        return (1 << t) + 1
    if family is MonomialFamily.KASAMI:
        return (1 << (2 * t)) - (1 << t) + 1
    if family is MonomialFamily.INVERSE:
        return (1 << n) - 2
    if family is MonomialFamily.NIHO:
        return (1 << (2 * t)) + (1 << t) + 1
    if family is MonomialFamily.D7:
        return 7
    if family is MonomialFamily.ODD_LOW:
        return (1 << (n - 2)) - 1
    if family is MonomialFamily.HALF:
        return (1 << (n // 2)) - 1
    if family is MonomialFamily.HALF_PLUS:
        return (1 << (n // 2 + 1)) - 1
    if family is MonomialFamily.ODD_PLUS:
        return (1 << ((n + 3) // 2)) - 1
    if family is MonomialFamily.TWIN_ODD_T:
        t = n // 2
        return (1 << (t + 1)) + 3
    raise ValueError(family)


def twin_odd_t_exponents(n):
    """Both exponents sharing the twin-odd-t spectrum: 2^t + 2^((t+1)/2) + 1
    and 2^(t+1) + 3, for n = 2t with t odd (verified by brute force)."""
    t = n // 2
    return (1 << t) + (1 << ((t + 1) // 2)) + 1, (1 << (t + 1)) + 3
