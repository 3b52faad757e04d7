"""Low-weight codeword counts of the cyclic codes attached to x^d.

The binary cyclic code of length 2^n - 1 with zeroes alpha and alpha^d has a
two-row parity-check matrix whose columns are (alpha^i, alpha^(d i)). Its
weight-3 codewords correspond to vanishing flats of x^d through 0, and its
weight-4 codewords to vanishing flats avoiding 0. Prepending the zero column
generalizes the weight-4 correspondence to arbitrary f.
"""

from dataclasses import dataclass

from .gf2n import GF
from .boolfunc import FunctionTable
from . import vflats

# brute-force enumeration limits; beyond them use the flat-based path
MAX_N_WEIGHT3 = 8
MAX_N_WEIGHT4 = 6


@dataclass
class ParityCheckSpec:
    """Two-row parity check: labels are the coordinate field elements, images
    their values under x^d (cyclic case) or f (generalized case)."""

    field: GF
    labels: list
    images: list

    def __post_init__(self):
        if len(self.labels) != len(self.images):
            raise ValueError("label and image rows must have equal length")
        expected = {self.field.order - 1, self.field.order}
        if len(self.labels) not in expected:
            raise ValueError(f"row length must be one of {sorted(expected)}")

    @classmethod
    def cyclic(cls, gf, d):
        """Length 2^n - 1, coordinates alpha^0 .. alpha^(2^n - 2)."""
        alpha = gf.primitive_element()
        labels = [1]
        for _ in range(gf.order - 2):
            labels.append(gf.mul(labels[-1], alpha))
        images = [gf.pow(x, d) for x in labels]
        return cls(gf, labels, images)

    @classmethod
    def generalized(cls, gf, f):
        """Length 2^n: the cyclic coordinates prefixed by the zero column."""
        alpha = gf.primitive_element()
        labels = [0, 1]
        for _ in range(gf.order - 2):
            labels.append(gf.mul(labels[-1], alpha))
        return cls(gf, labels, [f[x] for x in labels])


def weight_counts_from_flats(d, gf):
    """(N3, N4): flats of x^d through 0 and avoiding 0, by enumeration."""
    pqs = vflats.enumerate_flats(FunctionTable.from_monomial(gf, d))
    n3 = sum(1 for b in pqs.blocks if b[0] == 0)
    return n3, len(pqs) - n3


def direct_low_weight_counts(spec, max_weight):
    """Brute-force weight-3/4 codeword counts from the parity-check rows.

    Supports are enumerated by solving the first row for the last coordinate
    (so candidate subsets already sum to zero there) and checking the second
    row. Serves as the independent oracle for the flat-based counts.
    """
    if max_weight not in (3, 4):
        raise ValueError("max_weight must be 3 or 4")
    n = spec.field.n
    limit = MAX_N_WEIGHT4 if max_weight == 4 else MAX_N_WEIGHT3
    if n > limit:
        raise ValueError(f"direct enumeration capped at n <= {limit} for "
                         f"weight {max_weight}; use the flat-based counts instead")

    labels, images = spec.labels, spec.images
    index_of = {lab: i for i, lab in enumerate(labels)}
    m = len(labels)
    counts = {3: 0, 4: 0}

    for i in range(m):
        for j in range(i + 1, m):
            third = labels[i] ^ labels[j]
            k = index_of.get(third)
            if k is not None and k > j and images[i] ^ images[j] ^ images[k] == 0:
                counts[3] += 1

    if max_weight == 4:
        for i in range(m):
            for j in range(i + 1, m):
                lab_ij = labels[i] ^ labels[j]
                img_ij = images[i] ^ images[j]
                for k in range(j + 1, m):
                    fourth = lab_ij ^ labels[k]
                    l = index_of.get(fourth)
                    if l is not None and l > k and img_ij ^ images[k] ^ images[l] == 0:
                        counts[4] += 1
        return counts
    return {3: counts[3]}


def generalized_weight4_count(f):
    """Weight-4 codeword count of the generalized (length 2^n) code: equals the
    number of vanishing flats of f."""
    return len(vflats.enumerate_flats(f))


def report(gf, d, method="flats"):
    """JSON-ready weight report for the cyclic code of x^d."""
    out = {"n": gf.n, "d": d, "method": method}
    if method in ("flats", "both"):
        out["N3"], out["N4"] = weight_counts_from_flats(d, gf)
    if method in ("direct", "both"):
        direct = direct_low_weight_counts(ParityCheckSpec.cyclic(gf, d), 4)
        if method == "direct":
            out["N3"], out["N4"] = direct[3], direct[4]
        else:
            out["direct_N3"], out["direct_N4"] = direct[3], direct[4]
            out["agree"] = (out["N3"], out["N4"]) == (direct[3], direct[4])
    return out
