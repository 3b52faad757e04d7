"""Value tables of functions GF(2^n) -> GF(2^n) and their derivative statistics."""

from collections import Counter
from dataclasses import dataclass, field

from .gf2n import GF


class FunctionTable:
    """A function f: GF(2^n) -> GF(2^n) stored as a full value table."""

    __slots__ = ("field", "values")

    def __init__(self, gf, values):
        values = list(values)
        if len(values) != gf.order:
            raise ValueError(f"table must have {gf.order} entries, got {len(values)}")
        for v in values:
            if not 0 <= v < gf.order:
                raise ValueError(f"table entry {v} out of range for {gf!r}")
        self.field = gf
        self.values = values

    def __getitem__(self, x):
        return self.values[x]

    def __eq__(self, other):
        return (isinstance(other, FunctionTable)
                and self.field == other.field and self.values == other.values)

    def __repr__(self):
        return f"FunctionTable({self.field!r}, <{len(self.values)} values>)"

    @classmethod
    def from_monomial(cls, gf, d):
        """The power function x^d (d >= 1)."""
        if d < 1:
            raise ValueError("monomial exponent must be positive")
        return cls(gf, [gf.pow(x, d) for x in gf.elements()])

    @classmethod
    def from_univariate(cls, gf, terms):
        """Pointwise sum of monomials c * x^e for (c, e) in terms."""
        values = [0] * gf.order
        for c, e in terms:
            gf._check(c)
            if e < 0:
                raise ValueError("exponents must be non-negative")
            for x in gf.elements():
                values[x] ^= gf.mul(c, gf.pow(x, e))
        return cls(gf, values)

    def derivative(self, a):
        """Value table of x -> f(x+a) + f(x)."""
        if a == 0:
            raise ValueError("direction a must be nonzero")
        self.field._check(a)
        t = self.values
        return [t[x ^ a] ^ t[x] for x in range(len(t))]

    def delta(self, a, b):
        """delta_f(a, b) = #{x : f(x+a) + f(x) = b}."""
        self.field._check(b)
        return self.derivative(a).count(b)

    def image_set(self, a):
        """E_f(a), the image set of the derivative along a."""
        return set(self.derivative(a))

    def is_partially_apn(self, a):
        """True iff delta_f(a) = 2, i.e. the derivative along a is 2-to-1."""
        return max(Counter(self.derivative(a)).values()) == 2

    def spectrum(self):
        """Full differential spectrum; one bucketing pass per direction."""
        n_elems = self.field.order
        counts = Counter()
        per_direction = {}
        for a in range(1, n_elems):
            hist = Counter(self.derivative(a))
            counts[0] += n_elems - len(hist)
            per_direction[a] = max(hist.values())
            for m in hist.values():
                counts[m] += 1
        return DifferentialSpectrum(
            counts=dict(sorted(counts.items())),
            uniformity=max(per_direction.values()),
            per_direction=per_direction,
        )

    def critical_directions(self):
        """D_f = {a != 0 : delta_f(a) >= 4}; empty iff f is APN."""
        return {a for a in range(1, self.field.order)
                if max(Counter(self.derivative(a)).values()) >= 4}

    def is_permutation(self):
        return sorted(self.values) == list(self.field.elements())

    def to_json(self):
        return {"field": self.field.to_json(), "values": list(self.values)}

    @classmethod
    def from_json(cls, obj):
        return cls(GF.from_json(obj["field"]), obj["values"])


@dataclass
class DifferentialSpectrum:
    """counts maps each even value 2i to its frequency l_{2i} over all (a, b)."""

    counts: dict
    uniformity: int
    per_direction: dict = field(repr=False)

    def to_json(self):
        return {
            "uniformity": self.uniformity,
            "counts": {str(k): v for k, v in self.counts.items()},
            "per_direction": {str(a): d for a, d in sorted(self.per_direction.items())},
        }

    def csv_rows(self):
        """Rows (2i, l_{2i}) in increasing order of 2i."""
        return sorted(self.counts.items())
