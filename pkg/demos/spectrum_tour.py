"""A quick tour of differential spectra over small binary fields.

Run with: python3 demos/spectrum_tour.py
"""

from vanishingflats import GF, FunctionTable


def show(gf, d):
    f = FunctionTable.from_monomial(gf, d)
    spec = f.spectrum()
    q1 = gf.order - 1
    print(f"x^{d} over GF(2^{gf.n}):")
    print(f"  uniformity {spec.uniformity}"
          f"{'  (APN)' if spec.uniformity == 2 else ''}")
    for k, l in spec.csv_rows():
        w = f"  w_{k} = {l // q1}" if l % q1 == 0 else ""
        print(f"  l_{k} = {l}{w}")
    print()


def main():
    gf8 = GF(3)
    show(gf8, 3)  # the cube map is APN here

    gf64 = GF(6)
    show(gf64, 9)   # Gold exponent with gcd(6, 3) = 3: uniformity 8
    show(gf64, 62)  # the inverse function: uniformity 4 at even n
    show(gf64, 7)

    # the per-direction view: monomials look the same along every direction
    f = FunctionTable.from_monomial(gf64, 5)
    per = f.spectrum().per_direction
    print(f"x^5 per-direction uniformities: {sorted(set(per.values()))}")
    print(f"critical directions: {len(f.critical_directions())} of {gf64.order - 1}")


if __name__ == "__main__":
    main()
