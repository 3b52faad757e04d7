"""Covers of GF(2^n) by disjoint affine subspaces built from Gold permutations.

Run with: python3 demos/cover_gallery.py
"""

from vanishingflats import (
    gold_cover,
    theorem8_cover,
    verify_cover,
    verify_nonparallel,
    verify_totally_skew,
    parallel_decomposition,
)


def summarize(name, cover):
    print(f"{name}: {len(cover)} flats of dimension {cover.dimension}")
    print(f"  cover valid:   {verify_cover(cover)}")
    print(f"  nonparallel:   {verify_nonparallel(cover)}")
    print(f"  totally skew:  {verify_totally_skew(cover)}")
    groups = parallel_decomposition(cover)
    sizes = sorted(set(len(g) for g in groups))
    print(f"  parallel classes: {len(groups)} of sizes {sizes}")
    print()


def main():
    trivial, image = gold_cover(6, 2)
    print("the trivial cover is just the cosets of one plane:")
    print(trivial.describe().splitlines()[0])
    print()

    # its image under x^5 is again a cover, and a totally skew one
    summarize("gold_cover(6, 2) image", image)

    # at (9, 3) skewness fails in a structured way: parallel pairs
    _, image93 = gold_cover(9, 3)
    summarize("gold_cover(9, 3) image", image93)

    # the dimension-3 construction restores total skewness
    summarize("theorem8_cover(9, 3)", theorem8_cover(9, 3))


if __name__ == "__main__":
    main()
