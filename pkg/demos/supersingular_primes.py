"""Point counts of the Fermat cubic over small prime fields.

For each good prime the script counts projective points exactly, derives
the trace, checks the Hasse bound, and flags the supersingular primes.
For this curve those are exactly the primes congruent to 2 mod 3, a
pattern the table below makes easy to spot.
"""

from grodeg import MonomialOrder, count_points, parse_polynomial, standard_context

PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]


def main():
    ctx = standard_context(("x", "y", "z"))
    f = parse_polynomial("x^3 + y^3 + z^3", ctx, MonomialOrder.degrevlex(ctx))
    print(f"curve: {f.render()} = 0 in the projective plane")
    print()
    print("  p    points   trace   smooth   supersingular   p mod 3")
    for p in PRIMES:
        r = count_points(f, p)
        ss = {True: "yes", False: "no", None: "-"}[r.supersingular]
        print(f" {p:3d}   {r.count:5d}   {r.trace:+5d}    {str(r.smooth):5s}       {ss:3s}          {p % 3}")
        if r.smooth and not r.hasse_ok:
            raise AssertionError(f"Hasse bound violated at p={p}")
    print()
    print("every smooth row satisfies the Hasse bound |trace| <= 2*sqrt(p),")
    print("and supersingularity lines up with p = 2 mod 3 (p = 3 is bad).")


if __name__ == "__main__":
    main()
