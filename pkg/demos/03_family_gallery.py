"""Gallery of the closed-form families and their threshold behaviour.

Every known rational unicuspidal plane curve comes from one of four
constructions, stratified by the logarithmic Kodaira dimension of the
curve complement.  Curves with complement dimension below 2 always have
log canonical threshold below 3/d; the Orevkov curves (dimension 2) are
the only known ones above it.
"""

from fractions import Fraction

from cuspidal import (
    ams_all,
    ams_curve,
    format_newton,
    kashiwara_curve,
    ordered_factorization_count,
    orevkov_curve,
    tono_curve,
)


def show(record, label):
    side = "<" if record.lct < Fraction(3, record.degree) else ">"
    print(
        f"  {label:<28} d={record.degree:<4} {format_newton(record.newton):<26} "
        f"lct={record.lct} {side} 3/d, self-int {record.self_intersection}"
    )


print("AMS curves: one per ordered factorization of the degree")
for factors in ((12,), (2, 6), (6, 2), (3, 2, 2), (2, 3, 2), (2, 2, 3)):
    show(ams_curve(factors), f"factors {factors}")
print(f"  ... {ordered_factorization_count(12)} in total at degree 12 "
      f"({len(ams_all(12))} generated)\n")

print("Kashiwara curves (complement dimension -infinity, Fibonacci data)")
show(kashiwara_curve("kashiwara-ii-sp", 1), "special, l=1")
show(kashiwara_curve("kashiwara-ii-ge", 0), "generic, l=0")
show(kashiwara_curve("kashiwara-iiplus-sp", 0, (1,)), "extended special (0; 1)")
print()

print("Tono curves (complement dimension 1)")
show(tono_curve("tono-ia", (3,)), "type I(a), a=3")
show(tono_curve("tono-ib", (3, 2)), "type I(b), a=3 s=2")
show(tono_curve("tono-iia", (2,)), "type II(a), n=2")
print()

print("Orevkov curves (complement dimension 2; thresholds above 3/d)")
for k, starred in ((1, False), (1, True), (2, False), (2, True)):
    show(orevkov_curve(k, starred), f"k={k}{' starred' if starred else ''}")
