"""Table of gadget sizes: G_n vs its upper bound, and D_k built vs the published recurrence."""

from cfgeo.generators import dk_construction_size, gbar_closed_form, gbar_recurrence, recurrence_dk_paper, recurrence_gn

print(f"{'n':>2} {'|G_n|':>22} {'Gbar_n':>22} {'closed form':>14}")
for n in range(1, 13):
    print(f"{n:>2} {recurrence_gn(n):>22} {gbar_recurrence(n):>22} {gbar_closed_form(n):>14.6g}")
print()
print(f"{'k':>2} {'D_k built':>14} {'recurrence':>12} {'ratio':>8}")
for k in range(1, 7):
    built, rec = dk_construction_size(k), recurrence_dk_paper(k)
    print(f"{k:>2} {built:>14} {rec:>12} {built / rec:8.2f}")
