"""Incidence counts Z(Q[1, n]) against the main term 16/3 n^(3/4)."""

import math

from floorq.intervals import incidence_stats

print("n,z_total,ratio,deviation_over_sqrt_n,z_plus,z_minus")
for e in range(2, 7):
    for n in (10**e, 3 * 10**e):
        if n > 10**6:
            continue
        st = incidence_stats(n)
        main = 16 / 3 * n**0.75
        print(
            f"{n},{st.z_total},{st.z_total / main:.5f},"
            f"{abs(st.z_total - main) / math.sqrt(n):.4f},{st.z_plus},{st.z_minus}"
        )
