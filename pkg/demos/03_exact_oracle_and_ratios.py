"""Certify solver quality against the exact oracle on small instances.

The oracle solves max coverage exactly by subset DP (traceability table +
packing recursion), so on graphs of up to 18 vertices we can measure true
approximation ratios.

Run with:  python demos/03_exact_oracle_and_ratios.py
"""

from pathcover import approx1, approx2, exact_max_cover, generate, theoretical_ratio

print("worst-case ratio bound: rho(4) =", theoretical_ratio(4))
print("                        rho(5) = %.4f" % theoretical_ratio(5))
print("rho(k) grows ~0.44k:", [round(theoretical_ratio(k), 2) for k in (4, 6, 8, 12, 24)])

print("\n  n    d   exact  approx1  approx2   ratio1  ratio2")
worst1 = worst2 = 1.0
for n in (10, 13, 16):
    for d in (0.05, 0.15, 0.3):
        for i in range(3):
            inst = generate(4, n, d, i)
            exact, _ = exact_max_cover(inst.graph, 4)
            a1 = approx1(inst.graph, 4).covered
            a2 = approx2(inst.graph).covered
            r1, r2 = exact / a1, exact / a2
            worst1, worst2 = max(worst1, r1), max(worst2, r2)
            print(f"  {n:2d} {d:5.2f}   {exact:3d}     {a1:3d}      {a2:3d}"
                  f"     {r1:5.3f}   {r2:5.3f}")

print(f"\nworst observed: approx1 {worst1:.3f} (bound 2.4), "
      f"approx2 {worst2:.3f} (bound 2.0)")
