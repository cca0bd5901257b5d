"""Timing growth of the pipeline with matrix size and entry size over Z[sqrt10].

Every run is verified against the Z-lattice oracle; the CSV goes to stdout.
Run: python3 demos/scaling.py
"""

from quotring.bench import BenchConfig, run_bench, to_csv

rows = []
for n in (4, 8, 12):
    for bits in (10, 50):
        rows.extend(run_bench(BenchConfig("Zsqrt10", n, bits, "uniform", trials=2, seed=n)))
print(to_csv(rows), end="")

# larger entries grow the modulus, not the number of ring operations
for n in (4, 8, 12):
    sub = [r for r in rows if r["n"] == n]
    print(f"n={n}: " + ", ".join(f"B={r['B']} {r['seconds']}s ({r['modulus_norm_bits']} bit modulus)"
                                 for r in sub))
