"""Generate the two figure datasets through the CLI layer.

Writes fig3.csv (entanglement advantage ratio vs eta) and fig4.csv
(strategy comparison table at eta = 0.5) into the working directory.
Render them with the companion package:

    render --kind fig3 --in fig3.csv --out fig3.svg
    render --kind fig4 --in fig4.csv --out fig4.svg
"""
from qmetro.cli import main

print("writing fig3.csv (100 grid points, instant)")
main(["fig3", "--out", "fig3.csv"])

print("writing fig4.csv (N = 1..3 to keep this demo quick)")
main(["fig4", "--eta", "0.5", "--n-max", "3", "--out", "fig4.csv"])

for path in ("fig3.csv", "fig4.csv"):
    with open(path) as fh:
        lines = fh.read().splitlines()
    print(f"\n{path}: {len(lines) - 1} rows")
    print("  " + lines[0])
    print("  " + lines[1])
