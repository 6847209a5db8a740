"""Print new-generator counts per degree for every spec file in specs/.

    python scripts/probe_sweep.py --max-degree 7
"""

import argparse
from pathlib import Path

from hopfinv.invariants import probe_generation
from hopfinv.specfile import load_spec

SPECS = Path(__file__).resolve().parent.parent / "specs"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-degree", type=int, default=6)
    args = ap.parse_args()
    for path in sorted(SPECS.glob("*.spec")):
        s = load_spec(path)
        rep = probe_generation(s, args.max_degree, keep_generators=False)
        print(f"{path.stem:16s} {rep.classification.verdict:16s} dims={rep.dims} new={rep.new_gens}")
        print(f"{'':16s} {rep.verdict}")


if __name__ == "__main__":
    main()
