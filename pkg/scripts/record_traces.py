"""Regenerate the recorded CLI transcripts under records/.

Each record is the exact stdout of one CLI invocation on a shipped fixture,
so ``git diff`` after a rerun shows any change in computed verdicts.
"""

import argparse
import io
from pathlib import Path

from softtop.cli import run

ROOT = Path(__file__).resolve().parent.parent
FIX = ROOT / "fixtures"

RECORDS = {
    "converse_t0_validate_tau2.txt": ["validate", "-f", FIX / "converse_t0.json", "-t", "tau2"],
    "converse_t0_permissive_t0.txt": ["separation", "-f", FIX / "converse_t0.json", "--space", "tau1,tau2",
                                      "--axiom", "t0", "--permissive", "--trace"],
    "converse_t0_permissive_t0.json": ["separation", "-f", FIX / "converse_t0.json", "--space", "tau1,tau2",
                                       "--axiom", "t0", "--permissive", "--trace", "--json"],
    "non_topology_validate.txt": ["validate", "-f", FIX / "non_topology.json", "-t", "alpha"],
    "two_topologies_union.txt": ["validate", "-f", FIX / "two_topologies.json", "-t", "union"],
    "two_topologies_sup.txt": ["sup", "-f", FIX / "two_topologies.json", "-t", "tau1", "-t", "tau2"],
    "hereditary_t0.txt": ["separation", "-f", FIX / "hereditary.json", "--space", "tau1,tau2", "--axiom", "t0"],
}


def render(argv) -> tuple[int, str]:
    out = io.StringIO()
    code = run([str(a) for a in argv], out, io.StringIO())
    return code, out.getvalue()


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=ROOT / "records")
    args = p.parse_args()
    args.out.mkdir(exist_ok=True)
    for name, argv in RECORDS.items():
        code, text = render(argv)
        (args.out / name).write_text(text, encoding="utf-8")
        print(f"{name}: exit {code}")


if __name__ == "__main__":
    main()
