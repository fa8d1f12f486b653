"""Regenerate src/nfknots/data/catalog.json from the diagram builders.

The census knot 15n43522 is stored as a frozen PD transcription of a
15-crossing diagram of that knot (validated by determinant and Alexander
polynomial); everything else is emitted from the parametric builders.
"""

import json
import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from nfknots.diagrams.builders import twist_knot, pretzel, whitehead_double_trefoil
from nfknots.diagrams.pd import emit_pd, parse_pd
from nfknots.invariants import alexander_pd, determinant

PD_15N43522 = (
    "X-[19,28,20,29],X-[27,20,28,21],X+[18,14,19,13],X+[14,22,15,21],"
    "X+[2,30,3,29],X-[3,12,4,13],X-[4,17,5,18],X-[16,5,17,6],X+[22,16,23,15],"
    "X+[30,8,1,7],X-[11,6,12,7],X+[8,2,9,1],X-[9,24,10,25],X-[25,10,26,11],"
    "X-[23,26,24,27]"
)


def entry(pd, budget=16):
    return {
        "pd": emit_pd(pd),
        "det": determinant(pd, budget),
        "alexander": alexander_pd(pd).canonical(),
    }


def main():
    knots = {
        "unknot": {"pd": "O", "det": 1, "alexander": "0:1"},
        "5_2": entry(twist_knot(3)),
        "6_1": entry(twist_knot(4)),
        "P(-3,3,1)": entry(pretzel(-3, 3, 1)),
        "15n43522": entry(parse_pd(PD_15N43522)),
        "Wh+T23_2": entry(whitehead_double_trefoil(1)),
        "Wh-T23_2": entry(whitehead_double_trefoil(-1)),
    }
    out = pathlib.Path(__file__).resolve().parents[1] / "src/nfknots/data/catalog.json"
    out.write_text(json.dumps({"version": 1, "knots": knots}, indent=1) + "\n")
    print(f"wrote {out} with {len(knots)} entries")
    for name, rec in knots.items():
        print(f"  {name}: det {rec['det']}")


if __name__ == "__main__":
    main()
