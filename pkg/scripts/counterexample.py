"""The two-twist bouquet where det(I + A) overcounts quasi-trees."""

import argparse
from dataclasses import dataclass

from quasitrees import deltamatroid as dm
from quasitrees.chords import chord_diagram_from_bouquet, intersection_matrix
from quasitrees.linalg import det_exact, identity_plus, principal_minor
from quasitrees.ribbon import parse_signed_rotation, quasi_tree_count


@dataclass
class Config:
    rotation: str = "-1,-2,3,1,2,4,3,4"


def run(cfg: Config):
    B = parse_signed_rotation(cfg.rotation)
    A = intersection_matrix(chord_diagram_from_bouquet(B))
    D = dm.from_ribbon_graph(B)
    print("rotation:", cfg.rotation)
    print("A(B):")
    for row in A:
        print("  " + " ".join(f"{x:>2}" for x in row))
    print("quasi-trees:", quasi_tree_count(B))
    print("det(I + A):", det_exact(identity_plus(A)))
    print("feasible sets:", " ".join("{" + ",".join(map(str, s)) + "}" for s in D.sets()))
    n = B.num_edges
    print("nonzero principal minors that are not quasi-trees:")
    qt = set(D.feasible)
    for mask in range(1 << n):
        X = [i for i in range(n) if mask >> i & 1]
        d = principal_minor(A, X)
        if d and mask not in qt:
            print(f"  {{{','.join(str(B.labels[i]) for i in X)}}}: {d}")
    singles = min(sum(1 for s in dm.twist(D, F).sets() if len(s) == 1) for F in D.sets())
    print("fewest singletons after twisting by a feasible set:", singles)


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--rotation", default=Config.rotation,
                   help="signed rotation; write --rotation=-1,... when it starts with a minus")
    run(Config(p.parse_args().rotation))
