"""Characteristic polynomials of the family intersection matrices against
the closed forms."""

import argparse
from dataclasses import dataclass

from quasitrees.chords import chord_diagram_from_bouquet, intersection_matrix
from quasitrees.families import MIN_N, fibonacci_poly, make_family, predicted_charpoly
from quasitrees.linalg import char_poly, char_poly_by_minors


@dataclass
class Config:
    max_n: int = 10


def run(cfg: Config) -> bool:
    ok = True
    for fid in ("F", "Fp", "Fp1", "F1", "W1", "Fpn"):
        lo = 1 if fid == "F" else MIN_N[fid]
        for n in range(lo, cfg.max_n + 1):
            A = intersection_matrix(chord_diagram_from_bouquet(make_family(fid, n)))
            direct = char_poly(A)
            pred = fibonacci_poly(n + 1) if fid == "F" else predicted_charpoly(fid, n)
            same = direct == pred == char_poly_by_minors(A)
            ok &= same
            print(f"{fid:>4} {n:>3}  {'ok ' if same else 'BAD'}  {direct}")
    return ok


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    print("all agree:", run(Config(p.parse_args().max_n)))
