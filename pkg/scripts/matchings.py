"""Perfect matchings of the ladders P2 x P_n and P2 x T_n."""

import argparse
from dataclasses import dataclass

from quasitrees.families import fib, lucas
from quasitrees.matchings import caterpillar, count_perfect_matchings, grid_product, path_graph


@dataclass
class Config:
    max_n: int = 12


def run(cfg: Config):
    print(f"{'n':>3} {'P2xPn':>7} {'f(n+1)':>7} {'P2xTn':>7} {'l(n-1)':>7}")
    for n in range(3, cfg.max_n + 1):
        p = count_perfect_matchings(grid_product(path_graph(n)))
        t = count_perfect_matchings(grid_product(caterpillar(n)))
        print(f"{n:>3} {p:>7} {fib(n + 1):>7} {t:>7} {lucas(n - 1):>7}")


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    run(Config(p.parse_args().max_n))
