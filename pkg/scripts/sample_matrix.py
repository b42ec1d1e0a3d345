"""
Sample Matrix Utilities for parinv

This module generates random rational matrices supported on the nilradical
of a composition, in the JSON grid format read by `parinv canonicalize`.
"""

import json
import random
import sys
from fractions import Fraction
from typing import List, Optional

from parinv.roots import Composition, roots_of_nilradical


def generate_sample_matrix(
    comp: Composition,
    bound: int = 5,
    seed: Optional[int] = None,
    integral: bool = True,
) -> List[List[str]]:
    """
    Generate a random matrix supported on M with nonzero entries.

    Args:
        comp: The block composition
        bound: Entries are drawn from [-bound, bound] without zero
        seed: Seed for reproducible samples
        integral: If False, entries get denominators up to 3

    Returns:
        List[List[str]]: n x n grid of "p/q" strings
    """
    rng = random.Random(seed)
    n = comp.n
    grid = [["0"] * n for _ in range(n)]

    for root in sorted(roots_of_nilradical(comp)):
        value = Fraction(rng.randint(1, bound) * rng.choice((-1, 1)))
        if not integral:
            value /= rng.randint(1, 3)
        grid[root.i - 1][root.j - 1] = str(value)

    return grid


if __name__ == "__main__":
    blocks = sys.argv[1] if len(sys.argv) > 1 else "2,1,3,2"
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else None
    print(json.dumps(generate_sample_matrix(Composition.parse(blocks), seed=seed)))
