import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from basictopo import FIXTURES
from basictopo.sampling import random_ruleset, random_subset

SMALL_FIXTURES = [FIXTURES["r0"], FIXTURES["r1"], FIXTURES["r2"]]
ALL_FIXTURES = list(FIXTURES.values())

DATA_DIR = Path(__file__).parent.parent / "data"
GOLDEN_DIR = Path(__file__).parent / "golden"


def seeded_instances(count: int, seed: int = 2024, max_elements: int = 4):
    """Deterministic pool of (rule set, subset) pairs."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        r = random_ruleset(rng, max_elements=max_elements)
        out.append((r, random_subset(rng, r.carrier)))
    return out
