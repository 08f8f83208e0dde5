import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from qnetagg.model import Channel, MultiplexConfiguration, Photon, QrsCode

CODE_CHOICES = [(3, 2), (5, 3), (5, 4), (7, 4), (7, 5), (7, 6), (11, 9), (11, 10)]


def random_configuration(rng: random.Random, max_photons: int = 20) -> MultiplexConfiguration:
    """Random valid configuration, including shared photons and withheld qudits."""
    while True:
        d, k = rng.choice(CODE_CHOICES)
        code = QrsCode(d, k)
        withheld = rng.randint(0, min(code.tolerance(), 2))
        sent = d - withheld
        qb = code.qubits_per_qudit()

        chunks: list[tuple[int, int]] = []
        for qudit in range(sent):
            remaining = qb
            while remaining:
                take = rng.randint(1, remaining)
                chunks.append((qudit, take))
                remaining -= take
        rng.shuffle(chunks)

        groups: list[list[tuple[int, int]]] = []
        i = 0
        while i < len(chunks):
            group = [chunks[i]]
            i += 1
            while (
                i < len(chunks)
                and len(group) < 3
                and rng.random() < 0.35
                and chunks[i][0] not in {g[0] for g in group}
            ):
                group.append(chunks[i])
                i += 1
            groups.append(group)
        if len(groups) > max_photons:
            continue

        channels = tuple(
            Channel(f"c{j}", rng.uniform(0.05, 1.0)) for j in range(rng.randint(1, 3))
        )
        photons = tuple(
            Photon(channels[rng.randrange(len(channels))].id, tuple(group))
            for group in groups
        )
        return MultiplexConfiguration(code, channels, photons, withheld)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
