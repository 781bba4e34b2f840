import random
from pathlib import Path

import pytest

from crux.core import make_pair
from crux.grid import empty_grid, legal_placements, place, remove_last

FIXTURES = Path(__file__).parent / "fixtures"

# Answer pools used across grid tests and the acceptance suite.
ITALIAN_30 = [
    "CASA", "SCUOLA", "LIBRO", "PENNA", "CARTA", "SCIENZA", "STORIA", "ARTE",
    "MUSICA", "TEATRO", "CINEMA", "NUMERO", "PAROLA", "LETTERA", "MONDO",
    "TERRA", "ACQUA", "FUOCO", "ARIA", "LUCE", "NOTTE", "GIORNO", "STRADA",
    "PONTE", "FIUME", "MONTE", "VALLE", "CAMPO", "FIORE", "ALBERO",
]

ITALIAN_20 = ITALIAN_30[:20]

PREFERRED_6 = {"SCIENZA", "STORIA", "MUSICA", "TEATRO", "PAROLA", "LETTERA"}


def pool_pairs(words):
    return [
        make_pair(f"definizione di {w.lower()}", w, "manual", "it") for w in words
    ]


def random_place_remove_grid(rng: random.Random, words, width=11, height=11, steps=30):
    """Seeded random walk of place/remove operations; returns the final grid."""
    grid = empty_grid(width, height)
    for _ in range(steps):
        if grid.placements and rng.random() < 0.25:
            grid = remove_last(grid, rng.randint(1, len(grid.placements)))
            continue
        placed = {pl.answer_grid for pl in grid.placements}
        candidates = [w for w in words if w not in placed and len(w) <= max(width, height)]
        rng.shuffle(candidates)
        for word in candidates:
            options = legal_placements(grid, word)
            if options:
                pl, _ = options[rng.randrange(len(options))]
                grid = place(grid, pl)
                break
    return grid


@pytest.fixture
def italian_pool():
    return pool_pairs(ITALIAN_30)
