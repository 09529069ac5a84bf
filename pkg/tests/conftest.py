import itertools
import random
from pathlib import Path

import pytest

from application.coq_service import CoqService
from domain.models import UnipotentCompanion
from domain.quiver import Quiver
from integration import corpus

DATA_DIR = Path(__file__).resolve().parent.parent / "data" / "quivers"


@pytest.fixture
def rng():
    # stałe ziarno – testy losowe mają być powtarzalne
    return random.Random(20240607)


@pytest.fixture
def service():
    return CoqService(DATA_DIR)


@pytest.fixture
def fig5():
    return corpus.proper_illustration().coq()


@pytest.fixture
def annulus():
    return corpus.punctured_annulus()


@pytest.fixture
def make_unipotent(rng):
    """Losowa macierz unipotentna górnotrójkątna z wpisami w [low, high]."""

    def build(n: int, low: int = -5, high: int = 5) -> UnipotentCompanion:
        u = [[1 if i == j else (rng.randint(low, high) if j > i else 0) for j in range(n)] for i in range(n)]
        return UnipotentCompanion(tuple(tuple(r) for r in u), tuple(f"v{i + 1}" for i in range(n)))

    return build


@pytest.fixture
def random_quiver(rng):
    """Losowy kołczan na v1..vn: każda para ze strzałką z prawdopodobieństwem density."""

    def build(n: int, density: float = 0.6, max_weight: int = 1) -> Quiver:
        names = [f"v{i + 1}" for i in range(n)]
        arrows = []
        for a, b in itertools.combinations(names, 2):
            if rng.random() < density:
                src, tgt = (a, b) if rng.random() < 0.5 else (b, a)
                arrows.append((src, tgt, rng.randint(1, max_weight)))
        return Quiver.from_arrows(names, arrows)

    return build
