import random
from pathlib import Path

import pytest

import alexlink as al

FIXTURE_DIR = Path(al.__file__).parent / "fixtures"


def fixture_paths():
    return sorted(FIXTURE_DIR.glob("*.lnk"))


def load_fixture(name):
    path = FIXTURE_DIR / f"{name}.lnk"
    return al.parse_fixture(path.read_text(), name_hint=path.stem)


def corpus_diagrams():
    return [al.parse_fixture(p.read_text(), name_hint=p.stem)
            for p in fixture_paths()]


@pytest.fixture(scope="session")
def corpus():
    return corpus_diagrams()


def random_poly(rng, nvars, max_terms=4, max_exp=3, max_coeff=5,
                allow_zero=False):
    """Small random Laurent polynomial for property tests."""
    while True:
        terms = {}
        for _ in range(rng.randrange(1, max_terms + 1)):
            exps = tuple(rng.randrange(-max_exp, max_exp + 1)
                         for _ in range(nvars))
            c = rng.randrange(-max_coeff, max_coeff + 1)
            if c:
                terms[exps] = terms.get(exps, 0) + c
        p = al.LaurentPoly(nvars, terms)
        if allow_zero or not p.is_zero():
            return p


def random_unit(rng, nvars, max_exp=3):
    exps = tuple(rng.randrange(-max_exp, max_exp + 1) for _ in range(nvars))
    return al.LaurentPoly.monomial(nvars, exps, rng.choice([1, -1]))


def random_negligible(rng, nvars, max_exp=2, max_s=2):
    p = random_unit(rng, nvars, max_exp)
    for i in range(nvars):
        one_minus = al.LaurentPoly.one(nvars) - al.LaurentPoly.var(nvars, i)
        for _ in range(rng.randrange(0, max_s + 1)):
            p = p * one_minus
    return p


def seeded(seed):
    return random.Random(seed)
