import sys
from pathlib import Path

import pytest

# make the suite runnable from a clean checkout (tests/ for oracles, src/ for
# the package when it is not pip-installed)
sys.path.insert(0, str(Path(__file__).parent))
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from hulldial.field import make_field, make_quadratic_field
from hulldial.code import LinearCode
from hulldial.grs import MultiplierProblem, construct_family, full_field_rs, solve_multipliers


@pytest.fixture(scope="session")
def gf9():
    return make_field(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return make_quadratic_field(4)


@pytest.fixture(scope="session")
def gf25():
    return make_quadratic_field(5)


@pytest.fixture(scope="session")
def rs92(gf9):
    """The [9, 2, 8] full-evaluation code over GF(9) used throughout."""
    return full_field_rs(gf9, 2).code()


@pytest.fixture(scope="session")
def self_orthogonal_corpus(gf9, gf16, gf25):
    """Named Hermitian self-orthogonal witnesses across q in {3, 4, 5}."""
    corpus: list[tuple[str, LinearCode]] = []
    for field, q in ((gf9, 3), (gf16, 4), (gf25, 5)):
        for k in range(1, q):
            corpus.append((f"full-field q={q} k={k}", full_field_rs(field, k).code()))
    corpus.append(("all-ones [9,1]", LinearCode(gf9, [[1] * 9])))
    res = solve_multipliers(MultiplierProblem(gf9, tuple(range(1, 9)), 1))
    assert res.found
    corpus.append(("[8,1] on GF(9)*", res.grs.code()))
    res = solve_multipliers(MultiplierProblem(gf9, tuple(range(9)), 1, extended=True))
    assert res.found
    corpus.append(("[10,1] extended", res.grs.code()))
    res = construct_family(gf9, "trace-poly", k=2, g=[0, 1])
    assert res.found
    corpus.append(("[6,2] trace-poly", res.grs.code()))
    res = construct_family(gf25, "subgroup", k=2, m=3)
    assert res.found
    corpus.append(("[8,2] subgroup q=5", res.grs.code()))
    return corpus
