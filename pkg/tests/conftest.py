import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from mixedreg.code import StabilizerCode
from mixedreg.codefile import load, load_code
from mixedreg.pauli import Device, PauliVec, commutes, compose

FIXTURES = Path(__file__).parent / "fixtures"


def fixture_path(name: str) -> str:
    return str(FIXTURES / name)


def all_fixture_files() -> list[str]:
    return sorted(str(p) for p in FIXTURES.glob("*.code"))


@pytest.fixture
def example1() -> StabilizerCode:
    return load_code(fixture_path("example1.code"))


@pytest.fixture
def mixed65() -> tuple[Device, list[PauliVec]]:
    return load(fixture_path("mixed65.code"))


def bfs_group(gens, device) -> set[tuple[int, ...]]:
    """Enumerate <gens> by closure under composition (independent of the lattice code)."""
    seen = {device.identity().vector}
    frontier = [device.identity()]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q.vector not in seen:
                    seen.add(q.vector)
                    nxt.append(q)
        frontier = nxt
    return seen


def random_pauli(rng: random.Random, device: Device) -> PauliVec:
    return PauliVec(device, [rng.randrange(q) for q in device.moduli], [rng.randrange(q) for q in device.moduli])


def random_device(rng: random.Random, max_n: int = 4, moduli=(2, 3, 4, 5, 6)) -> Device:
    return Device([rng.choice(moduli) for _ in range(rng.randint(1, max_n))])


def random_commuting(rng: random.Random, device: Device, tries: int = 6) -> list[PauliVec]:
    """Greedy random commuting set."""
    out: list[PauliVec] = []
    for _ in range(tries):
        p = random_pauli(rng, device)
        if not p.is_identity() and all(commutes(p, g) for g in out):
            out.append(p)
    return out


moduli_st = st.integers(min_value=2, max_value=6)
devices_st = st.lists(moduli_st, min_size=1, max_size=3).map(Device)


@st.composite
def paulis_on(draw, device: Device, count: int = 1):
    out = []
    for _ in range(count):
        xs = [draw(st.integers(0, q - 1)) for q in device.moduli]
        zs = [draw(st.integers(0, q - 1)) for q in device.moduli]
        out.append(PauliVec(device, xs, zs))
    return out


@st.composite
def device_and_paulis(draw, count: int = 3, devices=devices_st):
    device = draw(devices)
    return device, draw(paulis_on(device, count))


ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[k])
