from pathlib import Path

from d2color.fileformat import parse_graph

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# acceptance outcomes, printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def load_fixture(name):
    return parse_graph((FIXTURES / f"{name}.pg").read_text())


def fixture_names():
    return sorted(p.stem for p in FIXTURES.glob("*.pg"))
