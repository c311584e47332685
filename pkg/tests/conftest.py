import hypothesis
import pytest

hypothesis.settings.register_profile(
    "pkg", deadline=None, max_examples=40, derandomize=True
)
hypothesis.settings.load_profile("pkg")


@pytest.fixture(scope="session")
def fixture_dir():
    from pathlib import Path

    return Path(__file__).resolve().parent.parent / "fixtures"
