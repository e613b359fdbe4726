from os import path

import hypothesis
import pytest

from filtrum import config

REPO = path.dirname(path.dirname(path.abspath(__file__)))

hypothesis.settings.register_profile('filtrum', deadline=None, max_examples=50,
                                    suppress_health_check=[hypothesis.HealthCheck.function_scoped_fixture])
hypothesis.settings.load_profile('filtrum')


@pytest.fixture(autouse=True)
def default_settings():
    config.configure(config.Settings())
    yield
    config.configure(config.Settings())


@pytest.fixture
def corpus_path():
    return lambda *parts: path.join(REPO, 'corpus', *parts)


@pytest.fixture
def fixture_path():
    return lambda name: path.join(REPO, 'tests', 'fixtures', name)
