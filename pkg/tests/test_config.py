import pytest

from filtrum import config
from filtrum.errors import DocumentError


@pytest.fixture(autouse=True)
def elsewhere(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)


def test_defaults():
    settings = config.resolve(environ={})
    assert settings == config.Settings()
    assert settings.max_enum_size == 24 and settings.workers == 1


def test_precedence(tmp_path):
    config_file = tmp_path / 'caps.yml'
    config_file.write_text('workers: 3\nmax_opens: 64\n')
    assert config.resolve(config_file=str(config_file), environ={}).workers == 3
    settings = config.resolve(config_file=str(config_file), environ={'FILTRUM_WORKERS': '5'})
    assert (settings.workers, settings.max_opens) == (5, 64)
    assert config.resolve(config_file=str(config_file), environ={'FILTRUM_WORKERS': '5'}, workers=7).workers == 7


def test_default_file_and_environment(tmp_path):
    (tmp_path / 'filtrum.yml').write_text('max_enum_size: 12\n')
    assert config.resolve(environ={}).max_enum_size == 12
    other = tmp_path / 'other.yml'
    other.write_text('max_enum_size: 8\n')
    assert config.resolve(environ={'FILTRUM_CONFIG': str(other)}).max_enum_size == 8
    assert config.resolve(environ={'FILTRUM_MAX_ENUM': '30'}).max_enum_size == 30


@pytest.mark.parametrize('text', ['colour: blue\n', '- 1\n', 'workers: 0\n', 'workers: [\n'])
def test_bad_files(tmp_path, text):
    config_file = tmp_path / 'bad.yml'
    config_file.write_text(text)
    with pytest.raises(DocumentError):
        config.resolve(config_file=str(config_file), environ={})


def test_bad_environment():
    with pytest.raises(DocumentError):
        config.resolve(environ={'FILTRUM_WORKERS': 'many'})


def test_configure():
    settings = config.configure(config.Settings(max_enum_size=6))
    assert config.current() is settings
