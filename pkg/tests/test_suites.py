import pytest

from racah_natural.cli import STATEMENTS, SUITES, load_config, resolve_suite, run_suite


def test_load_config():
    config = load_config()
    assert config.seed == 0
    assert config.cap_limit == 2000
    config = load_config("config_quick", "injectivity", "config_quick", seed=3, n_jobs=None)
    assert config.cap_limit == 200
    assert config.caps == [1, 1, 1, 0, 0, 0, 0]
    assert config.seed == 3
    assert config.n_jobs == 1


def test_missing_suite_config_falls_back():
    assert load_config(suite="centrality", suite_config="config_quick").description.startswith("alpha")


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("nothing", load_config())


@pytest.mark.parametrize("name", SUITES)
def test_quick_suites(name):
    report = run_suite(name, load_config("config_quick", name, "config_quick"))
    assert report.passed, report.summary()
    assert report.checks


@pytest.mark.slow
@pytest.mark.parametrize("name", SUITES)
def test_full_suites(name):
    report = run_suite(name, load_config(suite=name))
    assert report.passed, report.summary()


def test_statement_selectors():
    assert resolve_suite("homomorphism") == "homomorphism"
    assert resolve_suite("theorem-5.1") == "homomorphism"
    assert resolve_suite("lemma-7.12") == "homogeneous"
    assert set(STATEMENTS) <= set(SUITES)
    with pytest.raises(ValueError):
        resolve_suite("lemma-99.1")
