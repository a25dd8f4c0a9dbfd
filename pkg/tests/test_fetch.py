import pytest
import requests

from snarkforge import FetchError, Settings, fetch_dataset, to_graph6
from snarkforge.cli import EXIT_DATA, EXIT_NETWORK, EXIT_OK, main


@pytest.fixture
def dataset(tmp_path, k4, prism, petersen):
    path = tmp_path / "three.g6"
    path.write_text("".join(f"{to_graph6(g)}\n" for g in (k4, prism, petersen)))
    return path


def _response(mocker, status=200, chunks=()):
    response = mocker.Mock()
    response.status_code = status
    response.iter_content.return_value = list(chunks)
    return response


def test_local_file_validated_in_place(dataset):
    assert fetch_dataset(input=dataset) == 3


def test_local_file_copied(dataset, tmp_path):
    out = tmp_path / "copy.g6"
    assert fetch_dataset(input=dataset, out=out) == 3
    assert out.read_bytes() == dataset.read_bytes()


def test_download_saved_verbatim(mocker, dataset, tmp_path):
    body = dataset.read_bytes()
    get = mocker.patch(
        "snarkforge.fetch.requests.get",
        return_value=_response(mocker, chunks=[body[:5], body[5:]]),
    )
    out = tmp_path / "remote.g6"
    assert fetch_dataset(url="https://example.org/snarks.g6", out=out) == 3
    assert out.read_bytes() == body
    assert get.call_args.kwargs["stream"] is True


def test_http_error(mocker, tmp_path):
    mocker.patch("snarkforge.fetch.requests.get", return_value=_response(mocker, status=404))
    with pytest.raises(FetchError):
        fetch_dataset(url="https://example.org/missing", out=tmp_path / "x.g6")


def test_connection_error(mocker, tmp_path):
    mocker.patch(
        "snarkforge.fetch.requests.get", side_effect=requests.ConnectionError("no route")
    )
    with pytest.raises(FetchError):
        fetch_dataset(url="https://example.org/snarks.g6", out=tmp_path / "x.g6")


def test_argument_checks(dataset):
    with pytest.raises(ValueError):
        fetch_dataset()
    with pytest.raises(ValueError):
        fetch_dataset(url="https://example.org/a", input=dataset)
    with pytest.raises(ValueError):
        fetch_dataset(url="https://example.org/a")


def test_cli_fetch(mocker, dataset, tmp_path, capsys):
    env = ["--env-file", str(tmp_path / "none.env")]
    assert main([*env, "fetch", "--input", str(dataset)]) == EXIT_OK
    assert capsys.readouterr().out.strip() == "3 graphs validated"

    bad = tmp_path / "bad.g6"
    bad.write_text("C~\nC~\nC~\nnot graph6\n")
    assert main([*env, "fetch", "--input", str(bad)]) == EXIT_DATA
    assert "line 4" in capsys.readouterr().err

    mocker.patch("snarkforge.fetch.requests.get", side_effect=requests.Timeout("slow"))
    out = str(tmp_path / "x.g6")
    assert main([*env, "fetch", "--url", "https://example.org/a", "--out", out]) == EXIT_NETWORK


def test_settings_from_env(monkeypatch, tmp_path):
    for name in ("SNARKFORGE_MAX_ORDER", "SNARKFORGE_WORKERS", "SNARKFORGE_LOG_LEVEL", "SNARKFORGE_SPLIT_DEPTH"):
        monkeypatch.setenv(name, "")
        monkeypatch.delenv(name)
    env = tmp_path / ".env"
    env.write_text("SNARKFORGE_MAX_ORDER=26\nSNARKFORGE_WORKERS=4\n")
    monkeypatch.setenv("SNARKFORGE_WORKERS", "2")
    settings = Settings.from_env(env)
    assert settings.max_order == 26
    assert settings.workers == 2
    assert settings.log_level == "INFO"
    assert settings.split_depth == 6
