import json

import pytest

from exactmix.files import (
    ModelFileHandler,
    parse_model_document,
    parse_observations,
    read_observation_file,
)
from exactmix.utils.errors import ModelFormatError, ObservationError


def _write(path, document):
    path.write_text(json.dumps(document), encoding="utf-8")
    return str(path)


class TestModelDocument:
    def test_defaults_for_labels(self):
        model_file = parse_model_document({"alpha": [1, 2], "beta": [[0.1, 0.2]]})
        assert model_file.vocab == ["w0"]
        assert model_file.causes == ["z0", "z1"]
        assert model_file.to_model().m == 2

    @pytest.mark.parametrize("document", [
        [],
        {"beta": [[0.1]]},
        {"alpha": [], "beta": [[0.1]]},
        {"alpha": [1.0], "beta": []},
        {"alpha": [1.0], "beta": [[0.1, 0.2]]},
        {"alpha": [1.0], "beta": [["x"]]},
        {"alpha": [True], "beta": [[0.1]]},
        {"alpha": [1.0], "beta": [[0.1]], "vocab": ["a", "b"]},
        {"alpha": [1.0], "beta": [[0.1]], "causes": [1]},
    ])
    def test_rejects_malformed(self, document):
        with pytest.raises(ModelFormatError):
            parse_model_document(document)


class TestModelFileHandler:
    def test_reads_file(self, tmp_path):
        path = _write(tmp_path / "m.json", {"alpha": [1.0], "beta": [[0.5], [0.5]], "vocab": ["a", "b"]})
        model_file = ModelFileHandler().read_model(path)
        assert model_file.vocab == ["a", "b"]
        assert model_file.file_path == path

    def test_bundled_models(self):
        toy = ModelFileHandler().read_model("toy.json")
        assert toy.causes == ["z1", "z2", "z3"]
        assert len(ModelFileHandler().read_model("toy_subdivided.json").alpha) == 4

    def test_missing_file(self, tmp_path):
        with pytest.raises(ModelFormatError, match="not found"):
            ModelFileHandler().read_model(str(tmp_path / "nope.json"))

    def test_extension(self, tmp_path):
        path = tmp_path / "m.txt"
        path.write_text("{}", encoding="utf-8")
        with pytest.raises(ModelFormatError, match="Unsupported"):
            ModelFileHandler().read_model(str(path))

    def test_size_limit(self, tmp_path):
        path = _write(tmp_path / "big.json", {"alpha": [1.0] * 50000, "beta": [[0.5] * 50000]})
        with pytest.raises(ModelFormatError, match="exceeds"):
            ModelFileHandler(max_size_mb=0.1).read_model(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json", encoding="utf-8")
        with pytest.raises(ModelFormatError, match="Invalid JSON"):
            ModelFileHandler().read_model(str(path))


class TestObservations:
    def test_indices(self):
        assert parse_observations("0, 1,1").tokens == (0, 1, 1)

    def test_empty_string(self):
        assert parse_observations("").n == 0

    def test_labels(self):
        assert parse_observations("w2,w1", vocab=["w1", "w2"]).tokens == (1, 0)

    def test_garbage(self):
        with pytest.raises(ObservationError):
            parse_observations("0,x")
        with pytest.raises(ObservationError):
            parse_observations("-1")

    def test_file(self, tmp_path):
        path = tmp_path / "obs.txt"
        path.write_text("# words\n0\n\n1\n1\n", encoding="utf-8")
        assert read_observation_file(str(path)).tokens == (0, 1, 1)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ObservationError):
            read_observation_file(str(tmp_path / "none.txt"))
