"""Observation list parsing: comma-separated indices or one index per line."""

import os

from exactmix.model.types import ObservationSeq
from exactmix.utils.errors import ObservationError


def _token(text: str, vocab: list[str] | None) -> int:
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        pass
    # vocabulary labels are accepted where they are unambiguous
    if vocab and text in vocab:
        return vocab.index(text)
    raise ObservationError(f"Cannot parse observation '{text}' as a vocabulary index")


def parse_observations(text: str, vocab: list[str] | None = None) -> ObservationSeq:
    """Parse "0,1,1" into an ObservationSeq; the empty string means no observations."""
    if not text.strip():
        return ObservationSeq(())
    return ObservationSeq(tuple(_token(part, vocab) for part in text.split(',')))


def read_observation_file(file_path: str, vocab: list[str] | None = None) -> ObservationSeq:
    """One index per line; blank lines and lines starting with '#' are skipped."""
    path = os.path.expanduser(file_path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            lines = f.readlines()
    except OSError as e:
        raise ObservationError(f"Error reading observation file {file_path}: {e}") from e
    tokens = [
        _token(line, vocab) for line in lines
        if line.strip() and not line.lstrip().startswith('#')
    ]
    return ObservationSeq(tuple(tokens))
