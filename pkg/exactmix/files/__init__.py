"""Model and observation ingestion."""

from exactmix.files.models import ModelFile
from exactmix.files.handler import ModelFileHandler, parse_model_document
from exactmix.files.observations import parse_observations, read_observation_file

__all__ = [
    'ModelFile', 'ModelFileHandler', 'parse_model_document',
    'parse_observations', 'read_observation_file',
]
