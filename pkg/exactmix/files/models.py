"""Data models for model-file ingestion."""

from dataclasses import dataclass, field

from exactmix.model.types import Model


@dataclass
class ModelFile:
    """
    Parsed form of a model document.

    Attributes:
        alpha: prior weight per cause
        beta: one row per vocabulary item, one column per cause
        vocab: vocabulary labels (defaults to "w0", "w1", ...)
        causes: cause labels (defaults to "z0", "z1", ...)
        file_path: where the document was read from
    """
    alpha: list[float]
    beta: list[list[float]]
    vocab: list[str] = field(default_factory=list)
    causes: list[str] = field(default_factory=list)
    file_path: str = ""

    def __post_init__(self):
        if not self.vocab:
            self.vocab = [f"w{v}" for v in range(len(self.beta))]
        if not self.causes:
            self.causes = [f"z{z}" for z in range(len(self.alpha))]

    def to_model(self, algebraic: bool = False) -> Model:
        return Model(alpha=self.alpha, beta=self.beta, algebraic=algebraic)
