# stdlib
from abc import ABC, abstractmethod
from pathlib import Path
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment


class RunStore(ABC):
    def __init__(self, *args, **kwargs) -> None:
        pass

    @abstractmethod
    def save(self, experiment: "Experiment", path: str | Path | None = None) -> Path:
        """Persist the manifest of a finished run and return where it went."""
        pass
