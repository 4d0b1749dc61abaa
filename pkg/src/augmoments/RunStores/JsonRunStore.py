# stdlib
import json
from pathlib import Path
from typing import TYPE_CHECKING

# local
from .RunStore import RunStore

if TYPE_CHECKING:
    from augmoments.Experiment import Experiment

MANIFEST_SUFFIX = ".manifest.json"


def manifest_path(output: str | Path) -> Path:
    """<stem>.manifest.json next to the primary output."""
    output = Path(output)
    return output.with_name(output.stem + MANIFEST_SUFFIX)


class JsonRunStore(RunStore):
    def save(self, experiment: "Experiment", path: str | Path | None = None) -> Path:
        """Save config, seed, version, timing and outputs of the run as a JSON manifest."""
        if path is None:
            path = manifest_path(experiment.config.output or f"{experiment.config.command}.out")
        else:
            path = Path(path)

        data = {
            "config": experiment.config.model_dump(mode="json"),
            "version": experiment.version,
            "seed": experiment.config.seed,
            "started_at": experiment.started_at,
            "wall_time_s": experiment.wall_time_s,
            "outputs": [str(p) for p in experiment.outputs],
        }

        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8") as f:
            json.dump(data, f, ensure_ascii=False, indent=4)
        return path
