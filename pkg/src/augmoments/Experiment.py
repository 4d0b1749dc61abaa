"""Experiment orchestrator: runs one subcommand from a RunConfig and records its manifest."""

# stdlib
import json
import time
from datetime import UTC, datetime
from pathlib import Path
from typing import Any

# third party
from dotenv import load_dotenv

# local
from augmoments import __version__
from augmoments.commands import commands
from augmoments.errors import ArgumentError
from augmoments.loaders import load_markdown_with_frontmatter, load_preset
from augmoments.models.config import RunConfig
from augmoments.RunStores import JsonRunStore, RunStore, stores
from augmoments.utils import MomentsLogger, get_default_logger

load_dotenv()


class Experiment:
    config: RunConfig
    store: RunStore
    logger: MomentsLogger
    outputs: list[Path]
    started_at: float | None
    wall_time_s: float | None
    version: str

    def __init__(
        self,
        config: RunConfig | dict[str, Any],
        store: RunStore | type[RunStore] | str = JsonRunStore,
        logger: MomentsLogger | None = None,
    ):
        self.config = config if isinstance(config, RunConfig) else RunConfig(**config)
        self.logger = logger if logger is not None else get_default_logger()
        self.outputs = []
        self.started_at = None
        self.wall_time_s = None
        self.version = __version__

        if isinstance(store, str):
            store_cls: type[RunStore] = stores.get(store, JsonRunStore)
            self.store = store_cls()
        elif isinstance(store, type):
            self.store = store()
        else:
            self.store = store

    def output(self, path: str | Path) -> Path:
        """Register an output file of the running command; it is removed again if the run fails."""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        self.outputs.append(path)
        return path

    def discard_outputs(self) -> None:
        for path in self.outputs:
            path.unlink(missing_ok=True)
        self.outputs = []

    def run(self) -> Path:
        """Run the configured command, then save the manifest; returns the manifest path."""
        command = commands.get(self.config.command)
        if command is None:
            raise ArgumentError(f"unknown command {self.config.command!r}; choose from {', '.join(commands)}")

        self.outputs = []
        self.started_at = datetime.now(UTC).timestamp()
        start = time.perf_counter()
        self.logger.debug(f"{self.config.command}: {self.config.model_dump(exclude_none=True)}")
        try:
            command(self)
        except BaseException:
            self.discard_outputs()
            raise
        self.wall_time_s = time.perf_counter() - start
        return self.store.save(self)

    @classmethod
    def from_dict(cls, data: dict[str, Any], **kwargs) -> "Experiment":
        """Create an Experiment from RunConfig fields."""
        return cls(RunConfig(**data), **kwargs)

    @classmethod
    def from_json_string(cls, json_str: str, **kwargs) -> "Experiment":
        """Create an Experiment from a saved manifest."""
        data = json.loads(json_str)
        if "config" not in data:
            raise ArgumentError("manifest has no 'config' section")
        return cls.from_dict(data["config"], **kwargs)

    @classmethod
    def from_json_file(cls, path: str | Path, **kwargs) -> "Experiment":
        """Create an Experiment from a manifest file, for replays."""
        return cls.from_json_string(Path(path).read_text(encoding="utf-8"), **kwargs)

    @classmethod
    def from_markdown(cls, path: str | Path, overrides: dict[str, Any] | None = None, **kwargs) -> "Experiment":
        """Create an Experiment from a Markdown preset file; `overrides` win over its frontmatter."""
        metadata, _ = load_markdown_with_frontmatter(path)
        return cls.from_dict({**metadata, **(overrides or {})}, **kwargs)

    @classmethod
    def from_name(cls, name: str, overrides: dict[str, Any] | None = None, **kwargs) -> "Experiment":
        """Create an Experiment from a named preset in ./presets or the packaged presets."""
        metadata = load_preset(name)
        metadata.pop("description", None)
        return cls.from_dict({**metadata, **(overrides or {})}, **kwargs)
