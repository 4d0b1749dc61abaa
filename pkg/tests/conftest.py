"""Shared fixtures and configuration for pytest."""

# stdlib
import struct
from collections.abc import Generator
from pathlib import Path

# third party
import numpy as np
import pytest

# local
from augmoments import Experiment
from augmoments.dataio import synth_image
from augmoments.dataio.idx import IMAGES_MAGIC, LABELS_MAGIC
from augmoments.models.config import MNIST_DIR_ENV_VAR
from augmoments.models.grid import Grid, Image


@pytest.fixture
def tmp_path(tmp_path: Path) -> Generator[Path, None, None]:
    """Provide a temporary directory for tests."""
    yield tmp_path


@pytest.fixture
def small_grid() -> Grid:
    """An 8x8 grid; D = 64 keeps dense moments cheap."""
    return Grid.square(8)


@pytest.fixture
def noise_image(small_grid: Grid) -> Image:
    """Seeded low-pass noise on the 8x8 grid."""
    return synth_image(small_grid, seed=7, cutoff=0.5)


@pytest.fixture
def random_image_factory():
    """Factory for seeded uniform random images on a grid."""

    def factory(grid: Grid, seed: int = 0) -> Image:
        return Image(grid=grid, data=np.random.default_rng(seed).random(grid.size))

    return factory


@pytest.fixture
def mock_command_factory():
    """Factory for registering a fake subcommand that writes outputs through the experiment."""

    def factory(names: list[str], fail: bool = False):
        def command(experiment) -> None:
            for name in names:
                path = experiment.output(Path(experiment.config.output).with_name(name))
                path.write_text("data")
            if fail:
                raise RuntimeError("command failed")

        return command

    return factory


@pytest.fixture
def run_command(tmp_path: Path, monkeypatch):
    """Run one subcommand through an Experiment with its outputs under tmp_path."""
    monkeypatch.delenv(MNIST_DIR_ENV_VAR, raising=False)

    def runner(command: str, output: str, **fields) -> Experiment:
        experiment = Experiment.from_dict({"command": command, "output": str(tmp_path / output), **fields})
        experiment.run()
        return experiment

    return runner


@pytest.fixture
def mnist_dir(tmp_path: Path) -> Path:
    """Tiny MNIST lookalike: 12 train and 6 test 6x6 images in IDX format, labels cycling 0..9."""
    directory = tmp_path / "mnist"
    directory.mkdir()
    rng = np.random.default_rng(11)
    for prefix, count in (("train", 12), ("t10k", 6)):
        pixels = rng.integers(0, 256, size=(count, 6, 6), dtype=np.uint8)
        labels = bytes(i % 10 for i in range(count))
        (directory / f"{prefix}-images-idx3-ubyte").write_bytes(
            struct.pack(">IIII", IMAGES_MAGIC, count, 6, 6) + pixels.tobytes()
        )
        (directory / f"{prefix}-labels-idx1-ubyte").write_bytes(struct.pack(">II", LABELS_MAGIC, count) + labels)
    return directory
