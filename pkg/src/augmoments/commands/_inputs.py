"""Input resolution shared by the subcommands."""

# stdlib
import math
from pathlib import Path

# third party
import numpy as np

# local
from augmoments.dataio import read_idx, read_pgm, synth_image, synth_square, write_pgm, write_tensor
from augmoments.distribution import make_rng, parse_distribution, scale_distribution
from augmoments.errors import ArgumentError, UsageError
from augmoments.models.config import MNIST_DIR_ENV_VAR, RunConfig
from augmoments.models.dataset import LabeledDataset
from augmoments.models.distribution import ParamDistribution, QuadratureRule
from augmoments.models.grid import Grid, Image
from augmoments.models.losses import LinearModel
from augmoments.models.transform import TransformKind
from augmoments.moments import aligned_quadrature
from augmoments.utils import resolve_path

# Generator stream for random models, kept apart from the per-run Monte-Carlo streams.
MODEL_STREAM = 1_000_000

MNIST_FILES = {
    "train_images": "train-images-idx3-ubyte",
    "train_labels": "train-labels-idx1-ubyte",
    "test_images": "t10k-images-idx3-ubyte",
    "test_labels": "t10k-labels-idx1-ubyte",
}


def require(config: RunConfig, field: str):
    """The value of a field the command cannot run without; a missing flag is a usage error."""
    value = getattr(config, field)
    if value is None:
        raise UsageError(f"{config.command} needs --{field.replace('_', '-')}")
    return value


def kind_of(config: RunConfig) -> TransformKind:
    return TransformKind(require(config, "kind"))


def to_radians(kind: TransformKind, dist: ParamDistribution) -> ParamDistribution:
    """Rotation parameters are given in degrees on the command line."""
    return scale_distribution(dist, math.pi / 180.0) if kind is TransformKind.ROTATION else dist


def load_distribution(config: RunConfig) -> ParamDistribution:
    return to_radians(kind_of(config), parse_distribution(require(config, "dist")))


def load_image(config: RunConfig) -> Image:
    """The --in image, else the synthetic fixture on --grid."""
    if config.input is not None:
        return read_pgm(config.input)
    grid = Grid.parse(config.grid)
    if config.fixture == "square":
        return synth_square(grid)
    return synth_image(grid, config.seed, config.cutoff)


def build_rule(config: RunConfig, dist: ParamDistribution, grid: Grid) -> QuadratureRule:
    panel_nodes = config.panel_nodes if config.aligned else None
    return aligned_quadrature(kind_of(config), dist, grid, config.nodes, panel_nodes)


def random_model(config: RunConfig, inputs: int) -> tuple[LinearModel, np.ndarray]:
    """Gaussian W (scaled by 1/sqrt(D)) with zero bias, and a Gaussian target."""
    rng = make_rng(config.seed, MODEL_STREAM)
    weights = rng.standard_normal((config.outputs, inputs)) / math.sqrt(inputs)
    target = rng.standard_normal(config.outputs)
    return LinearModel(weights=weights, bias=np.zeros(config.outputs)), target


def _mnist_file(directory: Path, stem: str) -> Path:
    return resolve_path([stem, f"{stem}.gz"], [directory])


def load_mnist(config: RunConfig) -> tuple[LabeledDataset, LabeledDataset]:
    """(train, test) subsets of sizes train_size and test_size."""
    if config.mnist_dir is None:
        raise UsageError(f"{config.command} needs --mnist-dir or {MNIST_DIR_ENV_VAR}")
    directory = Path(config.mnist_dir)
    files = {key: _mnist_file(directory, stem) for key, stem in MNIST_FILES.items()}
    train = read_idx(files["train_images"], files["train_labels"]).subset(config.train_size)
    test = read_idx(files["test_images"], files["test_labels"]).subset(config.test_size)
    return train, test


def rescaled(img: Image) -> Image:
    """Min-max scaled copy for display; constant images map to zeros."""
    low, high = float(img.data.min()), float(img.data.max())
    if high == low:
        return Image.zeros(img.grid)
    return img.with_data((img.data - low) / (high - low))


def write_image(path: Path, img: Image, scale: bool = False) -> None:
    """PGM (optionally min-max scaled) or raw AMTF, by suffix."""
    if path.suffix == ".pgm":
        write_pgm(path, rescaled(img) if scale else img)
    elif path.suffix == ".amtf":
        write_tensor(path, img.grid.shape, img.data)
    else:
        raise ArgumentError(f"output {path} must end in .pgm or .amtf")
