"""MNIST IDX files (big-endian header, unsigned-byte payload), plain or gzipped.

    [offset] [type]          [value]
    0000     32 bit integer  0x00000803 (images) / 0x00000801 (labels)
    0004     32 bit integer  number of items
    0008     32 bit integer  rows     (images only)
    0012     32 bit integer  columns  (images only)
    ....     unsigned byte   pixel or label values
"""

# stdlib
import gzip
import struct
from pathlib import Path

# third party
import numpy as np

# local
from augmoments.errors import FormatError
from augmoments.models.dataset import LabeledDataset
from augmoments.models.grid import Grid

IMAGES_MAGIC = 0x00000803
LABELS_MAGIC = 0x00000801
GZIP_MAGIC = b"\x1f\x8b"


def _read_bytes(path: Path) -> bytes:
    raw = path.read_bytes()
    if raw[:2] == GZIP_MAGIC:
        try:
            return gzip.decompress(raw)
        except (OSError, EOFError) as e:
            raise FormatError(f"{path}: corrupt gzip stream: {e}") from e
    return raw


def read_idx_array(path: str | Path, magic: int) -> np.ndarray:
    """Parse one IDX file with the given magic into a uint8 array of its declared shape."""
    path = Path(path)
    raw = _read_bytes(path)
    if not raw:
        raise FormatError(f"{path}: empty file", offset=0)
    if len(raw) < 4:
        raise FormatError(f"{path}: truncated IDX magic", offset=len(raw))
    (found,) = struct.unpack(">I", raw[:4])
    if found != magic:
        raise FormatError(f"{path}: IDX magic is 0x{found:08x}, expected 0x{magic:08x}", offset=0)
    ndim = magic & 0xFF
    header_size = 4 + 4 * ndim
    if len(raw) < header_size:
        raise FormatError(f"{path}: truncated IDX header", offset=len(raw))
    dims = struct.unpack(f">{ndim}I", raw[4:header_size])
    count = int(np.prod(dims))
    if len(raw) - header_size != count:
        raise FormatError(
            f"{path}: IDX payload has {len(raw) - header_size} bytes, dimensions {dims} need {count}",
            offset=min(len(raw), header_size + count),
        )
    return np.frombuffer(raw, dtype=np.uint8, offset=header_size).reshape(dims)


def read_idx(path_images: str | Path, path_labels: str | Path, num_classes: int = 10) -> LabeledDataset:
    """Images scaled to [0, 1] with their labels; image and label counts must agree."""
    images = read_idx_array(path_images, IMAGES_MAGIC)
    labels = read_idx_array(path_labels, LABELS_MAGIC)
    if images.shape[0] != labels.shape[0]:
        raise FormatError(
            f"{path_images} holds {images.shape[0]} images but {path_labels} holds {labels.shape[0]} labels"
        )
    if labels.size and labels.max() >= num_classes:
        raise FormatError(f"{path_labels}: label {labels.max()} outside [0, {num_classes - 1}]")
    count, rows, cols = images.shape
    return LabeledDataset(
        grid=Grid(height=rows, width=cols),
        pixels=images.reshape(count, rows * cols).astype(np.float64) / 255.0,
        labels=labels.astype(np.int64),
        num_classes=num_classes,
    )
