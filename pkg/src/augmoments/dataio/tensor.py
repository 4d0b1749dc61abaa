"""AMTF tensor files.

    offset  size       field
    0       4          magic b"AMTF"
    4       4          version (u32 LE, = 1)
    8       4          dtype code (u32 LE, 1 = float64 LE)
    12      4          ndim (u32 LE)
    16      8 * ndim   dims (u64 LE each)
    ...     8 * prod   payload, row-major
"""

# stdlib
import struct
from pathlib import Path

# third party
import numpy as np

# local
from augmoments.errors import FormatError, ShapeError

MAGIC = b"AMTF"
VERSION = 1
DTYPE_FLOAT64 = 1
_PREFIX = struct.Struct("<4sIII")


def write_tensor(path: str | Path, dims: tuple[int, ...] | list[int], data: np.ndarray) -> None:
    dims = tuple(int(d) for d in dims)
    values = np.ascontiguousarray(data, dtype="<f8").reshape(-1)
    if any(d < 0 for d in dims) or int(np.prod(dims, dtype=np.int64)) != values.size:
        raise ShapeError(f"dims {dims} do not match {values.size} values")
    header = _PREFIX.pack(MAGIC, VERSION, DTYPE_FLOAT64, len(dims)) + struct.pack(f"<{len(dims)}Q", *dims)
    with open(path, "wb") as handle:
        handle.write(header)
        handle.write(values.tobytes())


def read_tensor(path: str | Path) -> np.ndarray:
    """Return the stored tensor with its declared shape."""
    raw = Path(path).read_bytes()
    if len(raw) < _PREFIX.size:
        raise FormatError(f"{path}: truncated AMTF header ({len(raw)} bytes)", offset=len(raw))
    magic, version, dtype, ndim = _PREFIX.unpack_from(raw)
    if magic != MAGIC:
        raise FormatError(f"{path}: bad AMTF magic {magic!r}", offset=0)
    if version != VERSION:
        raise FormatError(f"{path}: unsupported AMTF version {version}", offset=4)
    if dtype != DTYPE_FLOAT64:
        raise FormatError(f"{path}: unsupported AMTF dtype code {dtype}", offset=8)
    header_size = _PREFIX.size + 8 * ndim
    if len(raw) < header_size:
        raise FormatError(f"{path}: truncated AMTF dims", offset=len(raw))
    dims = struct.unpack_from(f"<{ndim}Q", raw, _PREFIX.size)
    expected = 8 * int(np.prod(dims, dtype=np.int64))
    if len(raw) - header_size != expected:
        raise FormatError(
            f"{path}: AMTF payload has {len(raw) - header_size} bytes, dims {dims} need {expected}",
            offset=header_size + min(expected, len(raw) - header_size),
        )
    return np.frombuffer(raw, dtype="<f8", offset=header_size).astype(np.float64).reshape(dims)
