"""Binary (P5) PGM images.

Intensities are scaled to [0, 1] on read and quantized to 8 bits on write.
16-bit files (maxval > 255, big-endian samples) are read too.
"""

# stdlib
import re
from pathlib import Path

# third party
import numpy as np

# local
from augmoments.errors import FormatError
from augmoments.models.grid import Grid, Image

_HEADER_TOKEN = re.compile(rb"(?:\s|#[^\n]*\n)*(\S+)")


def _header_fields(raw: bytes) -> tuple[list[int], int]:
    """Width, height and maxval, and the offset of the first payload byte."""
    offset = 2
    fields = []
    for _ in range(3):
        match = _HEADER_TOKEN.match(raw, offset)
        if match is None:
            raise FormatError("truncated PGM header", offset=offset)
        try:
            fields.append(int(match.group(1)))
        except ValueError as e:
            raise FormatError(f"PGM header field {match.group(1)!r} is not an integer", offset=match.start(1)) from e
        offset = match.end()
    if offset >= len(raw) or not raw[offset : offset + 1].isspace():
        raise FormatError("missing whitespace after PGM maxval", offset=offset)
    return fields, offset + 1


def read_pgm(path: str | Path) -> Image:
    raw = Path(path).read_bytes()
    if raw[:2] == b"P2":
        raise FormatError(f"{path}: ASCII PGM (P2) is not supported, convert it to binary P5", offset=0)
    if raw[:2] != b"P5":
        raise FormatError(f"{path}: not a binary PGM file, magic is {raw[:2]!r}", offset=0)
    (width, height, maxval), start = _header_fields(raw)
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise FormatError(f"{path}: invalid PGM header {width}x{height} maxval {maxval}", offset=3)

    dtype = np.dtype(np.uint8) if maxval < 256 else np.dtype(">u2")
    expected = width * height * dtype.itemsize
    if len(raw) - start < expected:
        raise FormatError(f"{path}: PGM payload has {len(raw) - start} bytes, expected {expected}", offset=len(raw))
    values = np.frombuffer(raw, dtype=dtype, count=width * height, offset=start).astype(np.float64)
    if values.max(initial=0) > maxval:
        raise FormatError(f"{path}: sample exceeds maxval {maxval}", offset=start)
    return Image(grid=Grid(height=height, width=width), data=values / maxval)


def write_pgm(path: str | Path, img: Image) -> None:
    """Write img as an 8-bit P5 PGM; intensities are clipped to [0, 1] first."""
    quantized = np.rint(np.clip(img.data, 0.0, 1.0) * 255.0).astype(np.uint8)
    header = f"P5\n{img.grid.width} {img.grid.height}\n255\n".encode("ascii")
    Path(path).write_bytes(header + quantized.tobytes())
