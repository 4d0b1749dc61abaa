"""Tests for MNIST IDX reading."""

import gzip
import struct

import numpy as np
import pytest

from augmoments.dataio import read_idx, read_idx_array
from augmoments.dataio.idx import IMAGES_MAGIC, LABELS_MAGIC
from augmoments.errors import FormatError


def idx_images(pixels: np.ndarray) -> bytes:
    count, rows, cols = pixels.shape
    return struct.pack(">IIII", IMAGES_MAGIC, count, rows, cols) + pixels.astype(np.uint8).tobytes()


def idx_labels(labels) -> bytes:
    return struct.pack(">II", LABELS_MAGIC, len(labels)) + bytes(labels)


@pytest.fixture
def idx_pair(tmp_path):
    """Three 2x3 images with labels 7, 0, 9."""
    pixels = np.arange(18).reshape(3, 2, 3) * 15
    images, labels = tmp_path / "images-idx3-ubyte", tmp_path / "labels-idx1-ubyte"
    images.write_bytes(idx_images(pixels))
    labels.write_bytes(idx_labels([7, 0, 9]))
    return images, labels, pixels


class TestReadIdx:
    """Tests for read_idx and read_idx_array."""

    def test_reads_images_and_labels(self, idx_pair):
        """Test grid, scaling to [0, 1] and label order."""
        images, labels, pixels = idx_pair
        data = read_idx(images, labels)
        assert len(data) == 3
        assert data.grid.shape == (2, 3)
        np.testing.assert_allclose(data.pixels, pixels.reshape(3, 6) / 255.0)
        np.testing.assert_array_equal(data.labels, [7, 0, 9])

    def test_gzipped(self, tmp_path, idx_pair):
        """Test that gzip-compressed files are read transparently."""
        images, labels, pixels = idx_pair
        zipped = tmp_path / "images-idx3-ubyte.gz"
        zipped.write_bytes(gzip.compress(images.read_bytes()))
        np.testing.assert_array_equal(read_idx(zipped, labels).pixels, read_idx(images, labels).pixels)

    def test_count_mismatch(self, tmp_path, idx_pair):
        """Test that image and label counts must agree."""
        images, _, _ = idx_pair
        labels = tmp_path / "short-labels"
        labels.write_bytes(idx_labels([1, 2]))
        with pytest.raises(FormatError):
            read_idx(images, labels)

    def test_label_out_of_range(self, tmp_path, idx_pair):
        """Test that labels beyond the class count are refused."""
        images, labels, _ = idx_pair
        with pytest.raises(FormatError):
            read_idx(images, labels, num_classes=5)

    def test_empty_file(self, tmp_path):
        """Test that an empty file raises FormatError at offset 0."""
        path = tmp_path / "empty"
        path.write_bytes(b"")
        with pytest.raises(FormatError) as excinfo:
            read_idx_array(path, LABELS_MAGIC)
        assert excinfo.value.offset == 0

    def test_wrong_magic(self, idx_pair):
        """Test that a label file is not accepted as images."""
        _, labels, _ = idx_pair
        with pytest.raises(FormatError):
            read_idx_array(labels, IMAGES_MAGIC)

    def test_payload_length(self, tmp_path, idx_pair):
        """Test that a truncated payload is refused."""
        images, _, _ = idx_pair
        path = tmp_path / "cut"
        path.write_bytes(images.read_bytes()[:-1])
        with pytest.raises(FormatError):
            read_idx_array(path, IMAGES_MAGIC)

    def test_corrupt_gzip(self, tmp_path):
        """Test that a broken gzip stream raises FormatError."""
        path = tmp_path / "broken.gz"
        path.write_bytes(b"\x1f\x8b" + b"not really gzip")
        with pytest.raises(FormatError):
            read_idx_array(path, LABELS_MAGIC)
