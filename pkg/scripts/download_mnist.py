"""Download the MNIST IDX files into a directory for `augmoments train-linear`.

Usage:
    python scripts/download_mnist.py data/mnist
    export AUGMOMENTS_MNIST_DIR=data/mnist

The library itself only reads local files; this helper is the one place that touches the network.
"""

# stdlib
import sys
import urllib.request
from pathlib import Path

MIRROR = "https://storage.googleapis.com/cvdf-datasets/mnist/"
FILES = [
    "train-images-idx3-ubyte.gz",
    "train-labels-idx1-ubyte.gz",
    "t10k-images-idx3-ubyte.gz",
    "t10k-labels-idx1-ubyte.gz",
]


def main() -> int:
    target = Path(sys.argv[1] if len(sys.argv) > 1 else "data/mnist")
    target.mkdir(parents=True, exist_ok=True)
    for name in FILES:
        path = target / name
        if path.exists():
            print(f"{path} exists, skipping")
            continue
        print(f"downloading {MIRROR}{name}")
        urllib.request.urlretrieve(MIRROR + name, path)  # noqa: S310
    print(f"done; set AUGMOMENTS_MNIST_DIR={target}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
