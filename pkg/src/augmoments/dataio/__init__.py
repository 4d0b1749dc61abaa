"""Image, dataset, tensor and CSV input/output, and synthetic fixtures."""

from .idx import read_idx as read_idx
from .idx import read_idx_array as read_idx_array
from .pgm import read_pgm as read_pgm
from .pgm import write_pgm as write_pgm
from .synth_image import synth_image as synth_image
from .synth_image import synth_square as synth_square
from .tensor import read_tensor as read_tensor
from .tensor import write_tensor as write_tensor
from .write_csv import write_convergence_csv as write_convergence_csv
from .write_csv import write_rank_csv as write_rank_csv
from .write_csv import write_rows as write_rows
from .write_csv import write_train_csv as write_train_csv
