"""Language-identification lab: corpora, n-gram detection, embeddings, classifiers, t-SNE."""

import os
import sys

# Pin BLAS to one thread before numpy loads: reproducibility of reductions
# outranks parallel speedup at the matrix sizes used here.
if "numpy" not in sys.modules:
    for _var in ("OPENBLAS_NUM_THREADS", "OMP_NUM_THREADS", "MKL_NUM_THREADS"):
        os.environ.setdefault(_var, "1")

__version__ = "0.1.0"
