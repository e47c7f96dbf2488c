import os
import sys

# single-threaded BLAS keeps the tiny linear algebra here deterministic and
# avoids thread-pool startup cost dominating the suite
os.environ.setdefault("OMP_NUM_THREADS", "1")
os.environ.setdefault("OPENBLAS_NUM_THREADS", "1")
os.environ.setdefault("MKL_NUM_THREADS", "1")

sys.path.insert(0, os.path.dirname(__file__))
