"""Pick the compiled kernels when they were built, else the Python reference versions."""
try:
    from switchlist import _kernels as kernels

    BACKEND = "cython"
except ImportError:  # extension not built
    from switchlist import _pykernels as kernels

    BACKEND = "python"

__all__ = ["BACKEND", "kernels"]
