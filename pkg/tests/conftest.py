import pathlib
import sys

# Allow running the suite from a checkout without installing the package.
try:
    import gatemask  # noqa: F401
except ImportError:
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))
