try:
    from ._version import version as __version__  # noqa
except ImportError:
    __version__ = "0.1.0"
