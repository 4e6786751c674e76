"""Strong chromatic index and strong clique number of multigraphs without a fixed clique minor."""

__version__ = "0.1.0"
