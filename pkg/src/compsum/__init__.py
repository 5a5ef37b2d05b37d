"""Reader-aware compressive multi-document news summarization."""

__version__ = "0.1.0"
