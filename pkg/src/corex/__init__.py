"""Main-content extraction and structural page similarity for HTML."""
__version__ = "0.1.0"
