class CapExceeded(RuntimeError):
    """A configured resource cap (enumeration size, brute-force size, ...) was hit."""
