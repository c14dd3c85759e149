class ConsistencyError(RuntimeError):
    """Two routes that must agree did not (maps to CLI exit code 3)."""
