class ClassificationInvariantError(Exception):
    """A fact that holds for every p-group failed; the computation is wrong, not the input."""
