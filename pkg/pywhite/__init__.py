"""Package for constructing symmetric exchange sequences between tuples of matroid bases."""
