"""Package for miscellaneous things."""
