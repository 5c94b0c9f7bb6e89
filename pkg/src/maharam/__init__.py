"""Ordinals, Schreier families, rank games and toy exhaustive submeasures."""
