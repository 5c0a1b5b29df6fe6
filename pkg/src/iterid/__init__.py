"""Iterated identities of groups: free-group words, group backends and verbal dynamics."""

from .wordparse import WordSyntaxError, parse_word, render_word
from .words import Word, named_word

__version__ = "0.1.0"

__all__ = ["Word", "WordSyntaxError", "named_word", "parse_word", "render_word"]
