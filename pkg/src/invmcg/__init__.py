"""Inverse braid monoids and inverse mapping class monoids of the punctured sphere."""

from .partial import PartialInjection, compose, inverse, is_idempotent, tau_of_word
from .sphere import MarkovNormalForm, equal_sphere, normal_form
from .tower import PartialMCElement, embed, multiply, normalize
from .words import GeneratorWord, WordError, parse_word, print_word, relations

__all__ = [
    "GeneratorWord",
    "MarkovNormalForm",
    "PartialInjection",
    "PartialMCElement",
    "WordError",
    "compose",
    "embed",
    "equal_sphere",
    "inverse",
    "is_idempotent",
    "multiply",
    "normal_form",
    "normalize",
    "parse_word",
    "print_word",
    "relations",
    "tau_of_word",
]
