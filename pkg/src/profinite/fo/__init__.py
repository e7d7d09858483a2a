"""First-order framework: finite relational structures and FO sentences."""

from .framework import FOFramework, fo_framework_from_json
from .semantics import (
    BOTTOM, TOP, characteristic_sentence, conjunction_recogniser, evaluate_sentence,
    linear_order_without_maximum, random_sentence, realized_truth_tuples, strict_linear_order,
)
from .structures import (
    GRAPH, FiniteStructure, Signature, canonical, structure_enumerator, structures_up_to,
)
from .syntax import parse, to_text

__all__ = [
    "BOTTOM", "TOP", "GRAPH", "FOFramework", "FiniteStructure", "Signature", "canonical",
    "characteristic_sentence", "conjunction_recogniser", "evaluate_sentence",
    "fo_framework_from_json", "linear_order_without_maximum", "parse", "random_sentence",
    "realized_truth_tuples", "strict_linear_order", "structure_enumerator",
    "structures_up_to", "to_text",
]
