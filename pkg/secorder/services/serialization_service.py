"""
Serialization service: JSON documents for families, pairs, truth tables and reports.
"""

from typing import Any, Dict, Tuple

from secorder.errors import UsageError
from secorder.models.boolean_function import BooleanFunction
from secorder.models.family import GroundSet, SetFamily
from secorder.utils.bit_utils import text_to_word, word_to_text


def family_to_dict(family: SetFamily) -> Dict[str, Any]:
    """
    Generate the JSON object of a family.

    Args:
        family: The family to serialize

    Returns:
        dict: {"ground": [...], "components": [[...], ...]} in coordinate order
    """
    return {
        'ground': list(family.ground.labels),
        'components': family.component_labels(),
    }


def family_from_dict(document: Any, ground: GroundSet = None) -> SetFamily:
    """
    Parse a family object.

    Args:
        document: Decoded JSON object with "ground" and "components"
        ground: Ground set to reuse when the labels agree

    Returns:
        SetFamily: the parsed family
    """
    if not isinstance(document, dict):
        raise UsageError("A family must be a JSON object")
    if 'components' not in document or not isinstance(document['components'], list):
        raise UsageError("A family needs a 'components' list")
    components = document['components']
    for component in components:
        if not isinstance(component, list):
            raise UsageError("Every component must be a list of labels")

    labels = document.get('ground')
    if labels is None:
        raise UsageError("A family needs a 'ground' list")
    if not isinstance(labels, list):
        raise UsageError("'ground' must be a list of labels")
    parsed_ground = GroundSet.of(labels)
    if ground is not None:
        if set(parsed_ground.labels) != set(ground.labels):
            raise UsageError("X and Y are defined over different ground sets")
        parsed_ground = ground
    return SetFamily.from_labels(parsed_ground, components)


def pair_from_dict(document: Any) -> Tuple[SetFamily, SetFamily]:
    """Parse {"X": family, "Y": family}; Y is re-indexed onto the ground of X."""
    if not isinstance(document, dict) or 'X' not in document or 'Y' not in document:
        raise UsageError("A pair file must hold an object with keys 'X' and 'Y'")
    x = family_from_dict(document['X'])
    y = family_from_dict(document['Y'], ground=x.ground)
    return x, y


def pair_to_dict(x: SetFamily, y: SetFamily) -> Dict[str, Any]:
    return {'X': family_to_dict(x), 'Y': family_to_dict(y)}


def table_to_dict(f: BooleanFunction) -> Dict[str, Any]:
    """{"n": n, "outputs": [...]} with outputs indexed by packed input."""
    return {
        'n': f.width,
        'outputs': [word_to_text(f.width, v) for v in f.outputs()],
    }


def table_from_dict(document: Any) -> BooleanFunction:
    """
    Parse a truth table; the key "table" is accepted as well as "outputs".

    Returns:
        BooleanFunction: table-backed
    """
    if not isinstance(document, dict) or 'n' not in document:
        raise UsageError("A truth table must be an object with 'n' and 'outputs'")
    n = document['n']
    if not isinstance(n, int) or isinstance(n, bool):
        raise UsageError(f"'n' must be an integer, got {n!r}")
    rows = document.get('outputs', document.get('table'))
    if not isinstance(rows, list):
        raise UsageError("A truth table needs an 'outputs' list")
    outputs = []
    for row in rows:
        if not isinstance(row, str) or len(row) != n:
            raise UsageError(f"Output {row!r} is not a word of width {n}")
        outputs.append(text_to_word(row))
    return BooleanFunction.from_table(n, outputs, name='table')
