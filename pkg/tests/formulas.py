"""Independent reference data for the tests, written as plain formula text.

Nothing here imports the package: sequences and sizes are evaluated from the
strings below by a small expression reader, so a typo in the library tables
cannot hide behind the same typo here.
"""

import ast
import operator
import re
from fractions import Fraction

# residue classes -> (family, sequence text)
SEQUENCES = {
    7: {
        (1, 3, 5): ("J7-135", "[0,4,L,L+8,3L+4,3L+12,4L+8]"),
        (0, 2, 4): ("J7-024", "[0,4,L+1,L+9,3L+7,3L+15,4L+12]"),
        (9,): ("J7-9", "[0,4,L+2,L+10,3L+10,3L+18,4L+16]"),
        (8,): ("J7-8", "[0,4,L+3,L+11,3L+13,3L+21,4L+20]"),
        (7,): ("J7-7", "[0,8,L,L+16,3L+8,3L+24,4L+16]"),
        (6,): ("J7-6", "[0,8,L+1,L+17,3L+11,3L+27,4L+20]"),
    },
    8: {
        (1, 3, 5): ("J8-135", "[0,4,L,L+8,3L+4,3L+12,4L+8,4L+12]"),
        (0, 2, 4): ("J8-024", "[0,4,L+1,L+9,3L+7,3L+15,4L+12,4L+16]"),
        (9,): ("J8-9", "[0,4,L+2,L+10,3L+10,3L+18,4L+16,4L+20]"),
        (8,): ("J8-8", "[0,4,L+3,L+11,3L+13,3L+21,4L+20,4L+24]"),
        (7,): ("J8-7", "[0,8,L,L+16,3L+8,3L+24,4L+16,4L+24]"),
        (6,): ("J8-6", "[0,8,L+1,L+17,3L+11,3L+27,4L+20,4L+28]"),
    },
}

# consecutive-size thresholds, one per family
CCS_THRESHOLDS = {
    "J7-135": "(L-1)(4L+8)+1",
    "J7-024": "(4L+12)(L-1)+1",
    "J7-9": "(4L+16)(L-1)+1",
    "J7-8": "(4L+20)(L-1)+1",
    "J7-7": "(L-1)(4L+16)+1",
    "J7-6": "(4L+20)(L-1)+1",
    "J8-135": "(L-1)(4L+12)+1",
    "J8-024": "(4L+16)(L-1)+1",
    "J8-9": "(4L+20)(L-1)+1",
    "J8-8": "(4L+24)(L-1)+1",
    "J8-7": "(L-1)(4L+24)+1",
    "J8-6": "(4L+28)(L-1)+1",
}

GLOBAL_LOWER = {7: "4(L-1)(L+5)+1", 8: "4(L-1)(L+7)+1"}
MIN_SIZE_UPPER = {7: "(L+1)(3L+13)", 8: "(3L+4)(L+6)+7"}

# residue -> (size text, family, columns taken from the family at L+1?)
SMALL_SIZES = {
    7: {
        1: ("L(3L+4)", "J7-135", False),
        3: ("L(3L+4)", "J7-135", False),
        4: ("3L^2+10L+15", "J7-024", False),
        5: ("L(3L+6)", "J7-135", False),
        7: ("L(3L+8)", "J7-7", False),
        9: ("L(3L+10)", "J7-9", False),
        0: ("(L+1)(3L+7)", "J7-135", True),
        2: ("(L+1)(3L+7)", "J7-135", True),
        6: ("(L+1)(3L+11)", "J7-7", True),
        8: ("(L+1)(3L+13)", "J7-9", True),
    },
    8: {
        1: ("L(3L+8)", "J8-135", False),
        3: ("L(3L+8)", "J8-135", False),
        5: ("L(3L+10)", "J8-135", False),
        7: ("L(3L+16)", "J8-7", False),
        9: ("3L^2+16L+12", "J8-9", False),
        0: ("(L+1)(3L+11)", "J8-135", True),
        2: ("(L+1)(3L+11)", "J8-135", True),
        4: ("(L+1)(3L+13)", "J8-135", True),
        6: ("(L+1)(3L+19)", "J8-7", True),
        8: ("3L^2+22L+31", "J8-9", True),
    },
}

_OPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
        ast.Pow: operator.pow, ast.FloorDiv: operator.floordiv,
        ast.Div: lambda a, b: Fraction(a, b)}


def _to_python(text):
    s = text.replace("^", "**")
    s = re.sub(r"(\d)\s*(L|\()", r"\1*\2", s)
    s = re.sub(r"(L|\))\s*(\(|L)", r"\1*\2", s)
    return s


def _eval(node, L):
    if isinstance(node, ast.Expression):
        return _eval(node.body, L)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name) and node.id == "L":
        return L
    if isinstance(node, ast.BinOp) and type(node.op) in _OPS:
        return _OPS[type(node.op)](_eval(node.left, L), _eval(node.right, L))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, ast.USub):
        return -_eval(node.operand, L)
    if isinstance(node, ast.List):
        return [_eval(e, L) for e in node.elts]
    raise ValueError(f"unsupported formula element {ast.dump(node)}")


def evaluate(text, L):
    """Evaluate ``"L(3L+4)"`` or ``"[0,4,L]"`` style text at an integer L."""
    return _eval(ast.parse(_to_python(text), mode="eval"), L)


def sequence_text(J, L):
    for residues, (family, text) in SEQUENCES[J].items():
        if L % 10 in residues:
            return family, text
    raise KeyError((J, L))


def family_text(family):
    J = int(family[1])
    for fam, text in SEQUENCES[J].values():
        if fam == family:
            return text
    raise KeyError(family)


def is_strictly_increasing(seq):
    return all(a < b for a, b in zip(seq, seq[1:]))


def smallest_valid_L(family):
    """Smallest L > J in the family's residue class with an increasing sequence."""
    J = int(family[1])
    residues = next(r for r, (f, _) in SEQUENCES[J].items() if f == family)
    text = family_text(family)
    L = J + 1
    while L % 10 not in residues or not is_strictly_increasing(evaluate(text, L)):
        L += 1
    return L
