"""Exact finite-dimensional matrix representations of presented *-algebras."""

from __future__ import annotations

import json
import logging
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import TYPE_CHECKING, Any, Mapping, Sequence

import sympy as sp

from qsym.algebra import NCPoly, commutator
from qsym.graph import ParseError

from .errors import DimensionMismatch, MissingGenerator, RepInvalid

if TYPE_CHECKING:
    from qsym.algebra import GenAlphabet, Presentation

LOGGER = logging.getLogger(__name__)


def rational(value: Fraction | int | str) -> sp.Rational:
    value = Fraction(value) if not isinstance(value, Fraction) else value
    return sp.Rational(value.numerator, value.denominator)


def to_matrix(rows: Sequence[Sequence[Fraction | int | str]]) -> sp.Matrix:
    return sp.Matrix([[rational(x) for x in row] for row in rows])


class MatrixRep:
    """
    An assignment of exact rational ``d x d`` matrices to generators.

    Entries are real, so a generator's adjoint is represented by the transpose of its partner's matrix; a starred symbol
    missing from the assignment is filled in that way.
    """

    def __init__(self, dim: int, assign: Mapping[str, sp.Matrix]) -> None:
        self.dim = dim
        self.assign: dict[str, sp.Matrix] = {}
        for symbol, matrix in assign.items():
            if matrix.shape != (dim, dim):
                msg = f"matrix of {symbol} has shape {matrix.shape}, expected ({dim}, {dim})"
                raise DimensionMismatch(msg)
            self.assign[symbol] = sp.Matrix(matrix)

    def bound(self, alphabet: GenAlphabet) -> MatrixRep:
        """:return: the representation completed by transposes for the adjoints of assigned generators"""
        assign = dict(self.assign)
        for symbol in alphabet:
            if symbol not in assign:
                partner = alphabet.star(symbol)
                if partner not in self.assign:
                    raise MissingGenerator(symbol)
                assign[symbol] = self.assign[partner].T
        return MatrixRep(self.dim, assign)

    def evaluate(self, poly: NCPoly) -> sp.Matrix:
        result = sp.zeros(self.dim, self.dim)
        for word, coeff in poly.items():
            term = sp.eye(self.dim)
            for symbol in word:
                if symbol not in self.assign:
                    raise MissingGenerator(symbol)
                term = term * self.assign[symbol]
            result += rational(coeff) * term
        return result

    def __getitem__(self, symbol: str) -> sp.Matrix:
        return self.assign[symbol]

    def to_json(self) -> dict[str, Any]:
        return {
            "dim": self.dim,
            "assign": {
                symbol: [[str(matrix[i, j]) for j in range(self.dim)] for i in range(self.dim)]
                for symbol, matrix in self.assign.items()
            },
        }

    @classmethod
    def from_json(cls, raw: Any, source: str = "<json>") -> MatrixRep:
        if not isinstance(raw, dict) or not isinstance(raw.get("dim"), int) or not isinstance(raw.get("assign"), dict):
            msg = f"{source}: expected an object with an integer 'dim' and an object 'assign'"
            raise ParseError(msg)
        try:
            assign = {str(k): to_matrix(v) for k, v in raw["assign"].items()}
            return cls(raw["dim"], assign)
        except (TypeError, ValueError, ZeroDivisionError) as exception:
            msg = f"{source}: {exception}"
            raise ParseError(msg) from exception


def load_rep(path: Path) -> MatrixRep:
    try:
        raw = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exception:
        msg = f"cannot read representation file {path}: {exception}"
        raise ParseError(msg) from exception
    return MatrixRep.from_json(raw, source=str(path))


def dump_rep(rep: MatrixRep, path: Path) -> None:
    Path(path).write_text(json.dumps(rep.to_json(), indent=2) + "\n", encoding="utf-8")


def verify_representation(presentation: Presentation, rep: MatrixRep) -> tuple[bool, int | None]:
    """
    Check a representation against every relation exactly.

    :param presentation: the presentation
    :param rep: the representation, adjoints may be left out
    :return: whether every relation maps to the zero matrix, and the index of the first relation that does not
    """
    bound = rep.bound(presentation.alphabet)
    for symbol in presentation.alphabet:
        partner = presentation.alphabet.star(symbol)
        if bound[symbol].T != bound[partner]:
            msg = f"matrix of {partner} is not the transpose of the matrix of {symbol}"
            raise RepInvalid(msg)
    for at, relation in enumerate(presentation.relations):
        if not bound.evaluate(relation).is_zero_matrix:
            LOGGER.debug("relation %d (%s) of %s fails: %s", at, presentation.labels[at], presentation.name, relation)
            return False, at
    return True, None


def certify_noncommutative(presentation: Presentation, rep: MatrixRep, a: NCPoly, b: NCPoly) -> bool:
    """
    Certify that ``a`` and ``b`` do not commute in the presented algebra.

    :param presentation: the presentation
    :param rep: a representation of it
    :param a: first element
    :param b: second element
    :return: ``True`` iff the represented commutator is nonzero
    :raises RepInvalid: if the representation does not satisfy the relations
    """
    valid, failing = verify_representation(presentation, rep)
    if not valid:
        msg = f"representation violates relation {failing} of {presentation.name}"
        raise RepInvalid(msg)
    return not rep.bound(presentation.alphabet).evaluate(commutator(a, b)).is_zero_matrix


def noncommuting_pair(presentation: Presentation, rep: MatrixRep) -> tuple[str, str] | None:
    """:return: the first pair of generators (declaration order) whose represented commutator is nonzero"""
    bound = rep.bound(presentation.alphabet)
    for a, b in combinations(presentation.alphabet.symbols, 2):
        if bound[a] * bound[b] != bound[b] * bound[a]:
            return a, b
    return None


__all__ = (
    "MatrixRep",
    "certify_noncommutative",
    "dump_rep",
    "load_rep",
    "noncommuting_pair",
    "rational",
    "to_matrix",
    "verify_representation",
)
