"""The linear shape of Banica's magic unitary: every entry rewritten to its normal form."""

from __future__ import annotations

from typing import TYPE_CHECKING, NamedTuple

from qsym.algebra import DEFAULT_RULE_CAP, NCPoly, Proved, complete, prove_zero
from qsym.quantum import banica_presentation, entry, u

from .report import DEFAULT_LEMMA_BOUND

if TYPE_CHECKING:
    from qsym.algebra import Presentation, ProofCertificate, SymbolOrder
    from qsym.graph import Graph


class Identity(NamedTuple):
    """The proved equality ``symbol = rhs`` for the entry ``(i, j)``."""

    i: int
    j: int
    symbol: str
    rhs: NCPoly
    certificate: ProofCertificate

    def __str__(self) -> str:
        return f"{self.symbol} = {self.rhs}"


class MatrixShape(NamedTuple):
    n: int
    presentation: Presentation
    identities: tuple[Identity, ...]
    bound: int

    def entry(self, i: int, j: int) -> NCPoly:
        """:return: the normal form of ``u_ij``, the entry itself when it is not rewritten"""
        for identity in self.identities:
            if (identity.i, identity.j) == (i, j):
                return identity.rhs
        return entry(i, j, self.n)

    @property
    def zeros(self) -> list[tuple[int, int]]:
        return [(x.i, x.j) for x in self.identities if x.rhs.is_zero()]

    def render(self) -> list[str]:
        """:return: one line per matrix row, entries separated by ``|``"""
        span = range(1, self.n + 1)
        cells = [[str(self.entry(i, j)) for j in span] for i in span]
        width = max(len(cell) for row in cells for cell in row)
        return [" | ".join(cell.rjust(width) for cell in row) for row in cells]


def derive_matrix_shape(
    graph: Graph,
    bound: int = DEFAULT_LEMMA_BOUND,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> MatrixShape:
    """
    Rewrite every entry of the magic unitary of Banica's algebra to its normal form and prove each rewrite.

    The monomial order compares degrees first, so the normal form of an entry is a linear combination of smaller
    entries and the unit: the result is the block shape of the matrix, vanishing entries map to zero.

    :param graph: the graph
    :param bound: completion bound
    :param order: symbol order of the monomial order
    :param rule_cap: rule cap of the completion
    :return: one proved identity per rewritten entry, in row order
    """
    presentation = banica_presentation(graph)
    system = complete(presentation, max(bound, presentation.max_degree), order, rule_cap)
    identities: list[Identity] = []
    n = graph.n
    for i in graph.vertices:
        for j in graph.vertices:
            symbol = u(i, j, n)
            if system.is_normal((symbol,)):
                continue
            rhs = system.normalize(NCPoly.word(symbol))[0]
            result = prove_zero(system, NCPoly.word(symbol) - rhs)
            if isinstance(result, Proved):
                identities.append(Identity(i, j, symbol, rhs, result.certificate))
    return MatrixShape(n, presentation, tuple(identities), system.bound)


__all__ = (
    "Identity",
    "MatrixShape",
    "derive_matrix_shape",
)
