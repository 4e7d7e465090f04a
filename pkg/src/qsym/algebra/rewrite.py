"""Degree-bounded overlap completion and reduction with traces."""

from __future__ import annotations

import heapq
import logging
import threading
from collections import Counter, defaultdict
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, NamedTuple, Sequence

from cachetools import LRUCache

from .errors import DegreeTooSmall
from .order import DegLex, SymbolOrder
from .poly import NCPoly

if TYPE_CHECKING:
    from .alphabet import Word
    from .presentation import Presentation

LOGGER = logging.getLogger(__name__)
DEFAULT_RULE_CAP = 20000


class Use(NamedTuple):
    """``coeff * left * source * right`` where source is a relation (``rule`` false) or a rule identifier."""

    coeff: Fraction
    left: Word
    source: int
    right: Word
    rule: bool


class Step(NamedTuple):
    """One rewrite: ``coeff * left * (lead - rhs) * right`` was subtracted."""

    coeff: Fraction
    left: Word
    rule: int
    right: Word


class Rule:
    """An oriented, monic rule ``lead -> rhs``; ``origin`` expresses ``lead - rhs`` through earlier facts."""

    __slots__ = ("ident", "lead", "origin", "rhs")

    def __init__(self, ident: int, lead: Word, rhs: dict[Word, Fraction], origin: tuple[Use, ...]) -> None:
        self.ident = ident
        self.lead = lead
        self.rhs = rhs
        self.origin = origin

    @property
    def poly(self) -> NCPoly:
        terms = {w: -c for w, c in self.rhs.items()}
        terms[self.lead] = Fraction(1)
        return NCPoly(terms)

    def __repr__(self) -> str:
        return f"Rule#{self.ident}({' '.join(self.lead) or '1'} -> {NCPoly(self.rhs)})"


def _factors(word: Word) -> set[Word]:
    size = len(word)
    return {word[start:end] for start in range(size + 1) for end in range(start, size + 1)}


def _overlaps(first: Word, second: Word) -> Iterable[int]:
    """:return: lengths ``k`` where a proper suffix of ``first`` equals a proper prefix of ``second``"""
    for size in range(1, min(len(first), len(second))):
        if first[-size:] == second[:size]:
            yield size


class _Engine:
    """Rule store plus reducer shared by the completion procedure and the read-only snapshots."""

    def __init__(self, order: DegLex) -> None:
        self.order = order
        self.rules: dict[Word, Rule] = {}
        self.archive: dict[int, Rule] = {}
        self._lengths: Counter[int] = Counter()
        self._sorted_lengths: list[int] = []

    def _install(self, rule: Rule) -> None:
        self.rules[rule.lead] = rule
        self.archive[rule.ident] = rule
        self._lengths[len(rule.lead)] += 1
        self._sorted_lengths = sorted(k for k, v in self._lengths.items() if v)

    def _uninstall(self, rule: Rule) -> None:
        del self.rules[rule.lead]
        self._lengths[len(rule.lead)] -= 1
        self._sorted_lengths = sorted(k for k, v in self._lengths.items() if v)

    def match(self, word: Word) -> tuple[int, Rule] | None:
        """:return: leftmost (then shortest) rule occurrence inside ``word``"""
        rules, size = self.rules, len(word)
        for start in range(size + 1):
            for length in self._sorted_lengths:
                if start + length > size:
                    break
                rule = rules.get(word[start : start + length])
                if rule is not None:
                    return start, rule
        return None

    def reduce(self, poly: NCPoly) -> tuple[dict[Word, Fraction], list[Step]]:
        order, result, steps = self.order, {}, []
        work = dict(poly.terms)
        heap = [(order.heap_key(w), w) for w in work]
        heapq.heapify(heap)
        while heap:
            _, word = heapq.heappop(heap)
            coeff = work.pop(word, None)
            if coeff is None:  # stale entry, already consumed or cancelled
                continue
            hit = self.match(word)
            if hit is None:
                result[word] = coeff
                continue
            start, rule = hit
            left, right = word[:start], word[start + len(rule.lead) :]
            steps.append(Step(coeff, left, rule.ident, right))
            for rhs_word, rhs_coeff in rule.rhs.items():
                new_word = left + rhs_word + right
                value = work.get(new_word)
                if value is None:
                    work[new_word] = coeff * rhs_coeff
                    heapq.heappush(heap, (order.heap_key(new_word), new_word))
                else:
                    value += coeff * rhs_coeff
                    if value:
                        work[new_word] = value
                    else:
                        del work[new_word]
        return result, steps


class RewriteSystem:
    """
    An immutable snapshot of a completion run.

    Rules are monic and inter-reduced; every rule's leading word exceeds all words on its right-hand side, so reduction
    terminates. ``saturated`` means no overlap is left at any length, i.e. the rules are confluent.
    """

    def __init__(  # noqa: PLR0913
        self,
        presentation: Presentation,
        order: DegLex,
        bound: int,
        rules: dict[Word, Rule],
        archive: dict[int, Rule],
        saturated: bool,  # noqa: FBT001
        truncated: bool,  # noqa: FBT001
        expansions: dict[int, dict[tuple[Word, int, Word], Fraction]],
    ) -> None:
        self.presentation = presentation
        self.bound = bound
        self.saturated = saturated
        self.truncated = truncated
        self._engine = _Engine(order)
        for rule in rules.values():
            self._engine._install(rule)  # noqa: SLF001
        self._engine.archive = archive
        self._expansions = expansions

    @property
    def order(self) -> DegLex:
        return self._engine.order

    @property
    def rules(self) -> Sequence[Rule]:
        return sorted(self._engine.rules.values(), key=lambda r: self.order.key(r.lead))

    def __len__(self) -> int:
        return len(self._engine.rules)

    def normalize(self, poly: NCPoly) -> tuple[NCPoly, tuple[Step, ...]]:
        """
        Reduce a polynomial to normal form.

        :param poly: the polynomial to reduce
        :return: the normal form and the trace, ``poly = normal form + sum of coeff * left * rule * right``
        """
        result, steps = self._engine.reduce(poly)
        return NCPoly(result), tuple(steps)

    def is_normal(self, word: Word) -> bool:
        return self._engine.match(word) is None

    def expand(self, rule_id: int) -> dict[tuple[Word, int, Word], Fraction]:
        """:return: the rule polynomial as ``{(left, relation index, right): coeff}``"""
        pending, needed = [rule_id], set()
        while pending:
            ident = pending.pop()
            if ident in needed or ident in self._expansions:
                continue
            needed.add(ident)
            pending.extend(use.source for use in self._engine.archive[ident].origin if use.rule)
        for ident in sorted(needed):  # origins only refer to rules created earlier
            acc: defaultdict[tuple[Word, int, Word], Fraction] = defaultdict(Fraction)
            for use in self._engine.archive[ident].origin:
                if not use.rule:
                    acc[use.left, use.source, use.right] += use.coeff
                    continue
                for (left, rel, right), coeff in self._expansions[use.source].items():
                    acc[use.left + left, rel, right + use.right] += use.coeff * coeff
            self._expansions[ident] = {k: v for k, v in acc.items() if v}
        return self._expansions[rule_id]

    def express(self, steps: Iterable[Step]) -> dict[tuple[Word, int, Word], Fraction]:
        """:return: the sum of a trace expressed through presentation relations"""
        acc: defaultdict[tuple[Word, int, Word], Fraction] = defaultdict(Fraction)
        for step in steps:
            for (left, rel, right), coeff in self.expand(step.rule).items():
                acc[step.left + left, rel, right + step.right] += step.coeff * coeff
        return {k: v for k, v in acc.items() if v}

    def __repr__(self) -> str:
        flags = ", saturated" if self.saturated else (", truncated" if self.truncated else "")
        return f"{type(self).__name__}({self.presentation.name!r}, bound={self.bound}, rules={len(self)}{flags})"


class Completion(_Engine):
    """
    Incremental, single-writer overlap completion of a presentation.

    Overlaps are processed by increasing superposition length, so extending a run to a higher bound continues exactly
    where a lower bound stopped.
    """

    def __init__(self, presentation: Presentation, order: DegLex, rule_cap: int = DEFAULT_RULE_CAP) -> None:
        super().__init__(order)
        self.presentation = presentation
        self.rule_cap = rule_cap
        self.bound = 0
        self.truncated = False
        self.lock = threading.RLock()
        self._next_id = 0
        self._pairs: list[tuple[int, tuple[int, tuple[int, ...]], Word, Word, int]] = []
        self._seen_pairs: set[tuple[Word, Word, int]] = set()
        self._expansions: dict[int, dict[tuple[Word, int, Word], Fraction]] = {}
        self._in_leads: defaultdict[Word, set[Word]] = defaultdict(set)  # factor -> leads containing it
        self._in_rhs: defaultdict[Word, set[Word]] = defaultdict(set)  # factor -> leads whose rhs contains it
        self._seeded = False

    def _install(self, rule: Rule) -> None:
        super()._install(rule)
        for factor in _factors(rule.lead):
            self._in_leads[factor].add(rule.lead)
        for word in rule.rhs:
            for factor in _factors(word):
                self._in_rhs[factor].add(rule.lead)

    def _uninstall(self, rule: Rule) -> None:
        super()._uninstall(rule)
        for factor in _factors(rule.lead):
            self._in_leads[factor].discard(rule.lead)
        for word in rule.rhs:
            for factor in _factors(word):
                self._in_rhs[factor].discard(rule.lead)

    def _seed(self) -> None:
        relations = self.presentation.relations
        ordering = sorted(range(len(relations)), key=lambda i: self.order.key(self.order.leading(relations[i])[0]))
        for at in ordering:
            self._resolve(relations[at], (Use(Fraction(1), (), at, (), rule=False),))
        self._seeded = True

    def extend(self, bound: int) -> RewriteSystem:
        """
        Resolve every overlap whose superposition is at most ``bound`` long.

        :param bound: the degree bound
        :return: a snapshot of the rules
        """
        if bound < self.presentation.max_degree:
            msg = f"bound {bound} is below the relation degree {self.presentation.max_degree}"
            raise DegreeTooSmall(msg)
        with self.lock:
            if not self._seeded:
                self._seed()
            processed = 0
            while self._pairs and self._pairs[0][0] <= bound:
                if len(self.rules) >= self.rule_cap:
                    self.truncated = True
                    LOGGER.warning("completion of %s stopped at the rule cap %d", self.presentation.name, self.rule_cap)
                    break
                _, _, first_lead, second_lead, size = heapq.heappop(self._pairs)
                first, second = self.rules.get(first_lead), self.rules.get(second_lead)
                if first is None or second is None:  # one side was simplified away
                    continue
                left, right = first.lead[: len(first.lead) - size], second.lead[size:]
                # first.poly * right - left * second.poly, the leading words cancel
                spoly = NCPoly(second.rhs).sandwich(left, ()) - NCPoly(first.rhs).sandwich((), right)
                origin = (
                    Use(Fraction(1), (), first.ident, right, rule=True),
                    Use(Fraction(-1), left, second.ident, (), rule=True),
                )
                self._resolve(spoly, origin)
                processed += 1
            self.bound = max(self.bound, bound)
            LOGGER.debug(
                "completed %s to bound %d: %d overlaps, %d rules",
                self.presentation.name,
                bound,
                processed,
                len(self.rules),
            )
            return RewriteSystem(
                self.presentation,
                self.order,
                bound,
                dict(self.rules),
                self.archive,
                saturated=not self._pairs and not self.truncated,
                truncated=self.truncated,
                expansions=self._expansions,
            )

    def _resolve(self, poly: NCPoly, origin: tuple[Use, ...]) -> None:
        residue, steps = self.reduce(poly)
        if residue:
            self._adopt(residue, (*origin, *(Use(-s.coeff, s.left, s.rule, s.right, rule=True) for s in steps)))

    def _adopt(self, residue: dict[Word, Fraction], uses: tuple[Use, ...]) -> None:
        lead = max(residue, key=self.order.key)
        scale = 1 / residue[lead]
        rhs = {w: -c * scale for w, c in residue.items() if w != lead}
        origin = tuple(Use(u.coeff * scale, u.left, u.source, u.right, u.rule) for u in uses)
        rule = Rule(self._next_id, lead, rhs, origin)
        self._next_id += 1
        collapsed = [self.rules[at] for at in sorted(self._in_leads.get(lead, ()), key=self.order.key)]
        for old in collapsed:
            self._uninstall(old)
        stale = [self.rules[at] for at in sorted(self._in_rhs.get(lead, ()), key=self.order.key)]
        self._install(rule)
        for old in stale:
            self._simplify_rhs(old)
        self._add_pairs(rule)
        for old in collapsed:
            self._resolve(old.poly, (Use(Fraction(1), (), old.ident, (), rule=True),))

    def _simplify_rhs(self, rule: Rule) -> None:
        if self.rules.get(rule.lead) is not rule:
            return
        reduced, steps = self.reduce(NCPoly(rule.rhs))
        uses = (Use(Fraction(1), (), rule.ident, (), rule=True), *(Use(*s, rule=True) for s in steps))
        rebuilt = Rule(self._next_id, rule.lead, reduced, uses)
        self._next_id += 1
        self._uninstall(rule)
        self._install(rebuilt)

    def _add_pairs(self, rule: Rule) -> None:
        for other in list(self.rules.values()):
            for first, second in ((rule, other), (other, rule)) if other is not rule else ((rule, rule),):
                for size in _overlaps(first.lead, second.lead):
                    key = first.lead, second.lead, size
                    if key in self._seen_pairs:
                        continue
                    self._seen_pairs.add(key)
                    word = first.lead + second.lead[size:]
                    heapq.heappush(self._pairs, (len(word), self.order.key(word), first.lead, second.lead, size))


_CACHE: LRUCache[tuple[str, tuple[str, ...], int], Completion] = LRUCache(maxsize=64)
_CACHE_LOCK = threading.Lock()


def complete(
    presentation: Presentation,
    bound: int,
    order: SymbolOrder = "declaration",
    rule_cap: int = DEFAULT_RULE_CAP,
) -> RewriteSystem:
    """
    Complete a presentation up to a degree bound.

    Runs are cached per presentation, symbol order and rule cap; asking for a higher bound extends the cached run.

    :param presentation: the presentation to complete
    :param bound: superposition length bound
    :param order: symbol order of the degree-lexicographic monomial order
    :param rule_cap: stop adopting rules beyond this count
    :return: the rewrite system
    """
    deglex = DegLex.of(presentation.alphabet, order)
    key = presentation.fingerprint, deglex.symbols, rule_cap
    with _CACHE_LOCK:
        run = _CACHE.get(key)
        if run is None:
            run = _CACHE[key] = Completion(presentation, deglex, rule_cap)
        elif run.bound > bound:  # lower bounds get a private run
            run = Completion(presentation, deglex, rule_cap)
    return run.extend(bound)


def clear_cache() -> None:
    with _CACHE_LOCK:
        _CACHE.clear()


__all__ = (
    "DEFAULT_RULE_CAP",
    "Completion",
    "RewriteSystem",
    "Rule",
    "Step",
    "Use",
    "clear_cache",
    "complete",
)
