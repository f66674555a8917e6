"""
Dynamic rough sets: transfer coefficients, inflated/contracted sets, the
two-direction dynamic set and its D-lower/D-upper approximations.

Coefficients are exact fractions of block sizes and thresholds are compared
exactly (ties at the threshold transfer).
"""

from fractions import Fraction
from typing import Iterable, Union

from ..errors import TransferError
from ..models.discovery import DynamicSetBundle, TransferStandard
from .table import InformationTable, ObjectSet, lower_approx, upper_approx

StandardLike = Union[TransferStandard, Fraction, float, int]


def _standard(value: StandardLike) -> Fraction:
    try:
        return TransferStandard.of(value).exact
    except ValueError as exc:
        raise TransferError(f"transfer standard must lie in [0, 1], got {value!r}") from exc


def _leak(table: InformationTable, attrs: Iterable[str], members: ObjectSet, obj: str) -> Fraction:
    block = table.partition(attrs).block_of(obj)
    return Fraction(len(block - members), len(block))


def outward_coefficient(table: InformationTable, attrs: Iterable[str], target: Iterable[str], obj: str) -> Fraction:
    """Share of the block of ``obj`` lying outside ``target``; ``obj`` must be inside."""
    members = table.check_objects(target)
    if obj not in members:
        raise TransferError(f"outward coefficient is defined only inside the set, {obj!r} is outside")
    return _leak(table, attrs, members, obj)


def inward_coefficient(table: InformationTable, attrs: Iterable[str], target: Iterable[str], obj: str) -> Fraction:
    """Share of the block of ``obj`` lying inside ``target``; ``obj`` must be outside."""
    members = table.check_objects(target)
    table.check_objects([obj])
    if obj in members:
        raise TransferError(f"inward coefficient is defined only outside the set, {obj!r} is inside")
    return 1 - _leak(table, attrs, members, obj)


def _outside_by_inward(table, attrs, members, keep) -> ObjectSet:
    chosen = set()
    for block in table.partition(attrs).block_sets:
        outside = block - members
        if outside:
            rho = Fraction(len(block & members), len(block))
            if keep(rho):
                chosen |= outside
    return frozenset(chosen)


def _inside_by_outward(table, attrs, members, keep) -> ObjectSet:
    chosen = set()
    for block in table.partition(attrs).block_sets:
        inside = block & members
        if inside:
            rho = Fraction(len(block - members), len(block))
            if keep(rho):
                chosen |= inside
    return frozenset(chosen)


def inflated_main_set(table: InformationTable, attrs: Iterable[str], target: Iterable[str], d_plus: StandardLike) -> ObjectSet:
    """Outside objects whose inward coefficient reaches ``d_plus`` without being 1."""
    members = table.check_objects(target)
    threshold = _standard(d_plus)
    return _outside_by_inward(table, attrs, members, lambda rho: threshold <= rho < 1)


def inflated_assistant_set(table: InformationTable, attrs: Iterable[str], target: Iterable[str], d_plus: StandardLike) -> ObjectSet:
    """Outside objects whose inward coefficient stays below ``d_plus``."""
    members = table.check_objects(target)
    threshold = _standard(d_plus)
    return _outside_by_inward(table, attrs, members, lambda rho: 0 <= rho < threshold)


def contracted_main_set(table: InformationTable, attrs: Iterable[str], target: Iterable[str], d_minus: StandardLike) -> ObjectSet:
    """Inside objects whose outward coefficient reaches ``d_minus`` without being 1."""
    members = table.check_objects(target)
    threshold = _standard(d_minus)
    return _inside_by_outward(table, attrs, members, lambda rho: threshold <= rho < 1)


def contracted_assistant_set(table: InformationTable, attrs: Iterable[str], target: Iterable[str], d_minus: StandardLike) -> ObjectSet:
    """Inside objects whose outward coefficient stays below ``d_minus``."""
    members = table.check_objects(target)
    threshold = _standard(d_minus)
    return _inside_by_outward(table, attrs, members, lambda rho: 0 <= rho < threshold)


def inflated_set(table: InformationTable, attrs: Iterable[str], target: Iterable[str], d_plus: StandardLike) -> ObjectSet:
    """``target`` grown by its inflated main set."""
    members = table.check_objects(target)
    return members | inflated_main_set(table, attrs, members, d_plus)


def contracted_set(table: InformationTable, attrs: Iterable[str], target: Iterable[str], d_minus: StandardLike) -> ObjectSet:
    """``target`` shrunk by its contracted main set."""
    members = table.check_objects(target)
    return members - contracted_main_set(table, attrs, members, d_minus)


def two_direction_set(
    table: InformationTable,
    expand_attrs: Iterable[str],
    d_plus: StandardLike,
    contract_attrs: Iterable[str],
    d_minus: StandardLike,
    target: Iterable[str],
) -> ObjectSet:
    """``target`` minus its contracted main set over ``contract_attrs``, plus its inflated main set over ``expand_attrs``."""
    members = table.check_objects(target)
    contracted = contracted_main_set(table, contract_attrs, members, d_minus)
    inflated = inflated_main_set(table, expand_attrs, members, d_plus)
    return (members - contracted) | inflated


def d_lower_approx(table: InformationTable, attrs: Iterable[str], x_star: Iterable[str]) -> ObjectSet:
    """Objects whose block over ``attrs`` lies inside ``x_star``."""
    return lower_approx(table, attrs, x_star)


def d_upper_approx(table: InformationTable, attrs: Iterable[str], x_star: Iterable[str]) -> ObjectSet:
    """Objects whose block over ``attrs`` meets ``x_star``."""
    return upper_approx(table, attrs, x_star)


def dynamic_bundle(
    table: InformationTable,
    expand_attrs: Iterable[str],
    d_plus: StandardLike,
    contract_attrs: Iterable[str],
    d_minus: StandardLike,
    approx_attrs: Iterable[str],
    target: Iterable[str],
) -> DynamicSetBundle:
    """Every dynamic set of one two-direction transfer of ``target``."""
    members = table.check_objects(target)
    expand_attrs, contract_attrs, approx_attrs = list(expand_attrs), list(contract_attrs), list(approx_attrs)
    inflated_main = inflated_main_set(table, expand_attrs, members, d_plus)
    contracted_main = contracted_main_set(table, contract_attrs, members, d_minus)
    x_star = (members - contracted_main) | inflated_main
    return DynamicSetBundle(
        inflated_main=table.ordered(inflated_main),
        inflated_assistant=table.ordered(inflated_assistant_set(table, expand_attrs, members, d_plus)),
        contracted_main=table.ordered(contracted_main),
        contracted_assistant=table.ordered(contracted_assistant_set(table, contract_attrs, members, d_minus)),
        two_direction=table.ordered(x_star),
        d_lower=table.ordered(d_lower_approx(table, approx_attrs, x_star)),
        d_upper=table.ordered(d_upper_approx(table, approx_attrs, x_star)),
    )
