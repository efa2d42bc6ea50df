"""Element-enumeration operations on small groups.

Everything here walks the full element list of a group, so every entry
point is gated by an explicit cutoff (default 10^6): exceeding it raises
:class:`ScaleLimitError` rather than returning a wrong or partial answer.

For degrees up to 255 elements are enumerated as ``bytes`` and composed
with ``bytes.translate``, which keeps full enumerations of groups like a
252000-element degree-50 group in the seconds range.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .perms import Permutation, _compose_t, _identity_t, _inverse_t
from .groups import (
    DEFAULT_ENUMERATION_CUTOFF,
    Group,
    ScaleLimitError,
    build_group,
    derived_subgroup,
    is_abelian,
    is_normal,
    is_subgroup,
    normal_closure,
    same_subgroup,
    trivial_group,
)

_BYTE_RANGE = bytes(range(256))


def _check_cutoff(group: Group, cutoff: int, what: str) -> None:
    if group.order > cutoff:
        raise ScaleLimitError(
            f"{what} needs element enumeration: order {group.order} exceeds "
            f"cutoff {cutoff}"
        )


def _iter_elements_bytes(group: Group) -> Iterator[bytes]:
    """All elements as length-n byte strings, deterministic order."""
    n = group.degree
    tail = _BYTE_RANGE[n:]
    levels = [
        [bytes(t.images) for t in trans.values()] for trans in group.transversals
    ]

    def rec(i: int, acc_table: bytes) -> Iterator[bytes]:
        if i == len(levels):
            yield acc_table[:n]
            return
        for rep in levels[i]:
            yield from rec(i + 1, rep.translate(acc_table) + tail)

    yield from rec(0, _BYTE_RANGE)


def _iter_elements_tuples(group: Group) -> Iterator[tuple[int, ...]]:
    levels = [[t.images for t in trans.values()] for trans in group.transversals]
    ident = _identity_t(group.degree)

    def rec(i: int, acc: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == len(levels):
            yield acc
            return
        for rep in levels[i]:
            yield from rec(i + 1, _compose_t(rep, acc))

    yield from rec(0, ident)


def iter_element_images(group: Group) -> Iterator[tuple[int, ...]]:
    """Every element's image tuple, deterministically ordered."""
    if group.degree <= 255:
        for b in _iter_elements_bytes(group):
            yield tuple(b)
    else:
        yield from _iter_elements_tuples(group)


def elements(group: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> list[Permutation]:
    _check_cutoff(group, cutoff, "element listing")
    return [Permutation(t) for t in iter_element_images(group)]


def normalizer(
    group: Group, sub: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> Group:
    """N_group(sub), by enumerating the ambient group's elements."""
    if not is_subgroup(group, sub):
        raise ValueError("candidate is not a subgroup")
    _check_cutoff(group, cutoff, "normalizer")
    sub_gens = [g.images for g in sub.generators]
    found = build_group(list(sub.generators) or [Permutation(_identity_t(group.degree))])
    for images in iter_element_images(group):
        p = Permutation(images)
        if found.contains(p):
            continue
        inv = _inverse_t(images)
        if all(
            sub.contains(Permutation(_compose_t(_compose_t(inv, h), images)))
            for h in sub_gens
        ):
            found = build_group(list(found.generators) + [p])
    return found


def centralizer(
    group: Group, sub: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> Group:
    """C_group(sub), by enumerating the ambient group's elements."""
    if not is_subgroup(group, sub):
        raise ValueError("candidate is not a subgroup")
    _check_cutoff(group, cutoff, "centralizer")
    sub_gens = [g.images for g in sub.generators]
    gens: list[Permutation] = []
    found = trivial_group(group.degree)
    for images in iter_element_images(group):
        p = Permutation(images)
        if found.contains(p):
            continue
        if all(
            _compose_t(images, h) == _compose_t(h, images) for h in sub_gens
        ):
            gens.append(p)
            found = build_group(gens)
    return found


def center(group: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> Group:
    return centralizer(group, group, cutoff)


def conjugacy_classes(
    group: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> list[tuple[Permutation, int]]:
    """(representative, class size) pairs; representatives are the first
    class members met in enumeration order, so the output is deterministic."""
    _check_cutoff(group, cutoff, "conjugacy class enumeration")
    n = group.degree
    gen_pairs = []
    for g in group.generators:
        gb = bytes(g.images) + _BYTE_RANGE[n:]
        gib = bytes(_inverse_t(g.images))
        gen_pairs.append((gib, gb))
    if n > 255:
        return _conjugacy_classes_tuples(group)
    seen: set[bytes] = set()
    out = []
    tail = _BYTE_RANGE[n:]
    for b in _iter_elements_bytes(group):
        if b in seen:
            continue
        cls = {b}
        queue = [b]
        while queue:
            x = queue.pop()
            x_table = x + tail
            for gib, gb in gen_pairs:
                y = gib.translate(x_table).translate(gb)
                if y not in cls:
                    cls.add(y)
                    queue.append(y)
        seen |= cls
        out.append((Permutation(tuple(b)), len(cls)))
    return out


def _conjugacy_classes_tuples(group: Group) -> list[tuple[Permutation, int]]:
    gen_pairs = [
        (_inverse_t(g.images), g.images) for g in group.generators
    ]
    seen: set[tuple[int, ...]] = set()
    out = []
    for t in _iter_elements_tuples(group):
        if t in seen:
            continue
        cls = {t}
        queue = [t]
        while queue:
            x = queue.pop()
            for gi, g in gen_pairs:
                y = _compose_t(_compose_t(gi, x), g)
                if y not in cls:
                    cls.add(y)
                    queue.append(y)
        seen |= cls
        out.append((Permutation(t), len(cls)))
    return out


def _class_of(group: Group, rep: Permutation) -> list[tuple[int, ...]]:
    gen_pairs = [(_inverse_t(g.images), g.images) for g in group.generators]
    cls = {rep.images}
    queue = [rep.images]
    while queue:
        x = queue.pop()
        for gi, g in gen_pairs:
            y = _compose_t(_compose_t(gi, x), g)
            if y not in cls:
                cls.add(y)
                queue.append(y)
    return sorted(cls)


def is_simple(group: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> bool:
    """Exact simplicity test via conjugacy-class closures.

    The group is simple iff the subgroup generated by the class of every
    nontrivial element is the whole group.
    """
    order = group.order
    if order == 1:
        raise ValueError("simplicity is undefined for the trivial group")
    if _is_prime(order):
        return True
    if is_abelian(group):
        return False
    _check_cutoff(group, cutoff, "simplicity test")
    for rep, _size in conjugacy_classes(group, cutoff):
        if rep.is_identity():
            continue
        closure = None
        for images in _class_of(group, rep):
            p = Permutation(images)
            if closure is None:
                closure = build_group([p])
            elif closure.contains(p):
                continue
            else:
                closure = build_group(list(closure.generators) + [p])
            if closure.order == order:
                break
        if closure is None or closure.order != order:
            return False
    return True


def minimal_normal_subgroups(group: Group, bound: int = 10**5) -> list[Group]:
    """Minimal elements of the normal subgroup poset, via class closures."""
    _check_cutoff(group, bound, "minimal normal subgroup search")
    closures = _class_closures(group, bound)
    minimal = []
    for n in closures:
        if any(
            other.order < n.order and is_subgroup(n, other) for other in closures
        ):
            continue
        minimal.append(n)
    minimal.sort(key=lambda g: g.order)
    return minimal


def _class_closures(group: Group, cutoff: int) -> list[Group]:
    out: list[Group] = []
    for rep, _size in conjugacy_classes(group, cutoff):
        if rep.is_identity():
            continue
        n = normal_closure(group, [rep])
        if not any(same_subgroup(n, seen) for seen in out):
            out.append(n)
    return out


def normal_subgroups(group: Group, bound: int = 10**5) -> list[Group]:
    """All normal subgroups (including the group itself), order ≤ bound scan.

    Every normal subgroup is a join of class closures, so closing the set of
    single-class closures under pairwise join enumerates the whole lattice.
    """
    _check_cutoff(group, bound, "normal subgroup sweep")
    found = _class_closures(group, bound)
    changed = True
    while changed:
        changed = False
        for i in range(len(found)):
            for j in range(i + 1, len(found)):
                join = build_group(
                    list(found[i].generators) + list(found[j].generators)
                )
                if not any(same_subgroup(join, seen) for seen in found):
                    found.append(join)
                    changed = True
    found.sort(key=lambda g: g.order)
    return found


def sylow_subgroup(
    group: Group, p: int, cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> Group:
    """A Sylow p-subgroup, grown by p-elements of the current normalizer."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    _check_cutoff(group, cutoff, "Sylow subgroup search")
    target = _p_part(group.order, p)
    current = trivial_group(group.degree)
    while current.order < target:
        ambient = group if current.is_trivial() else normalizer(group, current, cutoff)
        grown = False
        for images in iter_element_images(ambient):
            x = Permutation(images)
            m = x.order()
            pp = _p_part(m, p)
            if pp == 1:
                continue
            y = _power(x, m // pp)
            if not current.contains(y):
                current = build_group(list(current.generators) + [y])
                grown = True
                break
        if not grown:
            raise AssertionError("Sylow growth stalled; normalizer argument violated")
    assert current.order == target
    return current


def p_core(group: Group, p: int, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> Group:
    """Largest normal p-subgroup: intersection of all Sylow p-subgroups."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    _check_cutoff(group, cutoff, "p-core")
    if group.order % p != 0:
        return trivial_group(group.degree)
    sylow = sylow_subgroup(group, p, cutoff)
    common = {t for t in iter_element_images(sylow)}
    gen_pairs = [(_inverse_t(g.images), g.images) for g in group.generators]
    seen_keys = {tuple(sorted(common))}
    queue = [sorted(common)]
    while queue and len(common) > 1:
        elems = queue.pop()
        for gi, g in gen_pairs:
            conj = sorted(_compose_t(_compose_t(gi, t), g) for t in elems)
            key = tuple(conj)
            if key not in seen_keys:
                seen_keys.add(key)
                queue.append(conj)
                common &= set(conj)
    gens = [Permutation(t) for t in sorted(common)]
    core = build_group(gens or [Permutation(_identity_t(group.degree))])
    assert is_normal(group, core)
    return core


def _power(p: Permutation, k: int) -> Permutation:
    result = _identity_t(p.degree)
    base = p.images
    while k:
        if k & 1:
            result = _compose_t(result, base)
        base = _compose_t(base, base)
        k >>= 1
    return Permutation(result)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_p_group(group: Group) -> tuple[bool, int | None]:
    """(True, p) if the order is a prime power, (True, None) for order 1."""
    factors = prime_factors(group.order)
    if not factors:
        return True, None
    if len(factors) == 1:
        return True, factors[0]
    return False, None


def is_soluble(group: Group) -> bool:
    current = group
    while current.order > 1:
        nxt = derived_subgroup(current)
        if nxt.order == current.order:
            return False
        current = nxt
    return True


def is_cyclic(group: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF) -> bool:
    """Whether some single element generates the group (enumeration search)."""
    if group.order == 1:
        return True
    _check_cutoff(group, cutoff, "cyclicity test")
    order = group.order
    for images in iter_element_images(group):
        if Permutation(images).order() == order:
            return True
    return False


@dataclass(frozen=True)
class GroupFingerprint:
    """Cheap isomorphism invariants; equality is necessary, not sufficient,
    for isomorphism.  Enumeration-priced fields are None past the cutoff."""

    order: int
    is_abelian: bool
    derived_series_orders: tuple[int, ...]
    element_order_histogram: tuple[tuple[int, int], ...] | None
    center_order: int | None
    exponent: int | None


def fingerprint(
    group: Group, cutoff: int = DEFAULT_ENUMERATION_CUTOFF
) -> GroupFingerprint:
    series = [group.order]
    current = group
    while series[-1] > 1:
        current = derived_subgroup(current)
        series.append(current.order)
        if series[-1] == series[-2]:
            break
    histogram = None
    center_order = None
    exponent = None
    if group.order <= cutoff:
        counts: Counter[int] = Counter()
        for images in iter_element_images(group):
            counts[Permutation(images).order()] += 1
        histogram = tuple(sorted(counts.items()))
        exponent = math.lcm(*counts.keys())
        center_order = center(group, cutoff).order
    return GroupFingerprint(
        order=group.order,
        is_abelian=is_abelian(group),
        derived_series_orders=tuple(series),
        element_order_histogram=histogram,
        center_order=center_order,
        exponent=exponent,
    )
