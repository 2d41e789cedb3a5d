"""Render engine objects back into the description language."""
from __future__ import annotations

from functools import singledispatch

from ..rings.amalgam import Amalgamation
from ..rings.core import FiniteRing, RingElement, RingHom
from ..rings.ideals import Ideal, ideal_text
from ..rings.multiplicative import MultSet, mult_closure


def multset_generators(multset: MultSet) -> tuple[int, ...]:
    """Least single generator when there is one, else greedy ascending."""
    ring, one = multset.ring, multset.contains_one
    for g in multset:
        if mult_closure(ring, [g], include_one=one).members == multset.members:
            return (g,)
    gens: list[int] = []
    current = frozenset({ring.one}) if one else frozenset()
    for g in multset:
        if g in current:
            continue
        gens.append(g)
        current = mult_closure(ring, gens, include_one=one).members
        if current == multset.members:
            break
    return tuple(gens)


@singledispatch
def render(obj: object) -> str:
    raise TypeError(f"cannot render {type(obj).__name__}")


@render.register
def _(obj: FiniteRing) -> str:
    return obj.descriptor


@render.register
def _(obj: Amalgamation) -> str:
    return obj.ring.descriptor


@render.register
def _(obj: Ideal) -> str:
    return ideal_text(obj)


@render.register
def _(obj: MultSet) -> str:
    labels = obj.ring.labels
    text = f"mult({','.join(labels[g] for g in multset_generators(obj))})"
    return text if obj.contains_one else text + "+noone"


@render.register
def _(obj: RingElement) -> str:
    return obj.ring.labels[obj.index]


@render.register
def _(obj: RingHom) -> str:
    return obj.descriptor
