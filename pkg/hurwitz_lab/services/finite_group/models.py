"""Group input files: permutation generators or a Cayley table, validated with pydantic."""
from typing import List, Optional

from pydantic import BaseModel, ValidationError, model_validator

from ...app.config import resolve_cap, settings
from ..errors import InvalidInput, OrderCapExceeded
from .classes import ClassTable, conjugacy_classes
from .group import FiniteGroup, enumerate_group, load_cayley_table
from .permutation import Permutation


# -------- Group input file --------
class GroupFile(BaseModel):
    """Either permutation generators (image arrays) or a full Cayley table."""

    generators: Optional[List[List[int]]] = None
    cayley: Optional[List[List[int]]] = None

    @model_validator(mode="after")
    def exactly_one_source(self):
        if (self.generators is None) == (self.cayley is None):
            raise ValueError('give exactly one of "generators" or "cayley"')
        return self

    def build(self, order_cap: Optional[int] = None) -> FiniteGroup:
        if self.generators is not None:
            return enumerate_group([Permutation(tuple(g)) for g in self.generators], order_cap=order_cap)
        cap = resolve_cap(order_cap, settings.ORDER_CAP)
        if len(self.cayley) > cap:
            raise OrderCapExceeded(cap, f"Cayley table of order {len(self.cayley)} exceeds the configured cap of {cap}")
        return load_cayley_table(self.cayley)


def group_from_document(doc: dict, order_cap: Optional[int] = None) -> "tuple[FiniteGroup, ClassTable]":
    """Validate a parsed group file and build the group with its classes."""
    try:
        parsed = GroupFile(**doc)
    except (ValidationError, TypeError) as e:
        raise InvalidInput(f"Invalid group file: {e}") from e
    group = parsed.build(order_cap=order_cap)
    return group, conjugacy_classes(group)
