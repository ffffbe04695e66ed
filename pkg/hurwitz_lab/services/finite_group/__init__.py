"""Finite groups, conjugacy classes and symmetric groups."""
from .classes import ClassTable, ConjugacyClass, conjugacy_classes, symmetric_group
from .group import FiniteGroup, enumerate_group, generating_set, load_cayley_table
from .models import GroupFile, group_from_document
from .permutation import Partition, Permutation

__all__ = [
    "ClassTable",
    "ConjugacyClass",
    "FiniteGroup",
    "GroupFile",
    "Partition",
    "Permutation",
    "conjugacy_classes",
    "enumerate_group",
    "generating_set",
    "group_from_document",
    "load_cayley_table",
    "symmetric_group",
]
