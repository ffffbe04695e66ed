"""Graph input files: the dart-level JSON form of an enhanced graph and its boundary."""
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, model_validator

from ..errors import InvalidInput
from .graph import EnhancedGraph


# -------- Graph input file --------
class GraphFile(BaseModel):
    """Dart-level description of an enhanced graph plus an optional boundary."""

    darts: int = Field(..., gt=0)
    pairing: List[int]
    vertex: List[int]
    next: List[int]
    source_dart: List[int]
    tree: List[int]
    basepoint: int = 0
    edge_names: Optional[List[str]] = None
    boundary: Dict[str, str] = Field(default_factory=dict)

    @model_validator(mode="after")
    def lengths_match(self):
        for name in ("pairing", "vertex", "next"):
            if len(getattr(self, name)) != self.darts:
                raise ValueError(f'"{name}" must have {self.darts} entries')
        return self

    def to_graph(self) -> EnhancedGraph:
        return EnhancedGraph(
            pairing=tuple(self.pairing),
            vertex_of=tuple(self.vertex),
            next_dart=tuple(self.next),
            source_dart=tuple(self.source_dart),
            tree_edges=frozenset(self.tree),
            basepoint=self.basepoint,
            edge_names=tuple(self.edge_names) if self.edge_names is not None else None,
        )

    @classmethod
    def from_graph(cls, graph: EnhancedGraph, boundary: Optional[Dict[int, str]] = None) -> "GraphFile":
        return cls(
            darts=graph.num_darts,
            pairing=list(graph.pairing),
            vertex=list(graph.vertex_of),
            next=list(graph.next_dart),
            source_dart=list(graph.source_dart),
            tree=sorted(graph.tree_edges),
            basepoint=graph.basepoint,
            edge_names=list(graph.edge_names) if graph.edge_names is not None else None,
            boundary={str(e): label for e, label in sorted((boundary or {}).items())},
        )


def graph_from_document(doc: dict) -> Tuple[EnhancedGraph, Dict[int, str]]:
    """Validate a parsed graph file; returns the graph and its boundary labels by leaf edge."""
    try:
        parsed = GraphFile(**doc)
    except (ValidationError, TypeError) as e:
        raise InvalidInput(f"Invalid graph file: {e}") from e
    try:
        boundary = {int(e): label for e, label in parsed.boundary.items()}
    except ValueError as e:
        raise InvalidInput(f"Boundary keys must be edge ids: {e}") from e
    return parsed.to_graph(), boundary


def graph_to_document(graph: EnhancedGraph, boundary: Optional[Dict[int, str]] = None) -> dict:
    return GraphFile.from_graph(graph, boundary).model_dump(exclude_none=True)
