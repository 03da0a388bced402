"""Ordered filtrations of a window into layers of vertices."""

from __future__ import annotations

from .errors import PreconditionError


class Filtration:
    """Disjoint ordered layers; B_j is the union of the first j layers.

    Layers may carry (i, j) labels giving the figure names E^i_j of the
    vertices.  A filtration need not exhaust the window (the single
    column used by the tilting family does not); exhaustiveness is a
    checkable property, not an assumption.
    """

    def __init__(self, layers, labels=None, name="filtration",
                 exhaustive_hint=True):
        self.layers = [tuple(layer) for layer in layers]
        if any(not layer for layer in self.layers):
            raise PreconditionError("filtration layers must be nonempty")
        seen = set()
        for layer in self.layers:
            for v in layer:
                if v in seen:
                    raise PreconditionError(f"vertex {v!r} in two layers")
                seen.add(v)
        self.labels = dict(labels or {})
        self.name = name
        self.exhaustive_hint = exhaustive_hint
        self._label_to_vertex = {lab: v for v, lab in self.labels.items()}

    def __len__(self):
        return len(self.layers)

    def layer(self, j):
        """The j-th layer (1-based): B_j minus B_{j-1}."""
        return self.layers[j - 1]

    def cumulative(self, j):
        """B_j as a set; B_0 is empty."""
        out = set()
        for layer in self.layers[:j]:
            out.update(layer)
        return out

    def layer_of(self, v):
        for j, layer in enumerate(self.layers, start=1):
            if v in layer:
                return j
        return None

    def vertex_by_label(self, i, j):
        v = self._label_to_vertex.get((i, j))
        if v is None:
            raise PreconditionError(f"no vertex labeled E^{i}_{j}")
        return v

    def label_str(self, v):
        lab = self.labels.get(v)
        return f"E{lab[0]}_{lab[1]}" if lab else str(v)

    def is_exhaustive(self, vertices):
        return self.cumulative(len(self.layers)) == set(vertices)

    def truncate(self, j):
        labels = {v: lab for v, lab in self.labels.items()
                  if any(v in layer for layer in self.layers[:j])}
        return Filtration(self.layers[:j], labels=labels,
                          name=f"{self.name} (first {j})",
                          exhaustive_hint=self.exhaustive_hint)

    def describe(self):
        return {
            "name": self.name,
            "layer_sizes": [len(layer) for layer in self.layers],
        }
