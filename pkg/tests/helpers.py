"""Shared strategies and small utilities for the test suite."""

import hypothesis.strategies as st

from giideals.crossval import random_model


@st.composite
def small_models(draw, kinds=("kgraph", "dynsys"), max_rank=3, max_vertices=5):
    kind = draw(st.sampled_from(kinds))
    rank = draw(st.integers(1, max_rank))
    vertices = draw(st.integers(1, max_vertices))
    seed = draw(st.integers(0, 1 << 20))
    return random_model(kind, rank, vertices, seed)


@st.composite
def model_and_subsets(draw, count=1, **kwargs):
    model = draw(small_models(**kwargs))
    subsets = tuple(draw(st.integers(0, model.full)) for _ in range(count))
    return (model,) + subsets


def names(model, subset):
    return set(model.names_of_set(subset))
