from __future__ import annotations

from hypothesis import strategies as st

from iwalab.algebra.element import AlgebraElement


def elements(d: int = 2, max_terms: int = 4, max_exponent: int = 3):
    """Small integer Laurent polynomials over a rank d group."""
    keys = st.tuples(*[st.integers(-max_exponent, max_exponent)] * d)
    terms = st.lists(
        st.tuples(keys, st.integers(-9, 9)), min_size=0, max_size=max_terms
    )
    return terms.map(lambda items: AlgebraElement(d, tuple(items)))
