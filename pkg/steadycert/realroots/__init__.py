"""일변수 실근 계수, 분리, 정밀화"""

from steadycert.realroots.algebraic import AlgebraicPoint
from steadycert.realroots.sturm import (
    IsolatingInterval,
    count_roots,
    isolate_roots,
    refine,
    root_bound,
    sign_at_root,
    sign_variations,
    sturm_sequence,
)

__all__ = [
    "AlgebraicPoint",
    "IsolatingInterval",
    "count_roots",
    "isolate_roots",
    "refine",
    "root_bound",
    "sign_at_root",
    "sign_variations",
    "sturm_sequence",
]
