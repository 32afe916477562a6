"""Confluence checks grouped the way the command line asks for them."""

from typing import Callable, Dict, List

from algebra import UsageError
from reporting import CheckRecord

from .degeneration import degenerate
from .transforms import (equivalence_B5_to_D51, symplectic_tr, verify_a1_symmetry,
                         verify_tk_relations, verify_uv_correspondence, TRANSFORMS)


def _tr() -> List[CheckRecord]:
    records = []
    for id in TRANSFORMS:
        records.extend(symplectic_tr(id))
    records.extend(verify_tk_relations())
    return records


CONFLUENCE_SUITES: Dict[str, Callable[[], List[CheckRecord]]] = {
    "d6-b5": lambda: degenerate("D6_to_B5"),
    "d6-d52": lambda: degenerate("D6_to_D52"),
    "b5-d51": equivalence_B5_to_D51,
    "tr": _tr,
    "uv": verify_uv_correspondence,
    "a1": verify_a1_symmetry,
}


def verify_confluence(which: str) -> List[CheckRecord]:
    if which not in CONFLUENCE_SUITES:
        raise UsageError(f"Unknown confluence check '{which}'; "
                         f"expected one of {', '.join(CONFLUENCE_SUITES)}")
    return CONFLUENCE_SUITES[which]()
