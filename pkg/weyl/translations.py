"""Translation operators as words in the generators, and their parameter shifts."""

import logging
import time
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from algebra import RatFn, UsageError, substitute
from reporting import CheckRecord, recorded, verdict
from systems import build_system

from .birational import BirationalMap, word
from .generators import generator

logger = logging.getLogger(__name__)

# Words are read left to right; a name refers to an earlier translation or a generator.
WORDS: Dict[str, Dict[str, Tuple[str, ...]]] = {
    "D6": {
        "T1": ("pi1", "s5", "s4", "s3", "s2", "s1", "s0", "s2", "s3", "s4", "s5"),
        "T2": ("s4", "s6", "T1", "s6", "s4"),
        "T3": ("s6", "T1", "s6"),
        "T4": ("pi2", "T1", "pi2"),
        "T5": ("pi2", "T2", "pi2"),
        "T6": ("pi2", "T3", "pi2"),
    },
    "B5": {
        "T1": ("pi", "s4", "s3", "s2", "s1", "s0", "s1", "s2", "s3", "s4"),
        "T2": ("pi", "s5", "s4", "s3", "s2", "s1", "s0", "s1", "s2", "s3"),
        "T3": ("s3", "s5", "T1", "s5", "s3"),
        "T4": ("s2", "T3", "s2"),
        "T5": ("s1", "T4", "s1"),
    },
    "D52": {
        "T1": ("s4", "s3", "s2", "s1", "s0", "s1", "s2", "s3"),
        "T2": ("s3", "T1", "s3"),
        "T3": ("s2", "T2", "s2"),
        "T4": ("s1", "T3", "s1"),
    },
}

# Words whose printed form differs from the one used above.
PRINTED_WORDS: Dict[Tuple[str, str], Tuple[Tuple[str, ...], str]] = {
    ("D6", "T1"): (
        ("pi1", "s5", "s4", "s3", "s2", "s1", "s0", "s1", "s2", "s3", "s4", "s5"),
        "s1 s0 s1 = s0 since nodes 0 and 1 are not joined, so the printed word is pi1 times one "
        "reflection and only its square translates; s1 s0 gives the printed shift",
    ),
}

SHIFTS: Dict[str, Dict[str, Tuple[int, ...]]] = {
    "D6": {
        "T1": (0, 0, 0, 0, 0, -1, 1),
        "T2": (0, 0, 0, 1, -1, 0, 0),
        "T3": (0, 0, 0, 0, 1, -1, -1),
        "T4": (1, -1, 0, 0, 0, 0, 0),
        "T5": (0, 0, -1, 1, 0, 0, 0),
        "T6": (-1, -1, 1, 0, 0, 0, 0),
    },
    "B5": {
        "T1": (0, 0, 0, 0, -1, 1),
        "T2": (0, 0, 0, -1, 1, 1),
        "T3": (0, 0, 1, -1, 0, 0),
        "T4": (0, 1, -1, 0, 0, 0),
        "T5": (1, -1, 0, 0, 0, 0),
    },
    "D52": {
        "T1": (0, 0, 0, -2, 2),
        "T2": (0, 0, -2, 2, 0),
        "T3": (0, -2, 2, 0, 0),
        "T4": (-2, 2, 0, 0, 0),
    },
}


def translation_names(sys_id: str) -> Tuple[str, ...]:
    if sys_id not in WORDS:
        raise UsageError(f"No translation operators for system '{sys_id}'")
    return tuple(WORDS[sys_id])


def expand(sys_id: str, name: str) -> Tuple[str, ...]:
    """The word of a translation spelled out in generators only."""
    if name not in translation_names(sys_id):
        raise UsageError(f"Unknown translation '{name}' for {sys_id}")
    letters: List[str] = []
    for letter in WORDS[sys_id][name]:
        letters.extend(expand(sys_id, letter) if letter in WORDS[sys_id] else (letter,))
    return tuple(letters)


def translation(sys_id: str, name: str) -> BirationalMap:
    """The full birational map of a translation operator."""
    maps = [generator(sys_id, letter) for letter in expand(sys_id, name)]
    logger.info(f"{sys_id} {name}: composing a word of length {len(maps)}")
    return word(sys_id, maps, name=name)


def parameter_action(sys_id: str, letters: Sequence[str]) -> Tuple[RatFn, ...]:
    """Images of the parameters under a word, composing only the parameter maps."""
    system = build_system(sys_id)
    images = tuple(RatFn.var(a) for a in system.params)
    for letter in letters:
        bindings = dict(zip(system.params, images))
        images = tuple(system.reduce(substitute(f, bindings))
                       for f in generator(sys_id, letter).param_images)
    return images


def parameter_shift(sys_id: str, name: str) -> Tuple[RatFn, ...]:
    system = build_system(sys_id)
    images = parameter_action(sys_id, expand(sys_id, name))
    return tuple(system.reduce(image - RatFn.var(a)) for a, image in zip(system.params, images))


def _matches(system, shift: Sequence[RatFn], printed: Sequence[int]) -> bool:
    return all(system.equal(s, RatFn.constant(v)) for s, v in zip(shift, printed))


def verify_translations(sys_id: str, phase: bool = False) -> List[CheckRecord]:
    """Printed shift of every translation; with ``phase`` the full maps are composed too."""
    system = build_system(sys_id)
    records: List[CheckRecord] = []
    shifts = {}
    for name in translation_names(sys_id):
        started = time.perf_counter()
        if phase:
            shift = translation(sys_id, name).param_shift()
        else:
            shift = parameter_shift(sys_id, name)
        shifts[name] = shift
        printed = SHIFTS[sys_id][name]
        records.append(verdict(f"{sys_id} {name} shift", _matches(system, shift, printed),
                               witness=", ".join(str(s) for s in shift), started=started,
                               expected=list(printed), composed=phase))

    started = time.perf_counter()
    constant = all(all(not s.variables() for s in shift) for shift in shifts.values())
    commuting = constant and all(
        all(system.equal(u, v) for u, v in zip(
            parameter_action(sys_id, expand(sys_id, a) + expand(sys_id, b)),
            parameter_action(sys_id, expand(sys_id, b) + expand(sys_id, a))))
        for a, b in combinations(shifts, 2))
    records.append(verdict(f"{sys_id} translations commute", commuting, started=started))
    return records


def verify_printed_words(sys_id: str) -> List[CheckRecord]:
    """Parameter action of each printed word that was corrected, reported as computed."""
    system = build_system(sys_id)
    records = []
    for (owner, name), (letters, note) in PRINTED_WORDS.items():
        if owner != sys_id:
            continue
        started = time.perf_counter()
        images = parameter_action(sys_id, letters)
        shift = [system.reduce(image - RatFn.var(a)) for a, image in zip(system.params, images)]
        records.append(recorded(f"{sys_id} {name} printed word", ", ".join(map(str, shift)),
                                started=started, note=note))
    return records
