"""Regression fixtures: five worked examples shipped as data files.

Each fixture stores an explicit combinatorial object together with every
statistic the library computes for it.  `check_figures` recomputes all of
them and reports any drift; the CLI `figures` subcommand exits nonzero on
a mismatch.
"""

from __future__ import annotations

import json
from importlib import resources

from .bases import brick_count, brick_tiling_weight, brick_weight, inverse_kostka, special_rim_hook_tableaux
from .macdonald import filling_descents, filling_inv, filling_maj
from .partitions import Composition, Partition
from .shuffle import LabeledDyckPath, is_shuffle

FIXTURE_NAMES = (
    "brick_tiling.json",
    "special_rim_hooks.json",
    "labeled_dyck_path.json",
    "lifted_dyck_path.json",
    "filling_statistics.json",
)


def load_fixture(name: str) -> dict:
    ref = resources.files("symstab").joinpath("fixtures").joinpath(name)
    return json.loads(ref.read_text())


def _check_brick_tiling(data: dict) -> list[str]:
    problems = []
    shape = Partition(data["shape"])
    content = Partition(data["content"])
    rows = data["tiling_rows"]
    if [sum(r) for r in rows] != list(shape):
        problems.append("tiling rows do not fill the shape")
    if sorted(b for row in rows for b in row) != sorted(content):
        problems.append("tiling bricks do not match the content")
    if brick_tiling_weight(rows) != data["tiling_weight"]:
        problems.append(f"tiling weight {brick_tiling_weight(rows)} != {data['tiling_weight']}")
    if brick_count(content, shape) != data["tiling_count_total"]:
        problems.append("total tiling count drifted")
    if brick_weight(content, shape) != data["weight_total"]:
        problems.append("total weight drifted")
    return problems


def _check_rim_hooks(data: dict) -> list[str]:
    problems = []
    shape = Partition(data["shape"])
    content = Partition(data["content"])
    hooks = frozenset(frozenset((r, c) for r, c in hook) for hook in data["hooks"])
    found = {decomp: sign for decomp, sign in special_rim_hook_tableaux(shape, content)}
    if hooks not in found:
        problems.append("stored decomposition not produced by the enumeration")
    elif found[hooks] != data["sign"]:
        problems.append(f"sign {found[hooks]} != {data['sign']}")
    core_mu = content
    signed = sum(found.values())
    if signed != data["signed_count"]:
        problems.append(f"signed count {signed} != {data['signed_count']}")
    if inverse_kostka(core_mu, shape) != data["signed_count"]:
        problems.append("matrix backend disagrees with stored signed count")
    return problems


def _check_labeled_path(data: dict) -> list[str]:
    problems = []
    path = LabeledDyckPath(data["steps"], tuple(data["labels"]))
    if list(path.reading_word()) != data["reading_word"]:
        problems.append(f"reading word {path.reading_word()} != {data['reading_word']}")
    if path.area() != data["area"]:
        problems.append(f"area {path.area()} != {data['area']}")
    if path.dinv() != data["dinv"]:
        problems.append(f"dinv {path.dinv()} != {data['dinv']}")
    if [list(p) for p in path.dinv_pairs()] != data["dinv_pairs"]:
        problems.append("dinv pair list drifted")
    alpha = Composition(data["shuffle_block_sizes"])
    if is_shuffle(path.reading_word(), alpha) != data["is_shuffle"]:
        problems.append("shuffle verdict drifted")
    return problems


def _check_lifted_path(data: dict) -> list[str]:
    problems = []
    path = LabeledDyckPath(data["steps"], tuple(data["labels"]))
    base = load_fixture(data["lift_of"])
    lifted = LabeledDyckPath(base["steps"], tuple(base["labels"])).lift()
    if lifted.steps != path.steps or lifted.labels != path.labels:
        problems.append("stored path is not the lift of its base fixture")
    if list(path.reading_word()) != data["reading_word"]:
        problems.append("reading word drifted")
    if path.area() != data["area"] or path.dinv() != data["dinv"]:
        problems.append("lift changed area or dinv")
    return problems


def _check_filling(data: dict) -> list[str]:
    problems = []
    shape = Partition(data["shape"])
    rows = tuple(tuple(r) for r in data["rows"])
    if filling_maj(shape, rows) != data["maj"]:
        problems.append(f"maj {filling_maj(shape, rows)} != {data['maj']}")
    if filling_inv(shape, rows) != data["inv"]:
        problems.append(f"inv {filling_inv(shape, rows)} != {data['inv']}")
    cells = [[c.row, c.col] for c in filling_descents(shape, rows)]
    if cells != data["descent_cells"]:
        problems.append("descent cells drifted")
    return problems


_CHECKS = {
    "brick_tiling.json": _check_brick_tiling,
    "special_rim_hooks.json": _check_rim_hooks,
    "labeled_dyck_path.json": _check_labeled_path,
    "lifted_dyck_path.json": _check_lifted_path,
    "filling_statistics.json": _check_filling,
}


def check_figures() -> dict[str, list[str]]:
    """Recompute every fixture; the result maps fixture name to a list of
    mismatch descriptions (empty lists everywhere means all good)."""
    return {name: _CHECKS[name](load_fixture(name)) for name in FIXTURE_NAMES}
