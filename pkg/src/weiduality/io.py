"""JSON loaders for every input the command line accepts.

All of them raise :class:`InputError` on malformed data so the caller
only has one failure type to map.
"""

from __future__ import annotations

import json
from pathlib import Path

from .algebra.lattice import SubspaceLattice
from .algebra.rings import RingSpec
from .demimatroid import DemiMatroid
from .demipolymatroid import DemiPolymatroid, QMatroid, SubspaceFamily, galois_closed_family
from .errors import InputError
from .galois import BridgeTuple, GaloisPair, MonotoneTable, adjoint_of
from .hamming import LinearCode
from .metric_codes import ChainRingCode, CodeFlagFamily
from .posets import Poset, SetFamily, mask_of


def read_json(path):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _field(obj, key, kind=None):
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if key not in obj:
        raise InputError(f"missing field {key!r}")
    value = obj[key]
    if kind is int and (not isinstance(value, int) or isinstance(value, bool)):
        raise InputError(f"field {key!r} must be an integer")
    if kind is list and not isinstance(value, list):
        raise InputError(f"field {key!r} must be an array")
    return value


def _ints(seq, what):
    if not isinstance(seq, list) or not all(isinstance(v, int) and not isinstance(v, bool) for v in seq):
        raise InputError(f"{what} must be an array of integers")
    return [int(v) for v in seq]


def matrix(obj, width, order, what="generator"):
    if not isinstance(obj, list):
        raise InputError(f"{what} must be an array of rows")
    rows = []
    for row in obj:
        row = _ints(row, f"{what} row")
        if width is not None and len(row) != width:
            raise InputError(f"{what} row has length {len(row)}, expected {width}")
        if any(not 0 <= v < order for v in row):
            raise InputError(f"{what} entries must lie in [0, {order - 1}]")
        rows.append(tuple(row))
    return rows


def load_ring(obj):
    if not isinstance(obj, dict):
        raise InputError("ring must be an object like {\"kind\": \"field\", \"p\": 2, \"e\": 1}")
    return RingSpec.from_json(obj)


def load_code(obj):
    """A field code becomes a LinearCode, a chain-ring code a ChainRingCode."""
    ring = load_ring(_field(obj, "ring"))
    m = _field(obj, "m", int)
    if m < 1:
        raise InputError("code length must be positive")
    rows = matrix(_field(obj, "generator", list), m, ring.order)
    if ring.is_field:
        return LinearCode.from_rows(ring, rows, m)
    return ChainRingCode.from_rows(ring, rows, m)


def load_field_code(obj):
    code = load_code(obj)
    if not isinstance(code, LinearCode):
        raise InputError("this command needs a code over a finite field")
    return code


def load_chain_code(obj):
    code = load_code(obj)
    if not isinstance(code, ChainRingCode):
        raise InputError("this command needs a code over Z/p^s")
    return code


def load_poset(obj):
    """{"n", "cover_pairs"} or a named shape {"shape": "antichain"|"chain"|"v", "n"}."""
    n = _field(obj, "n", int)
    if n < 0:
        raise InputError("poset size must be nonnegative")
    if "shape" in obj:
        return Poset.named(obj["shape"], n)
    pairs = _field(obj, "cover_pairs", list)
    return Poset.from_cover_pairs(n, [tuple(_ints(p, "cover pair")) for p in pairs])


def load_pair(obj):
    """{"phi", "psi"}; either table alone is completed by its adjoint."""
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if "phi" in obj and "psi" in obj:
        return GaloisPair.from_tables(_ints(obj["phi"], "phi"), _ints(obj["psi"], "psi"))
    if "psi" in obj:
        psi = _ints(obj["psi"], "psi")
        k = obj.get("k", psi[-1] if psi else 0)
        return GaloisPair(adjoint_of(MonotoneTable(tuple(psi), k), "right"), MonotoneTable(tuple(psi), k))
    if "phi" in obj:
        phi = _ints(obj["phi"], "phi")
        m = _field(obj, "m", int)
        return GaloisPair(MonotoneTable(tuple(phi), m), adjoint_of(MonotoneTable(tuple(phi), m), "left"))
    raise InputError("a pair needs phi, psi or both")


def load_demimatroid(obj):
    return DemiMatroid(_field(obj, "m", int), _field(obj, "w", int), _ints(_field(obj, "f", list), "f"))


def load_set_family(obj):
    m = _field(obj, "m", int)
    members = [mask_of(_ints(b, "member")) for b in _field(obj, "members", list)]
    return SetFamily(m, frozenset(members))


def _lattice(obj, cap):
    ring = load_ring(_field(obj, "ring"))
    if not ring.is_field:
        raise InputError("subspace lattices need a field")
    return SubspaceLattice(ring, _field(obj, "n", int), cap)


def _lattice_table(obj, key, lattice):
    table = _field(obj, key)
    if isinstance(table, list):
        values = _ints(table, key)
    elif isinstance(table, dict):
        try:
            values = [table[str(i)] for i in range(len(lattice))]
        except KeyError as exc:
            raise InputError(f"{key} has no value for subspace id {exc.args[0]}") from exc
        values = _ints(values, key)
    else:
        raise InputError(f"{key} must map subspace ids to integers")
    if len(values) != len(lattice):
        raise InputError(f"{key} has {len(values)} values, the lattice has {len(lattice)} subspaces")
    return values


def load_polymatroid(obj, cap):
    lattice = _lattice(obj, cap)
    return DemiPolymatroid(lattice, _field(obj, "w", int), tuple(_lattice_table(obj, "f", lattice)))


def load_qmatroid(obj, cap):
    lattice = _lattice(obj, cap)
    return QMatroid(lattice, tuple(_lattice_table(obj, "rho", lattice)))


def load_subspace_family(obj, lattice):
    """{"members": [ids]} or {"family": "full"|"galois"}."""
    if obj is None or obj.get("family") == "full":
        return SubspaceFamily.full(lattice)
    if obj.get("family") == "galois":
        return galois_closed_family(lattice)
    ids = _ints(_field(obj, "members", list), "members")
    if any(not 0 <= i < len(lattice) for i in ids):
        raise InputError("subspace id out of range")
    return SubspaceFamily(lattice, frozenset(ids))


def load_flags(obj):
    """A flag family, or a plain field code read as one flag with w_dim = 1."""
    if isinstance(obj, dict) and "generator" in obj and "flags" not in obj:
        code = load_field_code(obj)
        return CodeFlagFamily.single(code.gen)
    ring = load_ring(_field(obj, "ring"))
    if not ring.is_field:
        raise InputError("code flags need a field")
    w_dim, m = _field(obj, "w_dim", int), _field(obj, "m", int)
    if w_dim < 1 or m < 1:
        raise InputError("w_dim and m must be positive")
    flags = _field(obj, "flags", list)
    if not flags or not all(isinstance(f, list) and f for f in flags):
        raise InputError("flags must be a nonempty array of nonempty arrays of generator matrices")
    built = []
    for flag in flags:
        gens = []
        for gen in flag:
            if not isinstance(gen, list):
                raise InputError("each code in a flag is an array of codewords")
            words = []
            for word in gen:
                if word and isinstance(word[0], list):
                    words.append(matrix(word, m, ring.order, "matrix codeword"))
                else:
                    words.append(matrix([word], w_dim * m, ring.order, "codeword")[0])
            gens.append(words)
        built.append(gens)
    return CodeFlagFamily.from_generators(ring, w_dim, m, built)


def load_bridge(obj):
    """{"Y": [...], "g": [...], "f": [...], "X": [...], "sigma": [Y labels], "w", "m", "k"}."""
    ys = _field(obj, "Y", list)
    xs = _field(obj, "X", list)
    index = {y: i for i, y in enumerate(ys)}
    if len(index) != len(ys):
        raise InputError("Y labels must be distinct")
    sigma = []
    for s in _field(obj, "sigma", list):
        if s not in index:
            raise InputError(f"sigma maps to {s!r}, which is not in Y")
        sigma.append(index[s])
    return BridgeTuple(
        tuple(ys),
        tuple(_ints(_field(obj, "g", list), "g")),
        tuple(_ints(_field(obj, "f", list), "f")),
        tuple(xs),
        tuple(sigma),
        _field(obj, "w", int),
        _field(obj, "m", int),
        _field(obj, "k", int),
    )
