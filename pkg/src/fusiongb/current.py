"""Truncated current algebras U(g ⊗ Q(a)[t]/(p)) as G-algebras."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from .coeffs import ONE, ZERO, ParamRat, as_paramrat
from .galgebra import GAlgebra, MonomialOrder

__all__ = [
    "LieStructure",
    "LieReport",
    "TruncationPoly",
    "sl2_structure",
    "abelian_structure",
    "validate_lie",
    "truncated_current",
    "sl2_truncated",
    "algebra_from_config",
]

# bracket table: (i, k) -> {r: c^{ik}_r}
Brackets = Dict[Tuple[int, int], Dict[int, ParamRat]]


@dataclass
class LieStructure:
    """Structure constants ``[x_i, x_k] = sum_r c[(i, k)][r] x_r``.

    Only pairs ``i < k`` need to be given; the rest follows by antisymmetry
    unless supplied explicitly (which is then checked by :func:`validate_lie`).
    """

    names: Tuple[str, ...]
    c: Brackets = field(default_factory=dict)

    def __post_init__(self):
        self.names = tuple(self.names)
        full: Brackets = {}
        for (i, k), row in self.c.items():
            row = {r: as_paramrat(v) for r, v in row.items() if as_paramrat(v)}
            full[(i, k)] = row
        for (i, k), row in list(full.items()):
            if (k, i) not in full:
                full[(k, i)] = {r: -v for r, v in row.items()}
        self.c = full

    @property
    def dim(self) -> int:
        return len(self.names)

    def bracket(self, i: int, k: int) -> Dict[int, ParamRat]:
        return self.c.get((i, k), {})

    def bracket_vec(self, u: Mapping[int, ParamRat], v: Mapping[int, ParamRat]) -> Dict[int, ParamRat]:
        out: Dict[int, ParamRat] = {}
        for i, cu in u.items():
            for k, cv in v.items():
                for r, c in self.bracket(i, k).items():
                    out[r] = out.get(r, ZERO) + cu * cv * c
        return {r: c for r, c in out.items() if c}


@dataclass(frozen=True)
class LieReport:
    ok: bool
    antisymmetry_failures: Tuple[Tuple[int, int], ...] = ()
    jacobi_failures: Tuple[Tuple[int, int, int], ...] = ()


def sl2_structure() -> LieStructure:
    """Basis (e, h, f) with [h,e] = 2e, [h,f] = -2f, [e,f] = h."""
    e, h, f = 0, 1, 2
    return LieStructure(("e", "h", "f"), {
        (e, h): {e: ParamRat(-2)},
        (e, f): {h: ONE},
        (h, f): {f: ParamRat(-2)},
    })


def abelian_structure(names: Sequence[str]) -> LieStructure:
    return LieStructure(tuple(names), {})


def validate_lie(L: LieStructure) -> LieReport:
    anti = []
    for i in range(L.dim):
        for k in range(i, L.dim):
            a, b = L.bracket(i, k), L.bracket(k, i)
            neg_b = {r: -v for r, v in b.items()}
            if a != neg_b:
                anti.append((i, k))
    jac = []
    for i, j, k in combinations(range(L.dim), 3):
        x, y, z = {i: ONE}, {j: ONE}, {k: ONE}
        total: Dict[int, ParamRat] = {}
        for u, v, w in ((x, y, z), (y, z, x), (z, x, y)):
            for r, c in L.bracket_vec(u, L.bracket_vec(v, w)).items():
                total[r] = total.get(r, ZERO) + c
        if any(total.values()):
            jac.append((i, j, k))
    return LieReport(not anti and not jac, tuple(anti), tuple(jac))


@dataclass(frozen=True)
class TruncationPoly:
    """``p = t^m - sum_i coeffs[i] t^i``."""

    coeffs: Tuple[ParamRat, ...]

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(as_paramrat(c) for c in coeffs))
        if len(self.coeffs) < 1:
            raise ValueError("truncation degree m must be at least 1")

    @property
    def m(self) -> int:
        return len(self.coeffs)

    def reduce_power(self, k: int) -> List[ParamRat]:
        """Coefficients (length m) of t^k mod p."""
        m = self.m
        vec = [ZERO] * m
        if k < m:
            vec[k] = ONE
            return vec
        vec = [ZERO] * (k + 1)
        vec[k] = ONE
        for top in range(k, m - 1, -1):
            c = vec[top]
            if not c:
                continue
            vec[top] = ZERO
            for i, p_i in enumerate(self.coeffs):
                vec[top - m + i] = vec[top - m + i] + c * p_i
        return vec[:m]

    def specialize(self, a0) -> "TruncationPoly":
        return TruncationPoly([ParamRat(c.specialize(a0)) for c in self.coeffs])


def truncated_current(L: LieStructure, p: TruncationPoly,
                      order: Optional[MonomialOrder] = None) -> GAlgebra:
    """Enveloping algebra of ``L ⊗ Q(a)[t]/(p)`` on generators ``x_{i,j} = x_i ⊗ t^j``.

    Generators are named ``<name><j>`` and sorted by Lie index, then t-degree.
    """
    if not validate_lie(L).ok:
        raise ValueError("structure constants violate antisymmetry or Jacobi")
    m = p.m
    gens = [(i, j) for i in range(L.dim) for j in range(m)]
    idx = {g: n for n, g in enumerate(gens)}
    names = [f"{L.names[i]}{j}" for i, j in gens]
    n = len(gens)
    if order is not None and order.width != n:
        raise ValueError(f"order width {order.width} != generator count {n}")
    powers = {s: p.reduce_power(s) for s in range(2 * m - 1)}
    relations = {}
    for a_, b_ in combinations(range(n), 2):
        # x_b x_a = x_a x_b + [x_b, x_a]
        (ib, jb), (ia, ja) = gens[b_], gens[a_]
        br = L.bracket(ib, ia)
        if not br:
            continue
        terms = {}
        tpow = powers[ja + jb]
        for r, c in br.items():
            for s, ts in enumerate(tpow):
                if not ts:
                    continue
                e = [0] * n
                e[idx[(r, s)]] = 1
                e = tuple(e)
                v = terms.get(e, ZERO) + c * ts
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        if terms:
            relations[(a_, b_)] = terms
    return GAlgebra(names, relations, order)


_SL2_CACHE: Dict[object, GAlgebra] = {}


def sl2_truncated(a0=None) -> GAlgebra:
    """sl2 ⊗ Q(a)[t]/(t^2 - a t), or its specialisation at ``a = a0``.

    Generators (e0, e1, h0, h1, f0, f1), degree order with ties decided by
    f1 > f0 > h1 > h0 > e1 > e0.  Instances are cached so elements built
    by different callers share one algebra (and one product cache).
    """
    key = "param" if a0 is None else ParamRat(a0)
    alg = _SL2_CACHE.get(key)
    if alg is None:
        coeff = ParamRat("a") if a0 is None else ParamRat(a0)
        p = TruncationPoly([ZERO, coeff])
        alg = truncated_current(sl2_structure(), p, MonomialOrder.deglex(6))
        _SL2_CACHE[key] = alg
    return alg


def algebra_from_config(config: Union[str, Mapping]) -> GAlgebra:
    """Build an algebra from a JSON string or dict.

    ``{"lie": "sl2", "truncation": ["0", "a"]}`` gives t^2 - a t.  An explicit
    structure is ``{"lie": {"names": [...], "brackets": {"h,e": {"e": "2"}}}}``.
    ``"priority"`` optionally lists generator names, most significant first.
    """
    if isinstance(config, str):
        config = json.loads(config)
    lie = config.get("lie", "sl2")
    if lie == "sl2":
        L = sl2_structure()
    elif isinstance(lie, Mapping):
        names = list(lie["names"])
        pos = {nm: i for i, nm in enumerate(names)}
        c: Brackets = {}
        for pair, row in lie.get("brackets", {}).items():
            x, y = (s.strip() for s in pair.split(","))
            c[(pos[x], pos[y])] = {pos[r]: as_paramrat(v) for r, v in row.items()}
        L = LieStructure(tuple(names), c)
    else:
        raise ValueError(f"unknown Lie structure {lie!r}")
    p = TruncationPoly(config.get("truncation", ["0"]))
    order = None
    if "priority" in config:
        n = L.dim * p.m
        names = [f"{L.names[i]}{j}" for i in range(L.dim) for j in range(p.m)]
        order = MonomialOrder([1] * n, [names.index(s) for s in config["priority"]])
    return truncated_current(L, p, order)
