#!/usr/bin/env python3
"""
Built-in algebra families

Every constructor returns an AlgebraSpec: a Presentation plus optional
anti-involution, Hopf data and named central elements. Optional data is
kept as expression text over the algebra's own alphabet so it survives
export to the presentation file format. Hopf texts live in the tensor
square, whose second copy carries primed names (e -> e').
"""

import logging
import re
from dataclasses import dataclass, field as dc_field
from math import gcd
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple

from . import series
from .errors import (MissingDataError, ModelMismatchError, SubgroupError,
                     UnsupportedParameterError)
from .rewriting import (CARTAN, LOWERING, RAISING, GeneratorSymbol, NormalForm,
                        Presentation, PresentationBuilder)
from .scalars import QFUNCTIONS, RATIONALS
from .weights import ADDITIVE, MULTIPLICATIVE, RootVector, WeightModel

logger = logging.getLogger(__name__)

MAX_QUIVER_PATHS = 40
MAX_TORSION_ORDER = 12


@dataclass
class HopfData:
    """Delta, counit, antipode and the involution T, per generator"""
    delta: Dict[str, str]
    counit: Dict[str, str]
    antipode: Dict[str, str]
    involution: Dict[str, str]


@dataclass
class AlgebraSpec:
    name: str
    family: str
    presentation: Presentation
    params: Dict[str, object] = dc_field(default_factory=dict)
    anti_involution: Optional[Dict[str, str]] = None
    hopf: Optional[HopfData] = None
    central: Dict[str, str] = dc_field(default_factory=dict)
    notes: List[str] = dc_field(default_factory=list)
    sp_normalization: Optional[int] = None
    _powers: Dict[int, 'AlgebraSpec'] = dc_field(default_factory=dict, repr=False, compare=False)

    @property
    def model(self) -> WeightModel:
        return self.presentation.model

    @property
    def field(self):
        return self.presentation.field

    def element(self, text: str) -> NormalForm:
        return self.presentation.element(text)

    def anti_involution_map(self) -> Dict[int, NormalForm]:
        if self.anti_involution is None:
            raise MissingDataError(f"{self.name} has no anti-involution")
        return self.presentation.assignment(self.anti_involution)

    def central_elements(self) -> Dict[str, NormalForm]:
        return {name: self.element(text) for name, text in self.central.items()}

    def tensor_power(self, k: int) -> 'AlgebraSpec':
        """k-fold tensor power, copies primed 0..k-1 times (cached)"""
        if k not in self._powers:
            self._powers[k] = tensor_product([self] * k, name=f"{self.name}^{k}")
        return self._powers[k]

    def __repr__(self) -> str:
        return f"AlgebraSpec({self.name}, {self.presentation!r})"


# ----------------------------------------------------------------------
# parameter helpers

def _int_param(params: Mapping, key: str, default: int, low: int = None, high: int = None) -> int:
    value = params.get(key, default)
    try:
        value = int(value)
    except (TypeError, ValueError):
        raise UnsupportedParameterError(f"parameter {key} must be an integer, got {value!r}")
    if (low is not None and value < low) or (high is not None and value > high):
        raise UnsupportedParameterError(f"parameter {key}={value} outside {low}..{high}")
    return value


def _scalar_list(params: Mapping, key: str, default: Sequence, field) -> List:
    """A coefficient list given as a list or a comma separated string, trailing zeros dropped"""
    value = params.get(key, default)
    if isinstance(value, str):
        value = [v for v in value.split(',') if v.strip()]
    elif not isinstance(value, (list, tuple)):
        value = [value]
    return _trim([field.convert(v) for v in value])


def _trim(values: List) -> List:
    while values and not values[-1]:
        values.pop()
    return values


def _combo(builder: PresentationBuilder, terms: Sequence[Tuple[object, str]]) -> Dict:
    """Linear combination of single generators as a word sum"""
    result = {}
    for coeff, name in terms:
        word = (builder.index[name],)
        total = result.get(word, builder.field.zero) + builder.field.convert(coeff)
        if total:
            result[word] = total
        else:
            result.pop(word, None)
    return result


def _transfer(elem: NormalForm, builder: PresentationBuilder) -> Dict:
    """Move an element of a sub-presentation into a builder by symbol names"""
    names = elem.presentation.names
    return {tuple(builder.index[names[i]] for i in word): coeff for word, coeff in elem.terms.items()}


def _primitive_hopf(names: Sequence[str], involution: Dict[str, str]) -> HopfData:
    return HopfData(
        delta={x: f"{x} + {x}'" for x in names},
        counit={x: "0" for x in names},
        antipode={x: f"-{x}" for x in names},
        involution=dict(involution),
    )


# ----------------------------------------------------------------------
# enveloping algebras

def _sl2_symbols(builder: PresentationBuilder, scale: int = 1):
    """f, h, e with [e,f] = h in a model whose root value on h is 2/scale"""
    builder.symbol("f", LOWERING, RootVector((-scale,)))
    builder.symbol("h", CARTAN, coordinate="h")
    builder.symbol("e", RAISING, RootVector((scale,)))
    builder.bracket("e", "f", "h")
    builder.bracket("h", "e", "2*e")
    builder.bracket("h", "f", "-2*f")


def build_u_sl2(params: Mapping) -> AlgebraSpec:
    model = WeightModel("sl2", ADDITIVE, RATIONALS, ["h"], [[2]])
    builder = PresentationBuilder("u_sl2", RATIONALS, model)
    _sl2_symbols(builder)
    return AlgebraSpec(
        name="u_sl2", family="u_sl2", presentation=builder.build(),
        anti_involution={"e": "f", "f": "e", "h": "h"},
        hopf=_primitive_hopf(["f", "h", "e"], {"e": "-f", "f": "-e", "h": "-h"}),
        central={"Omega": "2*f*e + h + h^2/2"},
    )


def _gl_root(i: int, j: int, rank: int) -> RootVector:
    lo, hi = min(i, j), max(i, j)
    sign = 1 if i < j else -1
    return RootVector(tuple(sign if lo - 1 <= k < hi - 1 else 0 for k in range(rank)))


def _gl_generators(n: int) -> List[Tuple[int, int]]:
    lowering = [(j, i) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    cartan = [(i, i) for i in range(1, n + 1)]
    raising = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return lowering + cartan + raising


def _gl_brackets(builder: PresentationBuilder, n: int):
    """[E_ij, E_kl] = d_jk E_il - d_li E_kj"""
    generators = _gl_generators(n)
    for a in range(len(generators)):
        for b in range(a + 1, len(generators)):
            (i, j), (k, l) = generators[a], generators[b]
            terms = []
            if j == k:
                terms.append((1, f"E{i}{l}"))
            if l == i:
                terms.append((-1, f"E{k}{j}"))
            builder.bracket(f"E{i}{j}", f"E{k}{l}", _combo(builder, terms))


def _gl_class(i: int, j: int) -> str:
    return CARTAN if i == j else (RAISING if i < j else LOWERING)


def _gl_part(n: int, model: WeightModel, root_of: Callable, offset_of: Callable) -> Presentation:
    builder = PresentationBuilder(f"u_gl_{n}", model.field, model)
    for i, j in _gl_generators(n):
        builder.symbol(f"E{i}{j}", _gl_class(i, j), root_of(i, j), offset_of(i, j),
                       coordinate=f"E{i}{i}" if i == j else None)
    _gl_brackets(builder, n)
    return builder.build()


def build_u_gl_n(params: Mapping) -> AlgebraSpec:
    n = _int_param(params, "n", 2, 1, 3)
    coordinates = [f"E{i}{i}" for i in range(1, n + 1)]
    roots = [[1 if c == k else (-1 if c == k + 1 else 0) for c in range(n)] for k in range(n - 1)]
    model = WeightModel(f"gl{n}", ADDITIVE, RATIONALS, coordinates, roots)
    presentation = _gl_part(n, model, lambda i, j: _gl_root(i, j, n - 1), lambda i, j: None)
    generators = _gl_generators(n)
    names = [f"E{i}{j}" for i, j in generators]
    casimir = " + ".join(f"E{i}{j}*E{j}{i}" for i in range(1, n + 1) for j in range(1, n + 1))
    return AlgebraSpec(
        name=f"u_gl_{n}", family="u_gl_n", presentation=presentation,
        params={"n": n, "identification": "gl"},
        anti_involution={f"E{i}{j}": f"E{j}{i}" for i, j in generators},
        hopf=_primitive_hopf(names, {f"E{i}{j}": f"-E{j}{i}" for i, j in generators}),
        central={"tau": " + ".join(coordinates), "C2": casimir},
    )


def build_takiff_sl2(params: Mapping) -> AlgebraSpec:
    """sl2 tensor k[t]/(t^2); et, ft, ht are the t-multiples"""
    model = WeightModel("sl2[t]/t^2", ADDITIVE, RATIONALS, ["h", "ht"], [[2, 0]])
    builder = PresentationBuilder("takiff_sl2", RATIONALS, model)
    alpha = RootVector((1,))
    builder.symbol("f", LOWERING, -alpha)
    builder.symbol("ft", LOWERING, -alpha)
    builder.symbol("h", CARTAN, coordinate="h")
    builder.symbol("ht", CARTAN, coordinate="ht")
    builder.symbol("e", RAISING, alpha)
    builder.symbol("et", RAISING, alpha)
    builder.bracket("e", "f", "h")
    builder.bracket("h", "e", "2*e")
    builder.bracket("h", "f", "-2*f")
    builder.bracket("e", "ft", "ht")
    builder.bracket("et", "f", "ht")
    builder.bracket("h", "et", "2*et")
    builder.bracket("ht", "e", "2*et")
    builder.bracket("h", "ft", "-2*ft")
    builder.bracket("ht", "f", "-2*ft")
    builder.commute_remaining()
    return AlgebraSpec(
        name="takiff_sl2", family="takiff_sl2", presentation=builder.build(),
        anti_involution={"e": "f", "f": "e", "et": "ft", "ft": "et", "h": "h", "ht": "ht"},
        central={
            "C1": "e*ft + f*et + h*ht/2 + et*f + ft*e + ht*h/2",
            "C2": "2*ft*et + ht^2/2",
        },
    )


def build_heisenberg_ext(params: Mapping) -> AlgebraSpec:
    """Heisenberg modes a_m, b_m with central c, extended by the derivation d"""
    modes = _int_param(params, "modes", 2, 1, 4)
    model = WeightModel("heisenberg", ADDITIVE, RATIONALS, ["c", "d"], [[0, 1]])
    builder = PresentationBuilder(f"heisenberg_ext_{modes}", RATIONALS, model)
    for m in range(modes, 0, -1):
        builder.symbol(f"b{m}", LOWERING, RootVector((-m,)))
    builder.symbol("c", CARTAN, coordinate="c")
    builder.symbol("d", CARTAN, coordinate="d")
    for m in range(1, modes + 1):
        builder.symbol(f"a{m}", RAISING, RootVector((m,)))
    for m in range(1, modes + 1):
        builder.bracket("d", f"a{m}", f"{m}*a{m}")
        builder.bracket("d", f"b{m}", f"-{m}*b{m}")
        builder.bracket(f"a{m}", f"b{m}", f"{m}*c")
    builder.commute_remaining()
    involution = {"c": "c", "d": "d"}
    for m in range(1, modes + 1):
        involution[f"a{m}"] = f"b{m}"
        involution[f"b{m}"] = f"a{m}"
    return AlgebraSpec(
        name=f"heisenberg_ext_{modes}", family="heisenberg_ext", presentation=builder.build(),
        params={"modes": modes}, anti_involution=involution, central={"c": "c"},
    )


# ----------------------------------------------------------------------
# quiver algebras

def _parse_quiver(text: str) -> Tuple[List[str], List[Tuple[str, str]]]:
    edges = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        if '-' not in item:
            raise UnsupportedParameterError(f"malformed quiver edge '{item}', expected s-t")
        s, t = (part.strip() for part in item.split('-', 1))
        if not s or not t:
            raise UnsupportedParameterError(f"malformed quiver edge '{item}'")
        if s == t:
            raise UnsupportedParameterError(f"quiver edge {item} is a loop")
        edges.append((s, t))
    if not edges:
        raise UnsupportedParameterError("quiver needs at least one edge")
    labels = sorted({v for e in edges for v in e}, key=lambda v: (not v.isdigit(), int(v) if v.isdigit() else 0, v))
    return labels, edges


def _topological_order(labels: List[str], edges: List[Tuple[str, str]]) -> Dict[str, int]:
    """Kahn's algorithm; ties broken by label order. Returns label -> 1-based position"""
    indegree = {v: 0 for v in labels}
    for _, t in edges:
        indegree[t] += 1
    order = []
    ready = [v for v in labels if indegree[v] == 0]
    while ready:
        v = ready.pop(0)
        order.append(v)
        for s, t in edges:
            if s == v:
                indegree[t] -= 1
                if indegree[t] == 0:
                    ready.append(t)
                    ready.sort(key=labels.index)
    if len(order) != len(labels):
        raise UnsupportedParameterError("quiver has an oriented cycle")
    return {v: k + 1 for k, v in enumerate(order)}


def _quiver_paths(edges: List[Tuple[int, int]]) -> List[Tuple[int, ...]]:
    """All paths of length >= 1 as edge tuples in traversal order"""
    paths = [(k,) for k in range(len(edges))]
    frontier = list(paths)
    while frontier:
        extended = []
        for path in frontier:
            end = edges[path[-1]][1]
            for k, (s, _) in enumerate(edges):
                if s == end:
                    extended.append(path + (k,))
        paths.extend(extended)
        frontier = extended
        if len(paths) > MAX_QUIVER_PATHS:
            raise UnsupportedParameterError(f"quiver has more than {MAX_QUIVER_PATHS} paths")
    return sorted(paths, key=lambda p: (len(p), p))


def build_quiver_rtla(params: Mapping) -> AlgebraSpec:
    """Enveloping algebra of kQ-bar / (a'a*, a*a') for an acyclic quiver"""
    text = str(params.get("quiver", "1-2"))
    labels, raw_edges = _parse_quiver(text)
    position = _topological_order(labels, raw_edges)
    edges = [(position[s], position[t]) for s, t in raw_edges]
    n = len(labels)
    model = WeightModel(f"quiver[{text}]", ADDITIVE, RATIONALS, [f"e{i}" for i in range(1, n + 1)],
                        [[1 if c == k + 1 else (-1 if c == k else 0) for c in range(n)] for k in range(n - 1)])
    paths = _quiver_paths(edges)

    # star edge k runs t(k) -> s(k); star paths are traversals of star edges
    def ends(side: str, path: Tuple[int, ...]) -> Tuple[int, int]:
        if side == 'x':
            return edges[path[0]][0], edges[path[-1]][1]
        return edges[path[0]][1], edges[path[-1]][0]

    def name(side: str, path: Tuple[int, ...]) -> str:
        return side + "_".join(str(k + 1) for k in path)

    def root(side: str, path: Tuple[int, ...]) -> RootVector:
        s, t = ends(side, path)
        lo, hi = min(s, t), max(s, t)
        sign = 1 if t > s else -1
        return RootVector(tuple(sign if lo <= k + 1 < hi else 0 for k in range(n - 1)))

    builder = PresentationBuilder(f"quiver_rtla[{text}]", RATIONALS, model)
    stars = [tuple(reversed(p)) for p in paths]
    for path in stars:
        builder.symbol(name('y', path), LOWERING, root('y', path))
    for i in range(1, n + 1):
        builder.symbol(f"e{i}", CARTAN, coordinate=f"e{i}")
    for path in paths:
        builder.symbol(name('x', path), RAISING, root('x', path))

    elements = [('y', p) for p in stars] + [('x', p) for p in paths]
    known = {name(side, p) for side, p in elements}

    def product(a, b) -> Optional[str]:
        """a*b in the path algebra (b traversed first), None when zero or mixed"""
        if a[0] != b[0]:
            return None
        if ends(*b)[1] != ends(*a)[0]:
            return None
        word = name(a[0], b[1] + a[1])
        return word if word in known else None

    for x in range(len(elements)):
        for y in range(x + 1, len(elements)):
            a, b = elements[x], elements[y]
            terms = []
            ab, ba = product(a, b), product(b, a)
            if ab:
                terms.append((1, ab))
            if ba:
                terms.append((-1, ba))
            builder.bracket(name(*a), name(*b), _combo(builder, terms))
    for i in range(1, n + 1):
        for side, path in elements:
            s, t = ends(side, path)
            coeff = (1 if i == t else 0) - (1 if i == s else 0)
            builder.bracket(f"e{i}", name(side, path), _combo(builder, [(coeff, name(side, path))] if coeff else []))
    builder.commute_remaining()

    involution = {f"e{i}": f"e{i}" for i in range(1, n + 1)}
    for path in paths:
        involution[name('x', path)] = name('y', tuple(reversed(path)))
        involution[name('y', tuple(reversed(path)))] = name('x', path)
    return AlgebraSpec(
        name=f"quiver_rtla[{text}]", family="quiver_rtla", presentation=builder.build(),
        params={"quiver": text, "relabel": {v: position[v] for v in labels}},
        anti_involution=involution,
        central={"sum_e": " + ".join(f"e{i}" for i in range(1, n + 1))},
        notes=[f"vertices relabelled topologically: "
               + ", ".join(f"{v}->{position[v]}" for v in labels)],
    )


# ----------------------------------------------------------------------
# quantum sl2 over a lattice

LATTICES = ("coroot", "coweight", "torsion")


def build_uq_sl2(params: Mapping) -> AlgebraSpec:
    lattice = str(params.get("lattice", "coroot"))
    if lattice not in LATTICES:
        raise UnsupportedParameterError(f"unknown lattice '{lattice}', expected one of {', '.join(LATTICES)}")
    field = QFUNCTIONS
    q = field.q
    m, nu = 1, 1
    if lattice == "torsion":
        m = _int_param(params, "m", 2)
        if m <= 0:
            raise UnsupportedParameterError(f"torsion order must be positive, got {m}")
        if m > MAX_TORSION_ORDER:
            raise UnsupportedParameterError(f"torsion order {m} above {MAX_TORSION_ORDER}")
        nu = _int_param(params, "nu", 1)
        if nu not in (1, -1):
            raise UnsupportedParameterError("nu(t) must be 1 or -1 over Q(q)")
        if nu ** m != 1:
            raise UnsupportedParameterError(f"nu(t) = {nu} is not an {m}-th root of unity")

    main = "L" if lattice == "coweight" else "K"
    root_value = q if lattice == "coweight" else q ** 2
    power = "^2" if lattice == "coweight" else ""
    with_t = lattice == "torsion" and m > 1
    coordinates = [main] + (["t"] if with_t else [])
    root = [root_value] + ([field.convert(nu)] if with_t else [])
    name = f"uq_sl2[{lattice}]" + (f"[m={m},nu={nu}]" if lattice == "torsion" else "")
    model = WeightModel(name, MULTIPLICATIVE, field, coordinates, [root],
                        torsion={"t": m} if with_t else None)

    inv = main + "inv"
    builder = PresentationBuilder(name, field, model)
    alpha = RootVector((1,))
    builder.symbol("f", LOWERING, -alpha)
    builder.symbol(main, CARTAN, grouplike=True, inverse=inv, coordinate=main, power=1)
    builder.symbol(inv, CARTAN, grouplike=True, inverse=main, coordinate=main, power=-1)
    if with_t:
        builder.symbol("t", CARTAN, grouplike=True, order=m, coordinate="t")
    builder.symbol("e", RAISING, alpha)

    builder.rule(f"{main}*{inv}", 1)
    builder.rule(f"{inv}*{main}", 1)
    builder.qcommute("e", main, field.one / root_value)
    builder.qcommute("e", inv, root_value)
    builder.qcommute(main, "f", field.one / root_value)
    builder.qcommute(inv, "f", root_value)
    if with_t:
        builder.rule("t^%d" % m, 1)
        builder.qcommute("e", "t", nu)
        builder.qcommute("t", "f", nu)
    builder.bracket("e", "f", f"({main}{power} - {inv}{power})/(q - q^-1)")
    builder.commute_remaining()

    k0, kinv0 = f"{main}{power}", f"{inv}{power}"
    kinv1 = f"{inv}'{power}"
    hopf = HopfData(
        delta={"e": f"e*{kinv1} + e'", "f": f"f + {k0}*f'", main: f"{main}*{main}'", inv: f"{inv}*{inv}'"},
        counit={"e": "0", "f": "0", main: "1", inv: "1"},
        antipode={"e": f"-e*{k0}", "f": f"-{kinv0}*f", main: inv, inv: main},
        involution={"e": "f", "f": "e", main: inv, inv: main},
    )
    involution = {"e": f"-{kinv0}*f", "f": f"-e*{k0}", main: main, inv: inv}
    if with_t:
        t_inverse = "1" if m == 1 else f"t^{m - 1}"
        hopf.delta["t"] = "t*t'"
        hopf.counit["t"] = "1"
        hopf.antipode["t"] = t_inverse
        hopf.involution["t"] = t_inverse
        involution["t"] = "t"
    notes = []
    if lattice == "torsion" and m == 1:
        notes.append("torsion order 1 gives the coroot lattice")
    return AlgebraSpec(
        name=name, family="uq_sl2", presentation=builder.build(),
        params={"lattice": lattice, "m": m, "nu": nu},
        anti_involution=involution, hopf=hopf,
        central={"C": f"f*e + (q*{k0} + q^-1*{kinv0})/(q - q^-1)^2"},
        notes=notes,
    )


POWER_RE = re.compile(r"^\s*([A-Za-z]+)\s*(?:\^\s*(-?\d+))?\s*$")


def restrict(spec: AlgebraSpec, generators: Sequence[str]) -> AlgebraSpec:
    """Restrict the grouplike part of a quantum sl2 to the subgroup generated by pure powers"""
    if spec.family != "uq_sl2":
        raise UnsupportedParameterError(f"restriction is defined for the uq_sl2 family, not {spec.family}")
    lattice, m, nu = spec.params["lattice"], spec.params["m"], spec.params["nu"]
    main_step, t_steps = 0, []
    for text in generators:
        match = POWER_RE.match(text)
        if not match:
            raise SubgroupError(f"subgroup generator '{text}' is not a power of a grouplike")
        symbol, exponent = match.group(1), int(match.group(2) or 1)
        if symbol == "K":
            step = 2 * exponent if lattice == "coweight" else exponent
            main_step = gcd(main_step, step)
        elif symbol == "L" and lattice == "coweight":
            main_step = gcd(main_step, exponent)
        elif symbol == "t" and lattice == "torsion" and m > 1:
            t_steps.append(exponent)
        else:
            raise SubgroupError(f"'{symbol}' is not a grouplike generator of {spec.name}")
    k_step = 2 if lattice == "coweight" else 1
    if main_step == 0 or k_step % main_step:
        raise SubgroupError(f"subgroup generated by {', '.join(generators)} does not contain K")
    if lattice == "coweight":
        if main_step == 1:
            return spec
        return build_uq_sl2({"lattice": "coroot"})
    if lattice == "coroot":
        return spec
    t_gcd = m
    for step in t_steps:
        t_gcd = gcd(t_gcd, step)
    order = m // t_gcd
    if order == m:
        return spec
    if order == 1:
        return build_uq_sl2({"lattice": "coroot"})
    return build_uq_sl2({"lattice": "torsion", "m": order, "nu": nu ** t_gcd})


# ----------------------------------------------------------------------
# infinitesimal Hecke algebras

def _hecke_beta(params: Mapping) -> List:
    if "beta" in params:
        beta = _scalar_list(params, "beta", [1], RATIONALS)
    else:
        beta = _trim([RATIONALS.convert(params.get(f"beta{i}", 1 if i == 0 else 0)) for i in range(3)])
    if len(beta) > 3:
        raise UnsupportedParameterError("beta may have degree at most 2")
    return beta


def build_hecke_gl_n(params: Mapping) -> AlgebraSpec:
    """H_beta(gl_n) on V = k^n: [v_l, w_k] = sum_i beta_i symm r_i(w_k, v_l)"""
    n = _int_param(params, "n", 1, 1, 2)
    beta = _hecke_beta(params)
    field = RATIONALS
    delta = [2 * n - 1 - 4 * k for k in range(n)]
    coordinates = [f"E{i}{i}" for i in range(1, n + 1)]
    if n == 1:
        model = WeightModel("hecke_gl_1", ADDITIVE, field, coordinates, [[1]])
    else:
        model = WeightModel(f"hecke_gl_{n}", ADDITIVE, field, coordinates, [[0, -1]],
                            restriction=[delta], restricted_names=["delta"])

    def unit(i: int, sign: int = 1) -> Tuple[int, ...]:
        return tuple(sign if c == i else 0 for c in range(1, n + 1))

    def grade(offset: Tuple[int, ...]) -> RootVector:
        return RootVector((sum(d * v for d, v in zip(delta, offset)),))

    def gl_offset(i: int, j: int) -> Tuple[int, ...]:
        return tuple(a + b for a, b in zip(unit(i), unit(j, -1)))

    def lattice(offset: Tuple[int, ...]) -> Tuple:
        return tuple(field.convert(v) for v in offset)

    gl = _gl_part(n, model, lambda i, j: grade(gl_offset(i, j)), lambda i, j: lattice(gl_offset(i, j)))
    degree = (len(beta) - 1) // 2 + 1 if beta else 1
    vectors = [(f"v{i}", unit(i)) for i in range(1, n + 1)] + [(f"w{i}", unit(i, -1)) for i in range(1, n + 1)]

    builder = PresentationBuilder(gl.name.replace("u_gl", "hecke_gl"), field, model)
    for i, j in _gl_generators(n):
        builder.symbol(f"E{i}{j}", _gl_class(i, j), grade(gl_offset(i, j)), lattice(gl_offset(i, j)),
                       coordinate=f"E{i}{i}" if i == j else None)
    for name, offset in vectors:
        root = grade(offset)
        builder.symbol(name, RAISING if root.is_positive() else LOWERING, root, lattice(offset), degree=degree)
    _gl_brackets(builder, n)
    for i, j in _gl_generators(n):
        for k in range(1, n + 1):
            builder.bracket(f"E{i}{j}", f"v{k}", _combo(builder, [(1, f"v{i}")] if j == k else []))
            builder.bracket(f"E{i}{j}", f"w{k}", _combo(builder, [(-1, f"w{j}")] if i == k else []))
    images = series.gl_images(gl, n)
    for k in range(1, n + 1):
        for l in range(1, n + 1):
            rhs = gl.scalar(0)
            if beta:
                coefficients = series.expand_r_series(n, k, l, len(beta) - 1)
                for b, poly in zip(beta, coefficients):
                    if b:
                        rhs = rhs + series.symmetrize(poly, images, gl) * b
            builder.bracket(f"v{l}", f"w{k}", _transfer(rhs, builder))
    builder.commute_remaining()

    involution = {f"E{i}{j}": f"E{j}{i}" for i, j in _gl_generators(n)}
    for i in range(1, n + 1):
        involution[f"v{i}"] = f"-w{i}"
        involution[f"w{i}"] = f"-v{i}"
    central = {}
    if len(beta) <= 1:
        b0 = field.render(beta[0]) if beta else "0"
        central["casimir"] = (" + ".join(f"v{i}*w{i}" for i in range(1, n + 1))
                              + f" + {b0}*(" + " + ".join(coordinates) + ")")
    notes = ["Hopf data is attached only to H = Sym(h); no coalgebra is assumed on v, w"]
    if n > 1:
        notes.append("graded by delta = diag(" + ", ".join(str(d) for d in delta) + ")")
    return AlgebraSpec(
        name=builder.name, family="hecke_gl_n", presentation=builder.build(),
        params={"n": n, "beta": [field.render(b) for b in beta], "identification": "gl"},
        anti_involution=involution, central=central, notes=notes,
    )


def _sp2_symbols(builder: PresentationBuilder):
    builder.symbol("w11", LOWERING, RootVector((-2,)))
    builder.symbol("u11", CARTAN, coordinate="u11")
    builder.symbol("v11", RAISING, RootVector((2,)))


def _sp2_brackets(builder: PresentationBuilder):
    builder.bracket("u11", "v11", "2*v11")
    builder.bracket("u11", "w11", "-2*w11")
    builder.bracket("v11", "w11", "4*u11")


def build_hecke_sp_2n(params: Mapping) -> AlgebraSpec:
    """H_beta(sp_2) on V = k^2 with beta = (beta0, beta2)"""
    n = _int_param(params, "n", 1, 1, 1)
    field = RATIONALS
    if "beta" in params:
        values = _scalar_list(params, "beta", [1], field)
        if len(values) > 2:
            raise UnsupportedParameterError("sp beta takes at most (beta0, beta2)")
        beta0 = values[0] if values else field.zero
        beta2 = values[1] if len(values) > 1 else field.zero
    else:
        beta0 = field.convert(params.get("beta0", 1))
        beta2 = field.convert(params.get("beta2", 0))
    model = WeightModel("sp2", ADDITIVE, field, ["u11"], [[1]])
    sub = PresentationBuilder("u_sp2", field, model)
    _sp2_symbols(sub)
    _sp2_brackets(sub)
    sp = sub.build()

    degree = 2 if beta2 else 1
    builder = PresentationBuilder("hecke_sp_2", field, model)
    builder.symbol("w11", LOWERING, RootVector((-2,)))
    builder.symbol("e2", LOWERING, RootVector((-1,)), degree=degree)
    builder.symbol("u11", CARTAN, coordinate="u11")
    builder.symbol("v11", RAISING, RootVector((2,)))
    builder.symbol("e1", RAISING, RootVector((1,)), degree=degree)
    _sp2_brackets(builder)
    builder.bracket("u11", "e1", "e1")
    builder.bracket("u11", "e2", "-e2")
    builder.bracket("v11", "e2", "2*e1")
    builder.bracket("w11", "e1", "2*e2")
    builder.bracket("v11", "e1", 0)
    builder.bracket("w11", "e2", 0)

    normalization = series.sp_normalization_constant()
    images = series.sp_images(sp)
    l_terms = series.expand_l_series(1, 1, 2, 2 if beta2 else 0)
    rhs = series.symmetrize(l_terms[0], images, sp) * beta0
    if beta2:
        rhs = rhs + series.symmetrize(l_terms[1], images, sp) * beta2
    builder.bracket("e1", "e2", _transfer(rhs * normalization, builder))
    builder.commute_remaining()
    return AlgebraSpec(
        name="hecke_sp_2", family="hecke_sp_2n", presentation=builder.build(),
        params={"n": 1, "beta0": field.render(beta0), "beta2": field.render(beta2), "identification": "sp"},
        anti_involution={"e1": "e2", "e2": "e1", "u11": "u11", "v11": "-w11", "w11": "-v11"},
        notes=[f"[e1, e2] = {normalization} * (beta0 l0 + beta2 symm l2)"],
        sp_normalization=normalization,
    )


def build_sympl_osc(params: Mapping) -> AlgebraSpec:
    """U(sl2) semidirect T(k^2) modulo [x, y] = z(Omega)"""
    field = RATIONALS
    z = _scalar_list(params, "z", [1], field)
    if len(z) > 3:
        raise UnsupportedParameterError("z may have degree at most 2 in the Casimir")
    model = WeightModel("sympl_osc", ADDITIVE, field, ["h"], [[1]])
    sub = PresentationBuilder("u_sl2", field, model)
    _sl2_symbols(sub, scale=2)
    sl2 = sub.build()
    casimir = sl2.element("2*f*e + h + h^2/2")
    rhs = sl2.scalar(0)
    for k, coefficient in enumerate(z):
        rhs = rhs + casimir ** k * coefficient

    degree = max(1, len(z))
    builder = PresentationBuilder("sympl_osc", field, model)
    builder.symbol("f", LOWERING, RootVector((-2,)))
    builder.symbol("y", LOWERING, RootVector((-1,)), degree=degree)
    builder.symbol("h", CARTAN, coordinate="h")
    builder.symbol("x", RAISING, RootVector((1,)), degree=degree)
    builder.symbol("e", RAISING, RootVector((2,)))
    builder.bracket("e", "f", "h")
    builder.bracket("h", "e", "2*e")
    builder.bracket("h", "f", "-2*f")
    builder.bracket("h", "x", "x")
    builder.bracket("h", "y", "-y")
    builder.bracket("e", "y", "x")
    builder.bracket("f", "x", "y")
    builder.bracket("x", "y", _transfer(rhs, builder))
    builder.commute_remaining()

    central = {}
    if len(z) == 1:
        c = field.render(field.one / (2 * z[0]))
        e1, f1, h1 = f"(e - {c}*x^2)", f"(f + {c}*y^2)", f"(h + {c}*(x*y + y*x))"
        central["casimir"] = f"{e1}*{f1} + {f1}*{e1} + {h1}^2/2"
    return AlgebraSpec(
        name="sympl_osc", family="sympl_osc", presentation=builder.build(),
        params={"z": [field.render(v) for v in z]},
        anti_involution={"e": "-f", "f": "-e", "h": "h", "x": "y", "y": "x"},
        central=central,
        notes=[] if central else ["no named central element for z of positive degree"],
    )


# ----------------------------------------------------------------------
# tensor products

def _pad(values: Sequence, before: int, after: int, unit) -> Tuple:
    return (unit,) * before + tuple(values) + (unit,) * after


def _tensor_model(models: Sequence[WeightModel], field) -> WeightModel:
    kinds = {m.kind for m in models}
    if len(kinds) != 1:
        raise ModelMismatchError("tensor factors mix additive and multiplicative weights")
    kind = kinds.pop()
    unit = field.zero if kind == ADDITIVE else field.one
    total = sum(m.rank for m in models)
    coordinates, roots, rows, names, torsion = [], [], [], [], {}
    start = 0
    for k, m in enumerate(models):
        suffix = "'" * k
        after = total - start - m.rank
        coordinates.extend(c + suffix for c in m.coordinates)
        roots.extend(_pad(r, start, after, unit) for r in m.simple_roots)
        factor_rows = m.restriction or [[1 if a == b else 0 for b in range(m.rank)] for a in range(m.rank)]
        rows.extend(_pad(r, start, after, 0) for r in factor_rows)
        base = m.restricted_names or (m.coordinates if m.is_strict
                                      else [f"h0_{i + 1}" for i in range(len(factor_rows))])
        names.extend(c + suffix for c in base)
        for c, order in m.torsion.items():
            torsion[c + suffix] = order
        start += m.rank
    strict = all(m.is_strict for m in models)
    return WeightModel(" x ".join(m.name for m in models), kind, field, coordinates, roots,
                       None if strict else rows, torsion, None if strict else names)


def tensor_product(specs: Sequence[AlgebraSpec], name: Optional[str] = None) -> AlgebraSpec:
    """Disjoint union of alphabets, copy k primed k times, cross-factor pairs commute"""
    if not specs:
        raise UnsupportedParameterError("tensor product needs at least one factor")
    field = specs[0].field
    for spec in specs:
        if spec.field != field:
            raise ModelMismatchError("tensor factors over different scalar fields")
    model = _tensor_model([s.model for s in specs], field)
    name = name or " x ".join(s.name for s in specs)
    builder = PresentationBuilder(name, field, model)
    unit = field.zero if model.is_additive else field.one
    maps: List[Dict[int, int]] = []
    root_start, coord_start = 0, 0
    for k, spec in enumerate(specs):
        p, suffix = spec.presentation, "'" * k
        root_after = model.root_rank - root_start - p.model.root_rank
        coord_after = model.rank - coord_start - p.model.rank
        mapping = {}
        for i, s in enumerate(p.symbols):
            mapping[i] = builder.add(GeneratorSymbol(
                s.name + suffix, s.cls,
                RootVector(_pad(s.root.coefficients, root_start, root_after, 0)),
                _pad(s.weight, coord_start, coord_after, unit),
                s.degree, s.grouplike,
                s.inverse + suffix if s.inverse else None, s.order,
                s.coordinate + suffix if s.coordinate else None, s.power))
        for lhs, rhs in p.rules.items():
            builder.rules[tuple(mapping[i] for i in lhs)] = {
                tuple(mapping[i] for i in w): c for w, c in rhs.items()}
        maps.append(mapping)
        root_start += p.model.root_rank
        coord_start += p.model.rank
    builder.commute_remaining()
    presentation = builder.build()

    def embed(elem: NormalForm, k: int) -> str:
        terms = {tuple(maps[k][i] for i in w): c for w, c in elem.terms.items()}
        return NormalForm(presentation, terms).render()

    involution = None
    if all(s.anti_involution is not None for s in specs):
        involution = {}
        for k, spec in enumerate(specs):
            p = spec.presentation
            for i, image in spec.anti_involution_map().items():
                involution[p.names[i] + "'" * k] = embed(image, k)
    central = {}
    for k, spec in enumerate(specs):
        for label, elem in spec.central_elements().items():
            central[label + "'" * k] = embed(elem, k)
    return AlgebraSpec(
        name=name, family="tensor_product", presentation=presentation,
        params={"factors": [s.name for s in specs]},
        anti_involution=involution, central=central,
        notes=["Hopf data of the factors is not combined"],
    )


def build_tensor_product(params: Mapping) -> AlgebraSpec:
    factors = params.get("factors", "u_sl2,u_sl2")
    if isinstance(factors, str):
        factors = [f.strip() for f in factors.split(',') if f.strip()]
    return tensor_product([build(f) for f in factors])


# ----------------------------------------------------------------------
# registry

FAMILIES: Dict[str, Tuple[Callable[[Mapping], AlgebraSpec], str]] = {
    "u_sl2": (build_u_sl2, "U(sl2), Chevalley generators e, f, h"),
    "u_gl_n": (build_u_gl_n, "U(gl_n), n <= 3, elementary matrices Eij"),
    "uq_sl2": (build_uq_sl2, "quantum sl2 over lattice=coroot|coweight|torsion (m, nu)"),
    "heisenberg_ext": (build_heisenberg_ext, "Heisenberg algebra with derivation, modes <= 4"),
    "quiver_rtla": (build_quiver_rtla, "U of a quotient of the doubled path algebra, quiver=1-2,..."),
    "hecke_gl_n": (build_hecke_gl_n, "infinitesimal Hecke algebra of gl_n, n <= 2, beta degree <= 2"),
    "hecke_sp_2n": (build_hecke_sp_2n, "infinitesimal Hecke algebra of sp_2, beta0 and beta2"),
    "sympl_osc": (build_sympl_osc, "symplectic oscillator algebra, z = coefficients in the Casimir"),
    "takiff_sl2": (build_takiff_sl2, "Takiff algebra sl2[t]/t^2"),
    "tensor_product": (build_tensor_product, "tensor product, factors=u_sl2,u_sl2"),
}

ALIASES = {"uq_sl2_gamma": "uq_sl2", "hecke_sp_2": "hecke_sp_2n"}
INDEXED_RE = re.compile(r"^(u_gl|hecke_gl)_(\d+)$")


def build(family: str, params: Optional[Mapping] = None) -> AlgebraSpec:
    params = dict(params or {})
    family = ALIASES.get(family, family)
    match = INDEXED_RE.match(family)
    if match and family not in FAMILIES:
        family = match.group(1) + "_n"
        params.setdefault("n", int(match.group(2)))
    if family not in FAMILIES:
        raise UnsupportedParameterError(f"unknown algebra family '{family}'")
    spec = FAMILIES[family][0](params)
    logger.info("built %s: %d symbols, %d rules", spec.name,
                len(spec.presentation.symbols), len(spec.presentation.rules))
    return spec


def symmetrize(poly, spec: AlgebraSpec) -> NormalForm:
    """Symmetrization into spec through the trace-pairing identification"""
    presentation = spec.presentation
    kind = spec.params.get("identification")
    if kind == "gl":
        images = series.gl_images(presentation, spec.params["n"])
    elif kind == "sp":
        images = series.sp_images(presentation)
    else:
        images = {}
    for symbol in poly.ring.symbols:
        label = str(symbol)
        if label not in images and label in presentation.index:
            images[label] = presentation.generator(label)
    return series.symmetrize(poly, images, presentation)
