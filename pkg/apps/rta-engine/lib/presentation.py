#!/usr/bin/env python3
"""
Presentation files

Plain text, one section per block, '#' starts a comment:

    [meta]          name = ..., family = ..., params = {json}, note = ...
    [scalars]       field = rational | q
    [weights]       name, kind, coordinates, root (repeated), restriction
                    (repeated), restricted, torsion = t 2
    [generators]    name | class | root | weight | options
    [relations]     lhs -> rhs
    [antihom]       symbol = image
    [hopf]          delta|counit|antipode|involution symbol = image
    [central]       label = element

export_presentation writes the sections in this order with symbols in
declaration order and rules in PBW order, so the output is deterministic.
"""

import json
import logging
import os
from typing import Dict, List, Optional, Tuple

from . import zoo
from .errors import ExpressionError, PresentationError
from .rewriting import CLASS_RANK, GeneratorSymbol, NormalForm, PresentationBuilder
from .scalars import field_for
from .weights import ADDITIVE, RootVector, WeightModel, split_top_level
from .zoo import AlgebraSpec, HopfData

logger = logging.getLogger(__name__)

SECTIONS = ("meta", "scalars", "weights", "generators", "relations", "antihom", "hopf", "central")
HOPF_MAPS = ("delta", "counit", "antipode", "involution")


def _sections(text: str) -> Dict[str, List[Tuple[int, str]]]:
    sections: Dict[str, List[Tuple[int, str]]] = {}
    current = None
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.startswith('[') and line.endswith(']'):
            current = line[1:-1].strip().lower()
            if current not in SECTIONS:
                raise PresentationError(f"line {number}: unknown section [{current}]")
            if current in sections:
                raise PresentationError(f"line {number}: section [{current}] repeated")
            sections[current] = []
            continue
        if current is None:
            raise PresentationError(f"line {number}: text before the first section")
        sections[current].append((number, line))
    for required in ("scalars", "weights", "generators"):
        if required not in sections:
            raise PresentationError(f"missing section [{required}]")
    return sections


def _pairs(lines: List[Tuple[int, str]], separator: str = '=') -> List[Tuple[int, str, str]]:
    pairs = []
    for number, line in lines:
        if separator not in line:
            raise PresentationError(f"line {number}: expected 'key {separator} value', got '{line}'")
        key, value = line.split(separator, 1)
        pairs.append((number, key.strip(), value.strip()))
    return pairs


def _root_vector(text: str, number: int) -> RootVector:
    body = text.strip()
    if not (body.startswith('[') and body.endswith(']')):
        raise PresentationError(f"line {number}: malformed root vector '{text}'")
    try:
        return RootVector(tuple(int(v) for v in split_top_level(body[1:-1]) if v.strip()))
    except ValueError:
        raise PresentationError(f"line {number}: root vector '{text}' needs integer entries")


def _weight_model(lines: List[Tuple[int, str]], field) -> WeightModel:
    values = {"root": [], "restriction": []}
    for number, key, value in _pairs(lines):
        if key in values:
            values[key].append((number, value))
        else:
            values[key] = (number, value)
    try:
        name = values["name"][1]
        kind = values.get("kind", (0, ADDITIVE))[1]
        coordinates = [c.strip() for c in values["coordinates"][1].split(',') if c.strip()]
    except KeyError as e:
        raise PresentationError(f"[weights] needs '{e.args[0]}'")
    bare = WeightModel(name, kind, field, coordinates, [])
    roots = [bare.parse_values(text) for _, text in values["root"]]
    restriction = [list(_root_vector(text, number).coefficients) for number, text in values["restriction"]]
    restricted = None
    if "restricted" in values:
        restricted = [c.strip() for c in values["restricted"][1].split(',') if c.strip()]
    torsion = {}
    if "torsion" in values:
        for item in values["torsion"][1].split(','):
            parts = item.split()
            if len(parts) != 2:
                raise PresentationError(f"line {values['torsion'][0]}: torsion entries are 'coordinate order'")
            torsion[parts[0]] = int(parts[1])
    return WeightModel(name, kind, field, coordinates, roots, restriction or None, torsion, restricted)


def _generator(builder: PresentationBuilder, number: int, line: str):
    fields = [f.strip() for f in line.split('|')]
    if len(fields) < 4:
        raise PresentationError(f"line {number}: generator lines are 'name | class | root | weight | options'")
    name, cls, root_text, weight_text = fields[:4]
    if cls not in CLASS_RANK:
        raise PresentationError(f"line {number}: unknown generator class '{cls}'")
    options = {}
    for token in (fields[4].split() if len(fields) > 4 else []):
        key, _, value = token.partition('=')
        options[key] = value if value else True
    weight = tuple(builder.model.parse_values(weight_text))
    try:
        builder.add(GeneratorSymbol(
            name, cls, _root_vector(root_text, number), weight,
            degree=int(options.get("degree", 1)),
            grouplike="grouplike" in options,
            inverse=options.get("inverse"),
            order=int(options["order"]) if "order" in options else None,
            coordinate=options.get("coordinate"),
            power=int(options.get("power", 1)),
        ))
    except ValueError as e:
        raise PresentationError(f"line {number}: bad generator option: {e}")


def parse_presentation(text: str) -> AlgebraSpec:
    """Build an AlgebraSpec from presentation text"""
    sections = _sections(text)
    meta: Dict[str, object] = {"note": []}
    for _, key, value in _pairs(sections.get("meta", [])):
        if key == "note":
            meta["note"].append(value)
        else:
            meta[key] = value
    scalars = dict((k, v) for _, k, v in _pairs(sections["scalars"]))
    field = field_for(scalars.get("field", "rational"))
    model = _weight_model(sections["weights"], field)
    name = str(meta.get("name", model.name))
    builder = PresentationBuilder(name, field, model)
    for number, line in sections["generators"]:
        _generator(builder, number, line)
    for number, lhs, rhs in _pairs(sections.get("relations", []), '->'):
        try:
            builder.rule(lhs, rhs)
        except ExpressionError as e:
            raise PresentationError(f"line {number}: {e}")
    presentation = builder.build()

    antihom = None
    if "antihom" in sections:
        antihom = {k: v for _, k, v in _pairs(sections["antihom"])}
    hopf = None
    if "hopf" in sections:
        maps: Dict[str, Dict[str, str]] = {m: {} for m in HOPF_MAPS}
        for number, key, value in _pairs(sections["hopf"]):
            parts = key.split()
            if len(parts) != 2 or parts[0] not in HOPF_MAPS:
                raise PresentationError(f"line {number}: hopf entries are '<{'|'.join(HOPF_MAPS)}> symbol = image'")
            maps[parts[0]][parts[1]] = value
        hopf = HopfData(**maps)
    central = {k: v for _, k, v in _pairs(sections.get("central", []))}
    try:
        params = json.loads(meta["params"]) if "params" in meta else {}
    except json.JSONDecodeError as e:
        raise PresentationError(f"[meta] params is not valid JSON: {e}")
    normalization = meta.get("sp_normalization")
    spec = AlgebraSpec(
        name=name, family=str(meta.get("family", "presented")), presentation=presentation,
        params=params, anti_involution=antihom, hopf=hopf, central=central,
        notes=list(meta["note"]),
        sp_normalization=int(normalization) if normalization is not None else None,
    )
    logger.info("parsed presentation %s: %d symbols, %d rules", name,
                len(presentation.symbols), len(presentation.rules))
    return spec


def load_presentation(path: str) -> AlgebraSpec:
    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as e:
        raise PresentationError(f"cannot read presentation '{path}': {e.strerror}")
    return parse_presentation(text)


def export_presentation(spec: AlgebraSpec) -> str:
    """Deterministic text form of spec; parse_presentation reads it back"""
    p, model, field = spec.presentation, spec.model, spec.field
    lines = ["[meta]", f"name = {spec.name}", f"family = {spec.family}"]
    if spec.params:
        lines.append(f"params = {json.dumps(spec.params, sort_keys=True)}")
    if spec.sp_normalization is not None:
        lines.append(f"sp_normalization = {spec.sp_normalization}")
    lines.extend(f"note = {note}" for note in spec.notes)

    lines += ["", "[scalars]", f"field = {field.kind}"]

    lines += ["", "[weights]", f"name = {model.name}", f"kind = {model.kind}",
              f"coordinates = {', '.join(model.coordinates)}"]
    lines.extend(f"root = {model.render_offset(root)}" for root in model.simple_roots)
    for row in model.restriction or ():
        lines.append("restriction = [" + ", ".join(str(int(v)) for v in row) + "]")
    if model.restricted_names:
        lines.append(f"restricted = {', '.join(model.restricted_names)}")
    if model.torsion:
        lines.append("torsion = " + ", ".join(f"{c} {order}" for c, order in model.torsion.items()))

    lines += ["", "[generators]"]
    for s in p.symbols:
        options = []
        if s.degree != 1:
            options.append(f"degree={s.degree}")
        if s.grouplike:
            options.append("grouplike")
        if s.inverse:
            options.append(f"inverse={s.inverse}")
        if s.order is not None:
            options.append(f"order={s.order}")
        if s.coordinate:
            options.append(f"coordinate={s.coordinate}")
        if s.power != 1:
            options.append(f"power={s.power}")
        fields = [s.name, s.cls, str(s.root), model.render_offset(s.weight)]
        if options:
            fields.append(" ".join(options))
        lines.append(" | ".join(fields))

    lines += ["", "[relations]"]
    for lhs in sorted(p.rules, key=p.word_sort_key):
        lines.append(f"{p.render_word(lhs)} -> {_render_sum(p, p.rules[lhs])}")

    if spec.anti_involution is not None:
        lines += ["", "[antihom]"]
        lines.extend(f"{name} = {spec.anti_involution[name]}" for name in p.names if name in spec.anti_involution)
    if spec.hopf is not None:
        lines += ["", "[hopf]"]
        for label in HOPF_MAPS:
            table = getattr(spec.hopf, label)
            lines.extend(f"{label} {name} = {table[name]}" for name in p.names if name in table)
    if spec.central:
        lines += ["", "[central]"]
        lines.extend(f"{label} = {text}" for label, text in spec.central.items())
    return "\n".join(lines) + "\n"


def _render_sum(p, terms) -> str:
    return NormalForm(p, terms).render()


def spec_from_selector(selector: str, params: Optional[Dict] = None) -> AlgebraSpec:
    """A zoo family name or a path to a presentation file"""
    if os.path.isfile(selector) or selector.endswith(".rta") or "/" in selector:
        return load_presentation(selector)
    return zoo.build(selector, params)
