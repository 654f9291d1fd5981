#!/usr/bin/env python3
"""
JSON and TSV artifacts

Payload builders turn reports into plain dicts with every scalar in its
canonical text form; dump_json sorts keys so identical requests give
byte-identical files.
"""

import json
import logging
import os
import sys
from typing import Dict, Iterable, List, Optional, Sequence

from .center import CentralCharacter, hc_project
from .checks import CheckReport, DufloResult
from .rewriting import NormalForm, PBWReport
from .ssets import BlockPartition, SSetReport
from .verma import CompositionReport, LayersReport, SingularVector, VermaSlice
from .zoo import AlgebraSpec

logger = logging.getLogger(__name__)


def write_text(text: str, path: Optional[str] = None):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w') as f:
        f.write(text)
    logger.info("wrote %s", path)


def dump_json(payload: Dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def dump_tsv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    lines = ["\t".join(header)]
    lines.extend("\t".join(str(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# payloads

def pbw_payload(spec: AlgebraSpec, report: PBWReport) -> Dict:
    p = spec.presentation
    return {
        "algebra": spec.name,
        "max_degree": report.max_degree,
        "overlaps_checked": report.overlaps_checked,
        "passed": report.passed,
        "note": report.note,
        "failures": [{"word": p.render_word(f.word), "difference": f.difference.render()}
                     for f in report.failures],
    }


def check_payload(report: CheckReport) -> Dict:
    return {
        "algebra": report.algebra,
        "check": report.check,
        "items_checked": report.items_checked,
        "passed": report.passed,
        "failures": [{"check": f.check, "subject": f.subject, "residue": f.residue} for f in report.failures],
        "flags": report.flags,
    }


def _vector_payload(spec: AlgebraSpec, vector: SingularVector) -> Dict:
    p, field = spec.presentation, spec.field
    return {
        "offset": spec.model.render_offset(vector.space.offset),
        "theta": vector.space.theta.to_list(),
        "depth": vector.space.depth,
        "vector": vector.element(p).render(),
        "coeffs": {p.render_word(w): field.render(c)
                   for w, c in zip(vector.space.basis, vector.coefficients) if c},
    }


def verma_payload(spec: AlgebraSpec, vslice: VermaSlice, singular: Sequence[SingularVector],
                  composition: Optional[CompositionReport] = None) -> Dict:
    model = spec.model
    payload = {
        "algebra": spec.name,
        "lambda": str(vslice.lam),
        "depth": vslice.depth,
        "horizon": composition.horizon if composition else vslice.depth,
        "weight_spaces": [{"offset": model.render_offset(s.offset), "theta": s.theta.to_list(),
                           "weight": str(s.weight), "dim": s.dim} for s in vslice.ordered()],
        "singular": [_vector_payload(spec, v) for v in singular],
        "multiplicities": [],
    }
    if composition is not None:
        payload["multiplicities"] = [{"mu": str(mu), "theta": composition.thetas[mu].to_list(), "m": m}
                                     for mu, m in composition.multiplicities.items()]
    return payload


def layers_payload(spec: AlgebraSpec, report: LayersReport) -> Dict:
    model = spec.model
    return {
        "algebra": spec.name,
        "lambda": str(report.lam),
        "depth": report.depth,
        "passed": report.passed,
        "layers": [{"offset": model.render_offset(s.offset), "theta": s.theta.to_list(),
                    "mu": str(s.weight), "m": dim} for s, dim in report.layers],
        "non_maximal": list(report.non_maximal),
    }


def central_payload(spec: AlgebraSpec, elements: Dict[str, NormalForm],
                    characters: Sequence[CentralCharacter]) -> List[Dict]:
    records = []
    for name, element in elements.items():
        records.append({
            "element_name": name,
            "xi": hc_project(spec, element).render(),
            "chi": [{"lambda": str(c.lam), "value": spec.field.render(c.values[name])} for c in characters],
        })
    return records


def duflo_payload(spec: AlgebraSpec, result: DufloResult) -> Dict:
    return {
        "algebra": spec.name,
        "coordinates": list(spec.model.coordinates),
        "delta": list(result.delta) if result.delta is not None else None,
        "bound": result.bound,
        "candidate": list(result.candidate) if result.candidate is not None else None,
        "candidate_valid": result.candidate_valid,
    }


def sset_payload(spec: AlgebraSpec, report: SSetReport, s1=None, s2=None) -> Dict:
    payload = dict(report.to_dict())
    payload["algebra"] = spec.name
    payload["status"] = report.status
    if s1 is not None:
        payload["s1"] = [str(w) for w in s1]
        payload["s2"] = [str(w) for w in s2]
    return payload


def blocks_payload(spec: AlgebraSpec, partition: BlockPartition) -> Dict:
    payload = partition.to_dict()
    payload["algebra"] = spec.name
    return payload
