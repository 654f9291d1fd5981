"""
RTA Engine Library
Exact computation in regular triangular algebras: PBW rewriting, Verma
modules, central characters and truncated linkage classes
"""

from .errors import RTAError
from .scalars import ScalarField, field_for
from .weights import RootVector, Weight, WeightModel
from .rewriting import NormalForm, Presentation, PresentationBuilder
from .zoo import AlgebraSpec, HopfData, build
from .presentation import export_presentation, parse_presentation
from .verma import VermaSlice, build_verma, composition_multiplicities, singular_vectors
from .center import central_character, hc_project, is_central
from .ssets import block_partition, s3_closure
from .formatter import ReportFormatter

__version__ = '1.0.0'
__all__ = [
    'RTAError',
    'ScalarField',
    'field_for',
    'RootVector',
    'Weight',
    'WeightModel',
    'NormalForm',
    'Presentation',
    'PresentationBuilder',
    'AlgebraSpec',
    'HopfData',
    'build',
    'export_presentation',
    'parse_presentation',
    'VermaSlice',
    'build_verma',
    'composition_multiplicities',
    'singular_vectors',
    'central_character',
    'hc_project',
    'is_central',
    'block_partition',
    's3_closure',
    'ReportFormatter',
]
