"""Weight-test certificates for equations over torsion-free groups."""

from .certificate import Certificate, dump_certificate, load_certificate
from .corpus import FAMILIES, FamilyError, FamilyInstance, gen_family, paper_weights, run_corpus
from .dsl import ParseError, format_equation, format_presentation, parse_equation, parse_presentation
from .labels import LabelClass, LabelKind, classify_label
from .lp import LPProblem, LPResult, solve_lp_exact
from .rewrite import Presentation, SubstitutionPattern, back_substitute, is_orientable, substitute
from .search import OutcomeKind, SearchOutcome, search, search_binary, search_lp
from .stargraph import EdgePair, StarGraph, Vertex, build_star_graph, to_dot
from .verifier import Overall, VerificationReport, check_w1, check_w3, verify
from .w2 import CycleWitness, W2Verdict, check_w2
from .words import ConstraintEnv, Equation, Letter, ShapeError, Word, invert, reduce

__all__ = [
    "Certificate", "dump_certificate", "load_certificate",
    "FAMILIES", "FamilyError", "FamilyInstance", "gen_family", "paper_weights", "run_corpus",
    "ParseError", "format_equation", "format_presentation", "parse_equation", "parse_presentation",
    "LabelClass", "LabelKind", "classify_label",
    "LPProblem", "LPResult", "solve_lp_exact",
    "Presentation", "SubstitutionPattern", "back_substitute", "is_orientable", "substitute",
    "OutcomeKind", "SearchOutcome", "search", "search_binary", "search_lp",
    "EdgePair", "StarGraph", "Vertex", "build_star_graph", "to_dot",
    "Overall", "VerificationReport", "check_w1", "check_w3", "verify",
    "CycleWitness", "W2Verdict", "check_w2",
    "ConstraintEnv", "Equation", "Letter", "ShapeError", "Word", "invert", "reduce",
]
