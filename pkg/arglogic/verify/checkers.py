# arglogic/verify/checkers.py
"""
Vérificateurs exécutables, un par théorème.

Les théorèmes d'égalité d'ensembles comparent les deux ensembles énumérés;
les théorèmes à une seule direction sont vérifiés comme des implications
sur l'ensemble des antécédents, jamais comme des équivalences.
"""
import logging
import random
import time
from fractions import Fraction
from typing import Callable, Dict, Iterable, Optional

from ..equational.properties import (
    EquationalFunctionProperty,
    check_function_property,
    is_half_idempotent,
    is_zero_divisor_free,
)
from ..equational.solver import satisfies
from ..equational.systems import (
    EncodedSystem,
    GeometricalSystem,
    InverseSystem,
    LukaClosedSystem,
    MaxSystem,
    luka_nary,
)
from ..exceptions import PartialityError, UnsupportedConfigurationError
from ..logic.enumeration import iter_assignments
from ..logic.evaluation import is_model
from ..logic.negation import STANDARD_NEGATION
from ..logic.system import LogicSystem
from ..logic.tnorm import GOEDEL, LUKASIEWICZ, NAMED_TNORMS, PRODUCT, TNorm, get_tnorm
from ..logic.truth import HALF, ZERO, Assignment, grid_values
from ..models.framework import ArgumentationFramework
from ..semantics.labelling import extension_of, is_complete_labelling
from ..semantics.transforms import binarize, ternarize
from .context import FrameworkContext
from .report import VerificationReport
from .theorems import TheoremId, VerificationParams

logger = logging.getLogger(__name__)

EXHAUSTIVE = 'exhaustive'
GRID_COMPLETE = 'grid-complete'

PROOF_READING = {
    'statement': '1/2-idempotent t-norm',
    'proof': 'zero-divisor-free t-norm',
    'applied': 'zero-divisor-free t-norm with standard negation',
}


def _named_tnorms():
    return [get_tnorm(name) for name in NAMED_TNORMS]


# Égalités d'ensembles

def _set_equality(ctx: FrameworkContext, report: VerificationReport, left: Iterable[Assignment],
                  right: Iterable[Assignment], left_name: str, right_name: str):
    left, right = list(left), list(right)
    left_set, right_set = set(left), set(right)
    for v in left:
        if v not in right_set:
            report.add_counterexample(ctx.af, v, f"{left_name} absent de {right_name}")
    for v in right:
        if v not in left_set:
            report.add_counterexample(ctx.af, v, f"{right_name} absent de {left_name}")


def _finite_equality(ctx, report, semantics, encoding, ls: LogicSystem, semantics_name):
    report.instances += len(ls.domain) ** len(ctx.af)
    report.metadata['coverage'] = EXHAUSTIVE
    _set_equality(ctx, report, semantics, ctx.models(encoding, ls),
                  semantics_name, f"modèles de {encoding} dans {ls}")


def check_stable_eq_ec1_k(ctx, report):
    _finite_equality(ctx, report, ctx.stable, 'normal', ctx.params.pl3k, 'étiquetages stables')


def check_complete_eq_ec1_l(ctx, report):
    _finite_equality(ctx, report, ctx.complete, 'normal', ctx.params.pl3l, 'étiquetages complets')


def check_stable_eq_ec1_pl2(ctx, report):
    _finite_equality(ctx, report, ctx.stable, 'normal', ctx.params.pl2, 'étiquetages stables')


# Encodage régulier

def _complete_maps_to_model(ctx, report, ls: LogicSystem, transform: Optional[Callable]):
    report.metadata['coverage'] = EXHAUSTIVE
    for lab in ctx.complete:
        report.instances += 1
        image = transform(lab) if transform else lab
        if not is_model(ctx.ec2, image, ls):
            report.add_counterexample(ctx.af, [lab, image], f"image non modèle de ec2 dans {ls}")


def _models_ternarize_to_complete(ctx, report, ls: LogicSystem):
    report.metadata['coverage'] = EXHAUSTIVE
    for m in ctx.models('regular', ls):
        report.instances += 1
        try:
            image = ternarize(ctx.af, m)
        except PartialityError as e:
            report.add_counterexample(ctx.af, m, f"ternarisation indéfinie: {e}")
            continue
        if not is_complete_labelling(ctx.af, image):
            report.add_counterexample(ctx.af, [m, image], "ternarisation non complète")


def check_ec2_pl2_fwd(ctx, report):
    _complete_maps_to_model(ctx, report, ctx.params.pl2, binarize)


def check_ec2_pl2_bwd(ctx, report):
    _models_ternarize_to_complete(ctx, report, ctx.params.pl2)


def check_ec2_k_fwd(ctx, report):
    _complete_maps_to_model(ctx, report, ctx.params.pl3k, binarize)


def check_ec2_k_bwd(ctx, report):
    _models_ternarize_to_complete(ctx, report, ctx.params.pl3k)


def check_ec2_l_fwd(ctx, report):
    _complete_maps_to_model(ctx, report, ctx.params.pl3l, None)


def check_ec2_l_tcom(ctx, report):
    _models_ternarize_to_complete(ctx, report, ctx.params.pl3l)
    # Lemme intermédiaire: la binarisation d'un modèle PL3L est un modèle PL2
    for m in ctx.models('regular', ctx.params.pl3l):
        image = binarize(m)
        if not is_model(ctx.ec2, image, ctx.params.pl2):
            report.add_counterexample(ctx.af, [m, image], "binarisation non modèle de ec2 dans pl2")


def check_ec2_l_counterexample(params: VerificationParams, report: VerificationReport):
    af = ArgumentationFramework.from_names(['a', 'b'], [('a', 'b'), ('b', 'a')])
    ctx = FrameworkContext(af, params)
    witness = Assignment(af.names, (HALF, ZERO))
    report.instances = 1
    report.metadata['witness'] = witness
    if not is_model(ctx.ec2, witness, params.pl3l):
        report.add_counterexample(af, witness, "le témoin n'est pas modèle de ec2 dans pl3l")
    if is_complete_labelling(af, witness):
        report.add_counterexample(af, witness, "le témoin est un étiquetage complet")


# Systèmes équationnels

def _grid_agreement(ctx, report, pairs):
    """Compare, point par point, le verdict formule et le verdict équationnel."""
    k = ctx.resolution()
    if k is None:
        report.skipped += 1
        return
    report.metadata['coverage'] = GRID_COMPLETE
    report.metadata['resolutions'] = [k]
    for v in iter_assignments(ctx.af, grid_values(k)):
        for ls, sys in pairs:
            report.instances += 1
            model = is_model(ctx.ec1, v, ls, grid=k)
            solution = satisfies(sys, ctx.af, v)
            if model != solution:
                report.add_counterexample(
                    ctx.af, v, f"{ls}: modèle={model}, {sys}: solution={solution}"
                )


def check_eq_ec1_iff(ctx, report):
    negation = ctx.params.negation
    _grid_agreement(ctx, report, [
        (LogicSystem.fuzzy(negation, t), EncodedSystem(negation, t)) for t in _named_tnorms()
    ])


def check_eqmax_is_g(ctx, report):
    _grid_agreement(ctx, report, [(LogicSystem.fuzzy(STANDARD_NEGATION, GOEDEL), MaxSystem())])


def check_eqinv_is_p(ctx, report):
    _grid_agreement(ctx, report, [(LogicSystem.fuzzy(STANDARD_NEGATION, PRODUCT), InverseSystem())])


def check_eql_is_l(ctx, report):
    _grid_agreement(ctx, report, [(LogicSystem.fuzzy(STANDARD_NEGATION, LUKASIEWICZ), LukaClosedSystem())])


def check_luka_nary(params, report):
    rng = random.Random(params.seed)
    report.metadata['samples'] = params.luka_samples
    for _ in range(params.luka_samples):
        arity = rng.randint(2, 6)
        xs = []
        for _ in range(arity):
            denominator = rng.randint(1, 100)
            xs.append(Fraction(rng.randint(0, denominator), denominator))
        report.instances += 1
        closed, folded = luka_nary(xs), LUKASIEWICZ.fold(xs)
        if closed != folded:
            report.add_counterexample(None, {'xs': xs, 'closed': closed, 'fold': folded},
                                      "forme close différente du pli binaire")


def _property_sweep(params, report, properties):
    k = params.grid_resolution
    report.metadata['coverage'] = GRID_COMPLETE
    report.metadata['resolutions'] = [k]
    for t in _named_tnorms():
        sys = EncodedSystem(params.negation, t)
        for arity in range(1, params.max_arity + 1):
            for prop in properties:
                result = check_function_property(sys, prop, arity, k, seed=params.seed)
                report.instances += result.checked
                report.skipped += result.skipped
                if not result.passed:
                    report.add_counterexample(None, result.counterexample,
                                              f"{sys} arité {arity}: {prop.value}")


def check_h_monotone(params, report):
    _property_sweep(params, report, [EquationalFunctionProperty.DECREASING_MONOTONICITY])


def check_h_boundary_sym(params, report):
    _property_sweep(params, report, [
        EquationalFunctionProperty.BOUNDARY_ZERO_TO_ONE,
        EquationalFunctionProperty.BOUNDARY_ONE_KILLS,
        EquationalFunctionProperty.SYMMETRY,
    ])


def check_geometrical_not_encoded(params, report):
    k = params.grid_resolution
    geometrical = GeometricalSystem()
    report.metadata['resolutions'] = [k]

    monotone = check_function_property(geometrical, EquationalFunctionProperty.DECREASING_MONOTONICITY, 2, k)
    report.instances += monotone.checked
    if not monotone.passed:
        report.add_counterexample(None, monotone.counterexample, "geometrical non décroissant")

    encodable = check_function_property(geometrical, EquationalFunctionProperty.ENCODABLE_WITH_STANDARD_NEGATION, 1, k)
    report.instances += encodable.checked
    if encodable.passed:
        report.add_counterexample(None, None, "geometrical se décompose en (N standard, t-norme)")
    else:
        report.metadata['geometrical_witness'] = encodable.counterexample

    encodable_systems = [MaxSystem(), InverseSystem(), LukaClosedSystem()]
    encodable_systems += [EncodedSystem(STANDARD_NEGATION, t) for t in _named_tnorms()]
    for sys in encodable_systems:
        result = check_function_property(sys, EquationalFunctionProperty.ENCODABLE_WITH_STANDARD_NEGATION, 1, k)
        report.instances += result.checked
        if not result.passed:
            report.add_counterexample(None, result.counterexample, f"{sys} devrait être encodable")


# Sémantique complète et systèmes flous

def _require_standard_negation(params: VerificationParams, theorem: TheoremId):
    if not params.negation.is_standard:
        raise UnsupportedConfigurationError(
            f"{theorem.value} requiert la négation standard (reçu {params.negation.name})"
        )


def _require_zero_divisor_free(t: TNorm, theorem: TheoremId, k: int):
    if not is_zero_divisor_free(t, k):
        raise UnsupportedConfigurationError(f"{theorem.value} requiert une t-norme sans diviseur de zéro, pas {t.name}")


def _require_half_idempotent(t: TNorm, theorem: TheoremId):
    if not is_half_idempotent(t):
        raise UnsupportedConfigurationError(f"{theorem.value} requiert une t-norme 1/2-idempotente, pas {t.name}")


def check_zdf_tcom_complete(ctx, report):
    params = ctx.params
    _require_standard_negation(params, TheoremId.ZDF_TCOM_COMPLETE)
    _require_zero_divisor_free(params.zdf_tnorm, TheoremId.ZDF_TCOM_COMPLETE, params.grid_resolution)
    report.metadata['preconditions'] = dict(PROOF_READING, tnorm=params.zdf_tnorm.name)
    k = ctx.resolution()
    if k is None:
        report.skipped += 1
        return
    report.metadata['coverage'] = GRID_COMPLETE
    report.metadata['resolutions'] = [k]
    report.instances += (k + 1) ** len(ctx.af)
    for m in ctx.solutions(EncodedSystem(STANDARD_NEGATION, params.zdf_tnorm), k):
        try:
            image = ternarize(ctx.af, m)
        except PartialityError as e:
            report.add_counterexample(ctx.af, m, f"ternarisation indéfinie: {e}")
            continue
        if not is_complete_labelling(ctx.af, image):
            report.add_counterexample(ctx.af, [m, image], "ternarisation d'une solution non complète")


def check_idem_embed(ctx, report):
    params = ctx.params
    _require_standard_negation(params, TheoremId.IDEM_EMBED)
    _require_half_idempotent(params.idem_tnorm, TheoremId.IDEM_EMBED)
    report.metadata['preconditions'] = {'tnorm': params.idem_tnorm.name, 'negation': 'standard'}
    report.metadata['coverage'] = EXHAUSTIVE
    sys = EncodedSystem(STANDARD_NEGATION, params.idem_tnorm)
    for lab in ctx.complete:
        report.instances += 1
        if not satisfies(sys, ctx.af, lab):
            report.add_counterexample(ctx.af, lab, f"étiquetage complet non solution de {sys}")


def check_complete_fuzzy_set_eq(ctx, report):
    params = ctx.params
    t = params.idem_tnorm
    _require_standard_negation(params, TheoremId.COMPLETE_FUZZY_SET_EQ)
    _require_half_idempotent(t, TheoremId.COMPLETE_FUZZY_SET_EQ)
    _require_zero_divisor_free(t, TheoremId.COMPLETE_FUZZY_SET_EQ, params.grid_resolution)
    k = ctx.resolution(even=True)
    if k is None:
        report.skipped += 1
        return
    report.metadata['coverage'] = GRID_COMPLETE
    report.metadata['resolutions'] = [k]
    report.metadata['preconditions'] = {'tnorm': t.name, 'negation': 'standard'}

    solutions = ctx.solutions(EncodedSystem(STANDARD_NEGATION, t), k)
    report.instances += (k + 1) ** len(ctx.af)
    solution_set = set(solutions)
    # Les étiquetages complets sont des points de la grille paire
    for lab in ctx.complete:
        if lab not in solution_set:
            report.add_counterexample(ctx.af, lab, "étiquetage complet absent des solutions de la grille")
    image = []
    for m in solutions:
        try:
            image.append(ternarize(ctx.af, m))
        except PartialityError as e:
            report.add_counterexample(ctx.af, m, f"ternarisation indéfinie: {e}")
    _set_equality(ctx, report, ctx.complete, list(dict.fromkeys(image)), 'étiquetages complets', 'ternarisations des solutions')


def check_tcom_fixes_complete(ctx, report):
    report.metadata['coverage'] = EXHAUSTIVE
    for lab in ctx.complete:
        report.instances += 1
        image = ternarize(ctx.af, lab)
        if image != lab:
            report.add_counterexample(ctx.af, [lab, image], "T_com ne fixe pas l'étiquetage complet")


def check_grounded_unique(ctx, report):
    report.metadata['coverage'] = EXHAUSTIVE
    report.instances += len(ctx.complete)
    grounded = ctx.grounded
    if len(grounded) != 1:
        report.add_counterexample(ctx.af, grounded, f"{len(grounded)} étiquetage(s) fondé(s)")
        return
    core = extension_of(grounded[0])
    for lab in ctx.complete:
        if not core <= extension_of(lab):
            report.add_counterexample(ctx.af, [grounded[0], lab], "extension fondée non incluse")
    preferred = set(ctx.preferred)
    for lab in ctx.stable:
        if lab not in preferred:
            report.add_counterexample(ctx.af, lab, "étiquetage stable non préféré")


FRAMEWORK_CHECKERS: Dict[TheoremId, Callable[[FrameworkContext, VerificationReport], None]] = {
    TheoremId.STABLE_EQ_EC1_K: check_stable_eq_ec1_k,
    TheoremId.COMPLETE_EQ_EC1_L: check_complete_eq_ec1_l,
    TheoremId.STABLE_EQ_EC1_PL2: check_stable_eq_ec1_pl2,
    TheoremId.EC2_PL2_FWD: check_ec2_pl2_fwd,
    TheoremId.EC2_PL2_BWD: check_ec2_pl2_bwd,
    TheoremId.EC2_K_FWD: check_ec2_k_fwd,
    TheoremId.EC2_K_BWD: check_ec2_k_bwd,
    TheoremId.EC2_L_FWD: check_ec2_l_fwd,
    TheoremId.EC2_L_TCOM: check_ec2_l_tcom,
    TheoremId.EQ_EC1_IFF: check_eq_ec1_iff,
    TheoremId.EQMAX_IS_G: check_eqmax_is_g,
    TheoremId.EQINV_IS_P: check_eqinv_is_p,
    TheoremId.EQL_IS_L: check_eql_is_l,
    TheoremId.ZDF_TCOM_COMPLETE: check_zdf_tcom_complete,
    TheoremId.IDEM_EMBED: check_idem_embed,
    TheoremId.COMPLETE_FUZZY_SET_EQ: check_complete_fuzzy_set_eq,
    TheoremId.TCOM_FIXES_COMPLETE: check_tcom_fixes_complete,
    TheoremId.GROUNDED_UNIQUE: check_grounded_unique,
}

INDEPENDENT_CHECKERS: Dict[TheoremId, Callable[[VerificationParams, VerificationReport], None]] = {
    TheoremId.EC2_L_COUNTEREXAMPLE: check_ec2_l_counterexample,
    TheoremId.LUKA_NARY: check_luka_nary,
    TheoremId.H_MONOTONE: check_h_monotone,
    TheoremId.H_BOUNDARY_SYM: check_h_boundary_sym,
    TheoremId.GEOMETRICAL_NOT_ENCODED: check_geometrical_not_encoded,
}


def verify_theorem(theorem: TheoremId, af: Optional[ArgumentationFramework] = None,
                   params: Optional[VerificationParams] = None,
                   ctx: Optional[FrameworkContext] = None) -> VerificationReport:
    """
    Exécute le vérificateur d'un théorème sur un framework.

    Args:
        theorem: Identifiant du théorème
        af: Framework (ignoré par les vérificateurs indépendants du framework)
        params: Paramètres de vérification (valeurs par défaut si None)
        ctx: Contexte partagé entre vérificateurs pour le même framework

    Returns:
        VerificationReport

    Raises:
        UnsupportedConfigurationError: Hypothèses du théorème non satisfaites
        ResourceLimitError: Framework trop grand
    """
    params = params or VerificationParams()
    report = VerificationReport(theorem)
    start = time.perf_counter()
    if theorem in INDEPENDENT_CHECKERS:
        INDEPENDENT_CHECKERS[theorem](params, report)
    else:
        if ctx is None:
            if af is None:
                raise UnsupportedConfigurationError(f"{theorem.value} requiert un framework")
            ctx = FrameworkContext(af, params)
        FRAMEWORK_CHECKERS[theorem](ctx, report)
        report.frameworks = 1
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    if not report.passed:
        logger.warning(f"{theorem.value}: {len(report.counterexamples)} contre-exemple(s)")
    return report
