"""Built-in verified instances: Sweedler's four-dimensional Hopf algebra and
its twist, group algebras of small cyclic groups, the dual numbers, the
worked crossed-product example over the twisted Sweedler algebra, and a
classical biproduct datum.  These power the golden tests and the CLI
selftest; every golden verdict is reproducible by re-running the named check.
"""

from __future__ import annotations

import json
from importlib import resources

from .constructions import (
    BiproductSpec,
    CrossedProductSpec,
    build_biproduct,
    check_biproduct_conditions,
    check_cocycle_conditions,
    crossed_product,
)
from .convact import (
    Coaction,
    Cocycle,
    ModuleAction,
    check_comodule_coalgebra,
    check_hom_module,
    check_weak_module_algebra,
    trivial_action,
    trivial_coaction,
    trivial_cocycle,
)
from .exactlin import LinearMap, Space, identity, power
from .fields import QQ
from .homcore import (
    HomAlgebra,
    HomBialgebra,
    HomCoalgebra,
    HomHopf,
    check_antipode,
    check_hom_algebra,
    check_hom_bialgebra,
    check_hom_coalgebra,
    yau_twist,
)
from .report import CheckReport


class CharTwoError(ValueError):
    """The worked sigma table divides by two, so GF(2) is excluded."""


def _cube(field, n, entries):
    """Rank-3 tensor from {(i, j): [(k, coeff), ...]}."""
    zero = field.zero
    c = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), terms in entries.items():
        for k, v in terms:
            c[i][j][k] = field.coerce(v)
    return c


def classical_sweedler_h4(field=QQ) -> HomHopf:
    """Sweedler's four-dimensional Hopf algebra with basis (1, g, x, gx).

    The fourth basis vector is the product x g, so that g x = -(gx) and
    x g = gx; comultiplication sends x to x (x) g + 1 (x) x.  With this basis
    the sign twist below lands exactly on the usual twisted tables.
    """
    sp = Space(("1", "g", "x", "gx"))
    one, g, x, w = range(4)
    prod = {(one, one): [(one, 1)], (one, g): [(g, 1)],
            (one, x): [(x, 1)], (one, w): [(w, 1)],
            (g, one): [(g, 1)], (x, one): [(x, 1)], (w, one): [(w, 1)],
            (g, g): [(one, 1)],
            (g, x): [(w, -1)], (g, w): [(x, -1)],
            (x, g): [(w, 1)], (w, g): [(x, 1)],
            (x, x): [], (x, w): [], (w, x): [], (w, w): []}
    mult = _cube(field, 4, prod)
    comult = [[[field.zero] * 4 for _ in range(4)] for _ in range(4)]
    for i, terms in {one: [(one, one, 1)], g: [(g, g, 1)],
                     x: [(x, g, 1), (one, x, 1)],
                     w: [(w, one, 1), (g, w, 1)]}.items():
        for (j, k, v) in terms:
            comult[i][j][k] = field.coerce(v)
    counit = [1, 1, 0, 0]
    unit = [1, 0, 0, 0]
    antipode = LinearMap(field, sp, sp, [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ])
    ida = identity(field, sp)
    bial = HomBialgebra(
        HomAlgebra(field, sp, mult, unit, ida),
        HomCoalgebra(field, sp, comult, counit, ida),
    )
    return HomHopf(bial, antipode)


def sweedler_sign_map(field=QQ) -> LinearMap:
    """The involutive bialgebra automorphism fixing 1, g and negating x, gx."""
    sp = Space(("1", "g", "x", "gx"))
    return LinearMap(field, sp, sp, [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]])


def sweedler_h4_hom(field=QQ) -> HomHopf:
    """The twisted Sweedler algebra: the sign twist of the classical one.

    Tables: 1.x = -x, x g = -(g x), Delta(x) = -x (x) g + 1 (x) (-x),
    S(x) = -gx, structure map diag(1, 1, -1, -1).
    """
    return yau_twist(classical_sweedler_h4(field), sweedler_sign_map(field))


def cyclic_group_hopf(order: int, field=QQ) -> HomHopf:
    """The group algebra of the cyclic group of the given order, as a
    classical Hopf algebra (every basis vector group-like)."""
    if order < 1:
        raise ValueError("order must be positive")
    sp = Space(tuple("e" if i == 0 else f"c{i}" for i in range(order)))
    zero, one = field.zero, field.one
    mult = [[[zero] * order for _ in range(order)] for _ in range(order)]
    comult = [[[zero] * order for _ in range(order)] for _ in range(order)]
    for i in range(order):
        for j in range(order):
            mult[i][j][(i + j) % order] = one
        comult[i][i][i] = one
    unit = [one] + [zero] * (order - 1)
    counit = [one] * order
    antipode = LinearMap(field, sp, sp, [
        [one if i == (-j) % order else zero for j in range(order)]
        for i in range(order)
    ])
    ida = identity(field, sp)
    bial = HomBialgebra(
        HomAlgebra(field, sp, mult, unit, ida),
        HomCoalgebra(field, sp, comult, counit, ida),
    )
    return HomHopf(bial, antipode)


def cyclic_inversion_map(order: int, field=QQ) -> LinearMap:
    """The group automorphism c -> c^{-1} of the cyclic group algebra."""
    sp = cyclic_group_hopf(order, field).space
    zero, one = field.zero, field.one
    return LinearMap(field, sp, sp, [
        [one if i == (-j) % order else zero for j in range(order)]
        for i in range(order)
    ])


def involutive_automorphisms(name: str, field=QQ):
    """The involutive bialgebra automorphisms shipped for each classical
    corpus Hopf algebra (identity included)."""
    if name == "sweedler":
        h = classical_sweedler_h4(field)
        return h, [identity(field, h.space), sweedler_sign_map(field)]
    if name == "c2":
        h = cyclic_group_hopf(2, field)
        return h, [identity(field, h.space)]
    if name == "c4":
        h = cyclic_group_hopf(4, field)
        return h, [identity(field, h.space), cyclic_inversion_map(4, field)]
    raise KeyError(f"no classical corpus algebra named {name!r}")


def dual_numbers_algebra(field=QQ) -> HomAlgebra:
    """K[y]/(y^2) with the identity structure map."""
    sp = Space(("1", "y"))
    mult = _cube(field, 2, {(0, 0): [(0, 1)], (0, 1): [(1, 1)],
                            (1, 0): [(1, 1)], (1, 1): []})
    return HomAlgebra(field, sp, mult, [1, 0], identity(field, sp))


def dual_numbers_coalgebra(field=QQ) -> HomCoalgebra:
    """The same space with the primitive-style coproduct
    Delta(y) = y (x) 1 + 1 (x) y."""
    sp = Space(("1", "y"))
    comult = [[[field.zero] * 2 for _ in range(2)] for _ in range(2)]
    comult[0][0][0] = field.one
    comult[1][1][0] = field.one
    comult[1][0][1] = field.one
    return HomCoalgebra(field, sp, comult, [1, 0], identity(field, sp))


def example24_action(field=QQ) -> ModuleAction:
    """The worked action of the twisted Sweedler algebra on the dual numbers:
    h.1 = eps(h)1, 1.y = y, g.y = y, x.y = 0, gx.y = 0."""
    h = sweedler_h4_hom(field)
    a = dual_numbers_algebra(field)
    one, g, x, w = range(4)
    act = [[[field.zero] * 2 for _ in range(2)] for _ in range(4)]
    for hb, eps in ((one, 1), (g, 1), (x, 0), (w, 0)):
        act[hb][0][0] = field.coerce(eps)
    act[one][1][1] = field.one
    act[g][1][1] = field.one
    return ModuleAction(h.bialgebra, a, act)


def example24_sigma(n, field=QQ, values_in="unit",
                    orientation="first_in_columns") -> Cocycle:
    """The worked cocycle table with parameter n.

    Group-like block all ones; the x block holds n/2 with signs.  Two
    interpretation knobs survive from the source table:

    * ``values_in``: whether the x-block entries are multiples of 1_A
      ("unit") or of y ("y");
    * ``orientation``: whether the printed rows index the first argument
      ("first_in_rows") or the second ("first_in_columns").

    The shipped default (scalar multiples of 1_A, first argument running
    over the columns) is the unique reading under which the cocycle passes
    the crossed-product conditions; the goldens pin this.
    """
    if field.characteristic == 2:
        raise CharTwoError("the sigma table needs 2 to be invertible")
    h = sweedler_h4_hom(field)
    a = dual_numbers_algebra(field)
    half_n = field.coerce(n) / field.coerce(2)
    one, g, x, w = range(4)
    printed = [[field.zero] * 4 for _ in range(4)]
    for i in (one, g):
        for j in (one, g):
            printed[i][j] = field.one
    for i in (x, w):
        printed[i][x] = half_n
        printed[i][w] = -half_n
    slot = 1 if values_in == "y" else 0
    cube = [[[field.zero] * 2 for _ in range(4)] for _ in range(4)]
    for i in range(4):
        for j in range(4):
            v = printed[i][j] if orientation == "first_in_rows" else printed[j][i]
            if v:
                # group-like block entries always mean multiples of 1_A
                target = 0 if (i in (one, g) and j in (one, g)) else slot
                cube[i][j][target] = v
    return Cocycle(h.bialgebra, a, cube)


def example24_spec(n, m: int, k: int, field=QQ, values_in="unit",
                   orientation="first_in_columns") -> CrossedProductSpec:
    """The worked crossed-product spec: dual numbers over the twisted
    Sweedler algebra with the table action and the parameter-n cocycle."""
    return CrossedProductSpec(
        algebra=dual_numbers_algebra(field),
        hopf=sweedler_h4_hom(field),
        action=example24_action(field),
        cocycle=example24_sigma(n, field, values_in, orientation),
        m=m,
        k=k,
    )


def example24_trivial_coaction_datum(n, m: int, k: int, field=QQ) -> BiproductSpec:
    """The worked crossed product extended by the primitive coproduct on the
    dual numbers and the trivial coaction.  Not a valid biproduct datum (the
    goldens record which conditions fail); used to exercise negatives."""
    crossed = example24_spec(n, m, k, field)
    coalg = dual_numbers_coalgebra(field)
    return BiproductSpec(
        crossed=crossed,
        coalgebra=coalg,
        coaction=trivial_coaction(crossed.hopf_bialgebra, coalg),
    )


def classical_radford_datum(field=QQ) -> BiproductSpec:
    """A fully classical biproduct datum (all structure maps the identity,
    trivial cocycle): the dual numbers with the primitive coproduct over the
    order-two group algebra, sign action t.y = -y and diagonal coaction
    rho(y) = t (x) y.  Its biproduct is the four-dimensional Sweedler algebra."""
    h = cyclic_group_hopf(2, field)
    a = dual_numbers_algebra(field)
    coalg = dual_numbers_coalgebra(field)
    act = [[[field.zero] * 2 for _ in range(2)] for _ in range(2)]
    act[0][0][0] = field.one          # e.1 = 1
    act[0][1][1] = field.one          # e.y = y
    act[1][0][0] = field.one          # t.1 = 1
    act[1][1][1] = -field.one         # t.y = -y
    action = ModuleAction(h.bialgebra, a, act)
    coact = [[[field.zero] * 2 for _ in range(2)] for _ in range(2)]
    coact[0][0][0] = field.one        # rho(1) = e (x) 1
    coact[1][1][1] = field.one        # rho(y) = t (x) y
    coaction = Coaction(h.bialgebra, coalg, coact)
    crossed = CrossedProductSpec(
        algebra=a, hopf=h, action=action,
        cocycle=trivial_cocycle(h.bialgebra, a), m=0, k=-1)
    return BiproductSpec(crossed=crossed, coalgebra=coalg, coaction=coaction)


def sweedler_sign_datum(field=QQ, m: int = 0, k: int = -1) -> BiproductSpec:
    """A genuinely twisted biproduct datum over the twisted Sweedler algebra:
    dual numbers with the primitive coproduct, sign action g.y = -y (x and gx
    act as zero), diagonal coaction rho(y) = g (x) y, trivial cocycle."""
    h = sweedler_h4_hom(field)
    a = dual_numbers_algebra(field)
    coalg = dual_numbers_coalgebra(field)
    one, g, x, w = range(4)
    act = [[[field.zero] * 2 for _ in range(2)] for _ in range(4)]
    for hb, eps in ((one, 1), (g, 1), (x, 0), (w, 0)):
        act[hb][0][0] = field.coerce(eps)
    act[one][1][1] = field.one
    act[g][1][1] = -field.one
    action = ModuleAction(h.bialgebra, a, act)
    coact = [[[field.zero] * 2 for _ in range(4)] for _ in range(2)]
    coact[0][one][0] = field.one      # rho(1) = 1 (x) 1
    coact[1][g][1] = field.one        # rho(y) = g (x) y
    coaction = Coaction(h.bialgebra, coalg, coact)
    crossed = CrossedProductSpec(
        algebra=a, hopf=h, action=action,
        cocycle=trivial_cocycle(h.bialgebra, a), m=m, k=k)
    return BiproductSpec(crossed=crossed, coalgebra=coalg, coaction=coaction)


def scalar_line_hopf(field=QQ) -> HomHopf:
    """The ground field as a one-dimensional Hopf algebra."""
    sp = Space(("u",))
    one = field.one
    ida = identity(field, sp)
    bial = HomBialgebra(
        HomAlgebra(field, sp, [[[one]]], [one], ida),
        HomCoalgebra(field, sp, [[[one]]], [one], ida),
    )
    return HomHopf(bial, ida)


def trivial_biproduct_datum(h: HomHopf, m: int = 0, k: int = -1,
                            field=QQ) -> BiproductSpec:
    """A one-dimensional A over any H: the biproduct is H itself up to the
    unit leg, and every compatibility condition holds for any (m, k)."""
    line = scalar_line_hopf(field)
    a = line.algebra
    coalg = line.coalgebra
    crossed = CrossedProductSpec(
        algebra=a, hopf=h,
        action=trivial_action(h.bialgebra, a),
        cocycle=trivial_cocycle(h.bialgebra, a), m=m, k=k)
    return BiproductSpec(
        crossed=crossed, coalgebra=coalg,
        coaction=trivial_coaction(h.bialgebra, coalg))


def dual_numbers_antipode(field=QQ) -> LinearMap:
    """The convolution inverse of the identity on the primitive dual
    numbers: 1 -> 1, y -> -y."""
    sp = Space(("1", "y"))
    return LinearMap(field, sp, sp, [[1, 0], [0, -1]])


# --------------------------------------------------------------------------
# registry and goldens


class CorpusEntry:
    """A named instance with runnable checks and frozen expected verdicts."""

    def __init__(self, name, payload, checks, expected):
        self.name = name
        self.payload = payload
        self.checks = checks        # check name -> thunk returning CheckReport
        self.expected = expected    # check name -> "pass" | "fail"

    def run(self) -> dict:
        return {name: thunk().verdict for name, thunk in self.checks.items()}

    def run_reports(self) -> dict:
        return {name: thunk() for name, thunk in self.checks.items()}

    def __repr__(self):
        return f"CorpusEntry({self.name!r})"


def _hopf_checks(h: HomHopf) -> dict:
    return {
        "hom_bialgebra": lambda: check_hom_bialgebra(h.bialgebra),
        "antipode": lambda: check_antipode(h),
    }


def _crossed_checks(spec: CrossedProductSpec) -> dict:
    from .admissible import check_cocycle_inverse_identities
    from .convact import check_cocycle_inverse, cocycle_inverse

    def inverse_roundtrip():
        return check_cocycle_inverse(cocycle_inverse(spec.cocycle))

    def inverse_identities():
        completed = CrossedProductSpec(
            algebra=spec.algebra, hopf=spec.hopf, action=spec.action,
            cocycle=cocycle_inverse(spec.cocycle), m=spec.m, k=spec.k)
        return check_cocycle_inverse_identities(completed)

    return {
        "cocycle_conditions": lambda: check_cocycle_conditions(spec),
        "crossed_product_algebra":
            lambda: check_hom_algebra(crossed_product(spec)),
        "weak_module_algebra":
            lambda: check_weak_module_algebra(spec.action),
        "hom_module": lambda: check_hom_module(spec.action),
        "cocycle_inverse_roundtrip": inverse_roundtrip,
        "cocycle_inverse_identities": inverse_identities,
    }


def _biproduct_checks(spec: BiproductSpec, expect_valid: bool,
                      antipodes=None) -> dict:
    from .admissible import (
        admissible_isomorphism,
        canonical_system,
        check_admissible,
        check_canonical_actions,
    )
    from .constructions import (
        biproduct_antipode,
        check_sigma_antipode,
        check_twisted_comodule_cocycle,
    )
    from .convact import convolution_inverse, convolve
    from .exactlin import compose, maps_equal

    checks = {
        "algebra_half": lambda: check_hom_algebra(spec.crossed.algebra),
        "coalgebra_half": lambda: check_hom_coalgebra(spec.coalgebra),
        "biproduct_conditions": lambda: check_biproduct_conditions(spec),
        "comodule_coalgebra":
            lambda: check_comodule_coalgebra(spec.coaction),
        "weak_module_algebra":
            lambda: check_weak_module_algebra(spec.crossed.action),
        "twisted_comodule_cocycle":
            lambda: check_twisted_comodule_cocycle(spec),
    }
    if not expect_valid:
        return checks

    def built():
        return build_biproduct(spec)

    def iso_check():
        from .admissible import IsoCheckFailError, NotAdmissibleError

        try:
            return admissible_isomorphism(canonical_system(built()))[2]
        except (IsoCheckFailError, NotAdmissibleError) as e:
            return e.report

    checks["biproduct_bialgebra"] = lambda: built().bialgebra_check
    checks["admissible_system"] = \
        lambda: check_admissible(canonical_system(built()))
    checks["canonical_actions"] = \
        lambda: check_canonical_actions(canonical_system(built()))
    checks["biproduct_isomorphism"] = iso_check

    if antipodes is not None:
        s_h, s_a = antipodes

        def antipode_check():
            from .constructions import PreconditionFailError

            b = built()
            try:
                s = biproduct_antipode(spec, s_h, s_a)
            except PreconditionFailError as e:
                return e.report
            bb = b.bialgebra
            e = compose(bb.algebra.unit_map, bb.coalgebra.counit_map)
            idb = identity(spec.field, bb.space)
            solved = convolution_inverse(idb, bb.coalgebra, bb.algebra)
            return CheckReport.combine("biproduct_antipode", [
                maps_equal(convolve(s, idb, bb.coalgebra, bb.algebra), e,
                           "antipode_left_inverse"),
                maps_equal(convolve(idb, s, bb.coalgebra, bb.algebra), e,
                           "antipode_right_inverse"),
                maps_equal(compose(s, bb.alpha), compose(bb.alpha, s),
                           "antipode_structure_commute"),
                maps_equal(s, solved, "antipode_matches_solved_inverse"),
            ])

        checks["biproduct_antipode"] = antipode_check
        checks["sigma_antipode"] = lambda: check_sigma_antipode(
            spec.crossed.hopf_bialgebra, spec.crossed.cocycle, s_h)
    return checks


def _twist_agreement_check(field) -> CheckReport:
    from .exactlin import maps_equal

    twisted = sweedler_h4_hom(field)
    direct = classical_sweedler_h4(field)
    sign = sweedler_sign_map(field)
    rebuilt = yau_twist(direct, sign)
    same = (rebuilt.algebra.mult == twisted.algebra.mult
            and rebuilt.coalgebra.comult == twisted.coalgebra.comult
            and rebuilt.algebra.unit == twisted.algebra.unit
            and rebuilt.coalgebra.counit == twisted.coalgebra.counit)
    return CheckReport.combine("twist_reproduces_tables", [
        CheckReport("structure_constants_match", same),
        maps_equal(rebuilt.antipode, twisted.antipode, "antipode_match"),
        maps_equal(rebuilt.alpha, twisted.alpha, "structure_map_match"),
    ])


def corpus_entries(field=QQ) -> list:
    """All registry entries with their golden verdicts attached."""
    goldens = load_goldens()
    entries = []

    def add(name, payload, checks):
        entries.append(CorpusEntry(
            name, payload, checks, goldens.get("entries", {}).get(name, {})))

    h4c = classical_sweedler_h4(field)
    add("h4_classical", h4c, _hopf_checks(h4c))

    h4t = sweedler_h4_hom(field)
    checks = dict(_hopf_checks(h4t))
    checks["twist_reproduces_tables"] = lambda: _twist_agreement_check(field)
    checks["structure_map_involution"] = lambda: CheckReport(
        "structure_map_involution",
        power(h4t.alpha, 2) == identity(field, h4t.space))
    add("h4_twisted", h4t, checks)

    c2 = cyclic_group_hopf(2, field)
    add("c2_group", c2, _hopf_checks(c2))
    c4 = cyclic_group_hopf(4, field)
    add("c4_group", c4, _hopf_checks(c4))
    c4t = yau_twist(c4, cyclic_inversion_map(4, field))
    add("c4_inversion_twist", c4t, _hopf_checks(c4t))

    duals = dual_numbers_algebra(field)
    add("dual_numbers", duals, {
        "hom_algebra": lambda: check_hom_algebra(duals),
        "hom_coalgebra":
            lambda: check_hom_coalgebra(dual_numbers_coalgebra(field)),
    })

    for n in (0, 1, 2):
        spec = example24_spec(n, 0, -1, field)
        add(f"example24_n{n}", spec, _crossed_checks(spec))

    bad = example24_trivial_coaction_datum(1, 0, -1, field)
    add("example24_trivial_coaction_n1", bad,
        _biproduct_checks(bad, expect_valid=False))

    rad = classical_radford_datum(field)
    add("radford_classical", rad, _biproduct_checks(
        rad, expect_valid=True,
        antipodes=(rad.crossed.hopf.antipode, dual_numbers_antipode(field))))

    sign = sweedler_sign_datum(field)
    add("sweedler_sign_biproduct", sign, _biproduct_checks(
        sign, expect_valid=True,
        antipodes=(sign.crossed.hopf.antipode, dual_numbers_antipode(field))))

    triv_h4 = trivial_biproduct_datum(sweedler_h4_hom(field), field=field)
    add("trivial_over_h4", triv_h4,
        _biproduct_checks(triv_h4, expect_valid=True))
    triv_c2 = trivial_biproduct_datum(cyclic_group_hopf(2, field), field=field)
    add("trivial_over_c2", triv_c2,
        _biproduct_checks(triv_c2, expect_valid=True))

    return entries


def load_goldens() -> dict:
    try:
        text = resources.files("homhopf").joinpath("goldens.json").read_text()
    except FileNotFoundError:
        return {}
    return json.loads(text)


def selftest(field=QQ):
    """Re-run every registered check and compare against the goldens.
    Returns (all_matched, {entry: {check: (expected, got)}})."""
    results = {}
    ok = True
    for entry in corpus_entries(field):
        got = entry.run()
        cell = {}
        for name, verdict in got.items():
            expected = entry.expected.get(name)
            cell[name] = (expected, verdict)
            if expected != verdict:
                ok = False
        results[entry.name] = cell
    return ok, results


_MUTABLE_COMPONENTS = {
    "mult", "comult", "act", "sigma", "coact",
}


def mutate(entry: CorpusEntry, site, delta) -> CorpusEntry:
    """Perturb one structure constant of an entry's payload; the mutated
    entry carries rebuilt checks and no goldens.

    ``site`` is (component, i, j, k) with component one of mult / comult /
    act / sigma / coact, resolved against the payload's type."""
    component, i, j, k = site
    if component not in _MUTABLE_COMPONENTS:
        raise ValueError(f"unknown component {component!r}")
    payload = entry.payload
    field = payload.field

    d = field.coerce(delta)
    if not d:
        raise ValueError("mutation delta must be nonzero")

    def bump(cube):
        if not (0 <= i < len(cube) and 0 <= j < len(cube[i])
                and 0 <= k < len(cube[i][j])):
            raise IndexError(f"site {site} out of range")
        new = [[list(plane) for plane in slab] for slab in cube]
        new[i][j][k] = new[i][j][k] + d
        return new

    if isinstance(payload, HomHopf):
        if component == "mult":
            alg = HomAlgebra(field, payload.space, bump(payload.algebra.mult),
                             payload.algebra.unit, payload.alpha)
            new = HomHopf(HomBialgebra(alg, payload.coalgebra), payload.antipode)
        elif component == "comult":
            coa = HomCoalgebra(field, payload.space,
                               bump(payload.coalgebra.comult),
                               payload.coalgebra.counit, payload.alpha)
            new = HomHopf(HomBialgebra(payload.algebra, coa), payload.antipode)
        else:
            raise ValueError(f"{component!r} not mutable on a Hopf payload")
        return CorpusEntry(f"{entry.name}~{component}[{i},{j},{k}]",
                           new, _hopf_checks(new), {})

    if isinstance(payload, CrossedProductSpec):
        new = mutate_crossed_spec(payload, component, (i, j, k), d)
        return CorpusEntry(f"{entry.name}~{component}[{i},{j},{k}]",
                           new, _crossed_checks(new), {})

    if isinstance(payload, BiproductSpec):
        if component == "coact":
            co = Coaction(payload.coaction.coacting, payload.coaction.target,
                          bump(payload.coaction.coact))
            new = BiproductSpec(payload.crossed, payload.coalgebra, co)
        elif component == "comult":
            coa = HomCoalgebra(field, payload.coalgebra.space,
                               bump(payload.coalgebra.comult),
                               payload.coalgebra.counit, payload.coalgebra.gamma)
            co = Coaction(payload.coaction.coacting, coa, payload.coaction.coact)
            new = BiproductSpec(payload.crossed, coa, co)
        else:
            crossed = mutate_crossed_spec(payload.crossed, component,
                                          (i, j, k), d)
            new = BiproductSpec(crossed, payload.coalgebra, payload.coaction)
        return CorpusEntry(f"{entry.name}~{component}[{i},{j},{k}]",
                           new, _biproduct_checks(new, expect_valid=False), {})

    raise TypeError(f"cannot mutate payload of type {type(payload).__name__}")


def mutate_crossed_spec(spec: CrossedProductSpec, component: str, site,
                        delta) -> CrossedProductSpec:
    """One-site perturbation of a crossed-product spec's cocycle or action."""
    i, j, k = site
    field = spec.field

    def bump(cube):
        if not (0 <= i < len(cube) and 0 <= j < len(cube[i])
                and 0 <= k < len(cube[i][j])):
            raise IndexError(f"site {site} out of range")
        new = [[list(plane) for plane in slab] for slab in cube]
        new[i][j][k] = new[i][j][k] + delta
        return new

    if component == "sigma":
        cocycle = Cocycle(spec.cocycle.source, spec.cocycle.target,
                          bump(spec.cocycle.sigma))
        return CrossedProductSpec(spec.algebra, spec.hopf, spec.action,
                                  cocycle, spec.m, spec.k)
    if component == "act":
        action = ModuleAction(spec.action.acting, spec.action.target,
                              bump(spec.action.act))
        return CrossedProductSpec(spec.algebra, spec.hopf, action,
                                  spec.cocycle, spec.m, spec.k)
    raise ValueError(f"{component!r} not mutable on a crossed-product spec")


# --------------------------------------------------------------------------
# .struct exports


def export_hopf(h: HomHopf, name: str = "H") -> str:
    from .structfile import DocumentBuilder

    builder = DocumentBuilder(h.field)
    builder.add_hom_hopf(name, h)
    return builder.to_text()


def _add_crossed_bundles(builder, spec: CrossedProductSpec, prefix: str = ""):
    a_name = builder.add_hom_algebra(f"{prefix}A", spec.algebra)
    if isinstance(spec.hopf, HomHopf):
        h_name = builder.add_hom_hopf(f"{prefix}H", spec.hopf)
    else:
        h_name = builder.add_hom_bialgebra(f"{prefix}H", spec.hopf)
    hs = builder.space_name(spec.hopf_bialgebra.space)
    asp = builder.space_name(spec.algebra.space)
    builder.add_tensor(f"{prefix}action_tensor", spec.action.act,
                       [hs, asp, asp])
    builder.add_bundle(f"{prefix}action", {
        "type": "module_action", "acting": h_name, "target": a_name,
        "tensor": f"{prefix}action_tensor"})
    builder.add_tensor(f"{prefix}sigma_tensor", spec.cocycle.sigma,
                       [hs, hs, asp])
    builder.add_bundle(f"{prefix}sigma", {
        "type": "cocycle", "source": h_name, "target": a_name,
        "tensor": f"{prefix}sigma_tensor"})
    builder.add_bundle(f"{prefix}crossed", {
        "type": "crossed_spec", "algebra": a_name, "hopf": h_name,
        "action": f"{prefix}action", "cocycle": f"{prefix}sigma",
        "m": spec.m, "k": spec.k})
    return f"{prefix}crossed", h_name, a_name


def export_crossed_spec(spec: CrossedProductSpec) -> str:
    from .structfile import DocumentBuilder

    builder = DocumentBuilder(spec.field)
    _add_crossed_bundles(builder, spec)
    return builder.to_text()


def export_biproduct_spec(spec: BiproductSpec,
                          algebra_antipode: LinearMap | None = None) -> str:
    from .structfile import DocumentBuilder

    builder = DocumentBuilder(spec.field)
    crossed_name, h_name, _ = _add_crossed_bundles(builder, spec.crossed)
    coalg_name = builder.add_hom_coalgebra("A_coalgebra", spec.coalgebra)
    hs = builder.space_name(spec.crossed.hopf_bialgebra.space)
    asp = builder.space_name(spec.coalgebra.space)
    builder.add_tensor("coaction_tensor", spec.coaction.coact, [asp, hs, asp])
    builder.add_bundle("coaction", {
        "type": "coaction", "coacting": h_name, "target": coalg_name,
        "tensor": "coaction_tensor"})
    body = {"type": "biproduct_spec", "crossed": crossed_name,
            "coalgebra": coalg_name, "coaction": "coaction"}
    if algebra_antipode is not None:
        builder.add_map("algebra_antipode", algebra_antipode)
        body["algebra_antipode"] = "algebra_antipode"
    builder.add_bundle("biproduct", body)
    return builder.to_text()


def shipped_documents(field=QQ) -> dict:
    """The .struct files shipped with the package, keyed by filename."""
    return {
        "h4.struct": export_hopf(sweedler_h4_hom(field), "H4"),
        "h4_classical.struct":
            export_hopf(classical_sweedler_h4(field), "H4_classical"),
        "example24.struct": export_crossed_spec(example24_spec(1, 0, -1, field)),
        "radford.struct": export_biproduct_spec(
            classical_radford_datum(field), dual_numbers_antipode(field)),
        "sign_biproduct.struct": export_biproduct_spec(
            sweedler_sign_datum(field), dual_numbers_antipode(field)),
    }
