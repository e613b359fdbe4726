'''
Registry of the laws the suite checks. Every law names the corpus kind it ranges
over and a check that returns None on success or a counterexample payload.

Groups: ch1 (filter algebra, rings, factorial model, Z[√-5]), ch2 (filtrum),
ch3 (topological filters). Laws without a group run under every selection.
'''

import itertools
import random
from typing import Callable, Optional

import attr
from more_itertools import chunked

from filtrum import config
from filtrum.characterize import characterize_filtrum_space
from filtrum.errors import ValidationError
from filtrum.factorial import (FactorialElement, PrimeSubsetFilter, coprime, generator,
                               intersect_filters, member, member_by_powers, minimal_elements,
                               minimal_elements_pairwise, principal_filter as factorial_filter,
                               radical_contains, regenerate)
from filtrum.filt import (basis_set, build_filtrum, filtrum_space,
                          fixfilter_homeomorphism, fixfilters, is_open, open_sets, product_homeomorphism,
                          pullback, pullback_map, pushforward, ultrafilter_subspace)
from filtrum.filters import (Filter, all_filters, generate, intersection_of, is_filter, is_reduced,
                             maximal_filters_avoiding, nilpotent, ultrafilter_criterion, ultrafilters)
from filtrum.monoid import (bit, compose, divides, find_isomorphism, fraction_monoid, free_truncated_monoid,
                            identity_hom, is_subset, members, nonzerodivisors, principal_quotient,
                            product_monoid, validate_hom)
from filtrum.quadratic import QuadInt, Member, divides as quad_divides, member_bounded, norm_refutes
from filtrum.ring import (all_ideals, boolean_ideal_filter_correspondence, filter_complement_decomposition,
                          fix_modulo_ideal, fixness_modulo, minimal_prime_ultrafilter_duality,
                          minimal_primes, minimal_primes_over, mult_monoid, nilradical, prime_ideals,
                          smallest_fix_filter)
from filtrum.space import (check_homeomorphism, closure, has_clopen_basis, is_connected, is_dense,
                           is_hausdorff, is_quasicompact, is_t0, is_totally_disconnected, subspace)
from filtrum.topo import (all_filters_fix, all_top_filters, closed_map_criterion, convergence_points,
                          dense_opens, embed, embedding_into_consistent, filtrum_extension_is_embedding,
                          initial_topology, irreducible_filter_closed_set_bijection, is_consistent_top,
                          is_filterhaft, is_irreducible_filter, is_irreducible_filter_exhaustive,
                          is_quasicompact_filter, is_sober, neighborhood_filter, neighborhood_filters_fix,
                          point_filter, pullback_filter, pushforward_filter, sobrify, sobrify_idempotent,
                          top_ultrafilter_criterion, top_ultrafilters)

SMALL = 8


@attr.s(frozen=True, auto_attribs=True)
class Law:
    id: str
    group: Optional[str]
    kind: str
    anchor: str
    check: Callable
    applies: Callable = attr.ib(default=lambda value: True)


REGISTRY = []


def law(id, group, kind, anchor, applies=None):
    def register(check):
        REGISTRY.append(Law(id=id, group=group, kind=kind, anchor=anchor, check=check,
                            applies=applies or (lambda value: True)))
        return check
    return register


def selected(groups):
    '''Laws whose group is in groups, plus the ungrouped ones.'''
    return [entry for entry in REGISTRY if entry.group is None or entry.group in groups]


def _small(M):
    return M.size <= SMALL


def _has_zero(M):
    return M.zero is not None and M.zero != M.one


# -- ch1: monoids and filters --------------------------------------------------

@law('monoid.units-in-every-filter', 'ch1', 'monoids',
     'the unit group is a filter contained in every filter')
def units_in_every_filter(M):
    if not is_filter(M, M.units):
        return {'units': members(M.units)}
    for F in all_filters(M):
        if not is_subset(M.units, F.members):
            return {'filter': F.elements()}


@law('monoid.divides-preorder', 'ch1', 'monoids', 'divisibility is reflexive and transitive')
def divides_preorder(M):
    for f in range(M.size):
        if not divides(M, f, f):
            return {'reflexive': f}
    for f, g, h in itertools.product(range(M.size), repeat=3):
        if divides(M, f, g) and divides(M, g, h) and not divides(M, f, h):
            return {'transitive': [f, g, h]}


@law('monoid.fraction-at-units', 'ch1', 'monoids',
     'inverting the units yields a monoid isomorphic to the original', applies=_small)
def fraction_at_units(M):
    fractions, _ = fraction_monoid(M, M.units)
    if find_isomorphism(M, fractions) is None:
        return {'fraction_size': fractions.size}


@law('monoid.principal-quotient-filters', 'ch1', 'monoids',
     'identifying elements with equal principal filters preserves the filter lattice')
def principal_quotient_filters(M):
    quotient, h = principal_quotient(M)
    if not h.is_surjective:
        return {'reason': 'quotient map not surjective'}
    if len(all_filters(M)) != len(all_filters(quotient)):
        return {'filters': len(all_filters(M)), 'quotient_filters': len(all_filters(quotient))}
    for f in range(M.size):
        image = pushforward(h, Filter(M, M.saturate(bit(f))))
        if image.members != quotient.saturate(bit(h(f))):
            return {'element': f}


@law('monoid.product-projections', 'ch1', 'pairs', 'the product projections are monoid homs')
def product_projections(pair):
    P, p1, p2 = product_monoid(*pair)
    for k, p in enumerate((p1, p2), 1):
        try:
            validate_hom(P, p.target, list(p.map))
        except ValidationError as exc:
            return {'projection': k, 'error': exc.to_dict()}


@law('filters.closure-equals-oracle', 'ch1', 'monoids',
     'closure enumeration and the subset scan find the same filters',
     applies=lambda M: M.size <= config.current().oracle_limit)
def closure_equals_oracle(M):
    closure_family = all_filters(M, method='closure').masks
    oracle_family = all_filters(M, method='oracle').masks
    if closure_family != oracle_family:
        return {'closure': [members(m) for m in closure_family],
                'oracle': [members(m) for m in oracle_family]}


def _test_sets(M):
    if M.size <= SMALL:
        return range(1 << M.size)
    return [0] + [bit(x) for x in range(M.size)] + [bit(x) | bit(y) for x, y in
                                                    itertools.combinations(range(M.size), 2)]


@law('filters.generate-is-meet', 'ch1', 'monoids',
     'the generated filter is the intersection of all filters containing the set')
def generate_is_meet(M):
    family = all_filters(M).masks
    for S in _test_sets(M):
        meet = intersection_of(M, [F for F in family if is_subset(S, F)])
        if generate(M, S).members != meet:
            return {'set': members(S)}


@law('filters.intersection-closed', 'ch1', 'monoids', 'the intersection of two filters is a filter')
def intersection_closed(M):
    family = all_filters(M).masks
    for F, G in itertools.combinations(family, 2):
        if not is_filter(M, F & G):
            return {'left': members(F), 'right': members(G)}


@law('filters.consistent-below-ultrafilter', 'ch1', 'monoids',
     'every consistent filter lies in some ultrafilter', applies=_has_zero)
def consistent_below_ultrafilter(M):
    ultra = ultrafilters(M).masks
    for F in all_filters(M):
        if M.zero not in F and not any(is_subset(F.members, U) for U in ultra):
            return {'filter': F.elements()}


@law('filters.reduced-nonzerodivisors', 'ch1', 'monoids',
     'in a reduced monoid the non-zero-divisors are the intersection of all ultrafilters',
     applies=lambda M: _has_zero(M) and is_reduced(M))
def reduced_nonzerodivisors(M):
    meet = intersection_of(M, ultrafilters(M).masks)
    if meet != nonzerodivisors(M):
        return {'meet': members(meet), 'nonzerodivisors': members(nonzerodivisors(M))}


@law('filters.distinguished-sets-are-filters', 'ch1', 'monoids',
     'units and non-zero-divisors form filters')
def distinguished_sets_are_filters(M):
    if not is_filter(M, M.units):
        return {'units': members(M.units)}
    if M.zero is not None and not is_filter(M, nonzerodivisors(M)):
        return {'nonzerodivisors': members(nonzerodivisors(M))}


@law('filters.avoiding-zero-are-ultrafilters', 'ch1', 'monoids',
     'the filters maximal among those avoiding zero are the ultrafilters', applies=_has_zero)
def avoiding_zero(M):
    avoiding = maximal_filters_avoiding(M, M.units, bit(M.zero)).masks
    if avoiding != ultrafilters(M).masks:
        return {'avoiding': [members(m) for m in avoiding]}
    for U in avoiding:
        if not ultrafilter_criterion(M, U):
            return {'ultrafilter': members(U)}


# -- ch1: rings ------------------------------------------------------------------

@law('ring.complement-decomposition', 'ch1', 'rings',
     'a complement of a filter is a union of primes, and complements of unions of primes are filters')
def complement_decomposition(R):
    for F in all_filters(mult_monoid(R)):
        primes = filter_complement_decomposition(R, F)
        union = 0
        for p in primes:
            union |= p.members
        if union != R.full & ~F.members:
            return {'filter': F.elements()}


@law('ring.avoiding-ideal-minimal-primes', 'ch1', 'rings',
     'filters maximal among those avoiding an ideal are the complements of the minimal primes over it')
def avoiding_ideal(R):
    M = mult_monoid(R)
    for a in all_ideals(R):
        if R.one in a:
            continue
        avoiding = sorted(R.full & ~F.members for F in maximal_filters_avoiding(M, M.units, a.members))
        primes = sorted(p.members for p in minimal_primes_over(R, a))
        if avoiding != primes:
            return {'ideal': a.elements(), 'complements': [members(m) for m in avoiding]}


@law('ring.minimal-prime-ultrafilter-duality', 'ch1', 'rings',
     'ultrafilters and minimal primes correspond by complementation',
     applies=lambda R: R.size > 1)
def minimal_prime_duality(R):
    certificate = minimal_prime_ultrafilter_duality(R)
    if not certificate:
        return certificate.witness


def _is_boolean(R):
    return all(R.mul[x][x] == x for x in range(R.size))


@law('ring.boolean-correspondence', 'ch1', 'rings',
     'in a boolean ring e ↦ 1 - e exchanges ideals and filters, a filter is an ultrafilter iff it '
     'holds exactly one of e and 1 - e, and every filter is an intersection of ultrafilters',
     applies=_is_boolean)
def boolean_correspondence(R):
    certificate = boolean_ideal_filter_correspondence(R)
    if not certificate:
        return certificate.witness


@law('ring.prime-complement-fix', 'ch1', 'rings',
     'a prime complement is fix modulo an ideal iff the ideal lies in the prime')
def prime_complement_fix(R):
    for a in all_ideals(R):
        for p in prime_ideals(R):
            if fix_modulo_ideal(R, a, p.complement()) != is_subset(a.members, p.members):
                return {'ideal': a.elements(), 'prime': p.elements()}


@law('ring.nilradical-all-fix', 'ch1', 'rings', 'every filter is fix modulo the nilradical')
def nilradical_all_fix(R):
    nil = nilradical(R)
    for F in all_filters(mult_monoid(R)):
        if not fix_modulo_ideal(R, nil, F):
            return {'filter': F.elements()}


@law('ring.smallest-fix-filter', 'ch1', 'rings',
     'F(1 + a) is the smallest filter fix modulo a')
def smallest_fix(R):
    for a in all_ideals(R):
        base = smallest_fix_filter(R, a)
        fixed = [F for F in all_filters(mult_monoid(R)) if fix_modulo_ideal(R, a, F)]
        if base not in fixed or not all(base <= F for F in fixed):
            return {'ideal': a.elements(), 'filter': base.elements()}


@law('ring.all-fix-iff-prime-complements-fix', 'ch1', 'rings',
     'all filters are fix modulo an ideal iff all prime complements are')
def all_fix_iff_primes(R):
    for a in all_ideals(R):
        verdict = fixness_modulo(R, a)
        if verdict.all_filters != verdict.prime_complements:
            return {'ideal': a.elements(), 'all_filters': verdict.all_filters}


# -- ch1: factorial model and Z[√-5] ---------------------------------------------

@law('factorial.prime-subset-bijection', 'ch1', 'global',
     'filters of the free monoid correspond to subsets of the primes')
def prime_subset_bijection(_):
    for nprimes in range(1, 5):
        M, vectors = free_truncated_monoid(nprimes, 2)
        family = all_filters(M, cap=M.size)
        supports = set()
        for F in family:
            support = frozenset(i for v_id in F.elements() for i, e in enumerate(vectors[v_id]) if e)
            expected = {k for k, v in enumerate(vectors) if {i for i, e in enumerate(v) if e} <= support}
            if set(F.elements()) != expected:
                return {'primes': nprimes, 'filter': F.elements()}
            supports.add(support)
        if len(family) != 2 ** nprimes or len(supports) != len(family):
            return {'primes': nprimes, 'filters': len(family)}


def _random_elements(rng, nprimes, count, top=3):
    return [FactorialElement(tuple(rng.randint(0, top) for _ in range(nprimes))) for _ in range(count)]


@law('factorial.supports', 'ch1', 'global',
     'principal filters, intersections, coprimality and regeneration reduce to supports')
def supports(_):
    rng = random.Random(1729)
    for nprimes in range(1, 5):
        for f, g, h in chunked(_random_elements(rng, nprimes, 60), 3):
            F, G = factorial_filter(f), factorial_filter(g)
            if factorial_filter(f * g) != PrimeSubsetFilter(F.primes | G.primes):
                return {'product': [f.exponents, g.exponents]}
            meet = intersect_filters([F, G])
            if factorial_filter(generator(meet, nprimes)) != meet:
                return {'generator': sorted(meet.primes)}
            if coprime(f, g) != (not meet.primes):
                return {'coprime': [f.exponents, g.exponents]}
            if regenerate(F, nprimes) != F:
                return {'regenerate': f.exponents}
            in_powers = member_by_powers(h, f, 4) is not None
            if member(h, F) != in_powers and max(h.exponents) <= 3:
                return {'membership': [h.exponents, f.exponents]}
            if radical_contains(h, [f, g]) != (member(h, F) and member(h, G)):
                return {'radical': [h.exponents, f.exponents, g.exponents]}


@law('factorial.minimal-elements', 'ch1', 'global',
     'the projection algorithm finds the same minimal elements as pairwise comparison')
def dickson(_):
    rng = random.Random(6)
    for _ in range(500):
        n = rng.randint(1, 5)
        vectors = [tuple(rng.randint(0, 10) for _ in range(n)) for _ in range(rng.randint(1, 12))]
        if minimal_elements(vectors) != minimal_elements_pairwise(vectors):
            return {'vectors': vectors}


ROOT = QuadInt(0, 1)


@law('quadratic.identities', 'ch1', 'global',
     'the stated products and membership witnesses hold exactly in Z[√-5]')
def quadratic_identities(_):
    a = 1 + ROOT
    checks = [
        (a * a == QuadInt(-4, 2), 'square'),
        ((2 - ROOT) * (2 + ROOT) == QuadInt(9), 'nine'),
        (a * a == -2 * (2 - ROOT), 'square-as-multiple'),
        (a.norm() == 6, 'norm'),
        (member_bounded(QuadInt(2), a, 4) == Member(2, QuadInt(-2, 1)), 'two-in-F(1+r)'),
        (member_bounded(2 - ROOT, QuadInt(3), 4) == Member(2, 2 + ROOT), '2-r-in-F(3)'),
        (member_bounded(2 - ROOT, a, 4) == Member(2, QuadInt(-2)), '2-r-in-F(1+r)'),
    ]
    failed = [label for ok, label in checks if not ok]
    if failed:
        return {'failed': failed}
    for n in range(1, 21):
        if not norm_refutes(a, QuadInt(2), n) or quad_divides(a, QuadInt(2) ** n):
            return {'power': n}


@law('quadratic.norm', 'ch1', 'global',
     'the norm is multiplicative and divisibility implies divisibility of norms')
def quadratic_norm(_):
    rng = random.Random(5)
    for _ in range(1000):
        x = QuadInt(rng.randint(-100, 100), rng.randint(-100, 100))
        y = QuadInt(rng.randint(-100, 100), rng.randint(-100, 100))
        if (x * y).norm() != x.norm() * y.norm():
            return {'x': [x.a, x.b], 'y': [y.a, y.b]}
        if y and quad_divides(y, x) and x.norm() % y.norm():
            return {'divides': [[y.a, y.b], [x.a, x.b]]}


# -- ch2: the filtrum ---------------------------------------------------------------

def _filtrum_applies(M):
    return M.size <= SMALL


@law('filtrum.basis-order', 'ch2', 'monoids',
     'D(f) ⊆ D(g) iff F(g) ⊆ F(f)', applies=_filtrum_applies)
def basis_order(M):
    Phi = build_filtrum(M)
    for f, g in itertools.product(range(M.size), repeat=2):
        left = is_subset(basis_set(Phi, f), basis_set(Phi, g))
        right = is_subset(M.saturate(bit(g)), M.saturate(bit(f)))
        if left != right:
            return {'f': f, 'g': g}


@law('filtrum.opens', 'ch2', 'monoids',
     'open sets are the unions of basis sets; any open around F(f) contains D(f); '
     'an open is a basis set iff it has a least point', applies=_filtrum_applies)
def filtrum_opens(M):
    Phi = build_filtrum(M)
    opens = set(open_sets(Phi))
    for U in range(1 << len(Phi)):
        if is_open(Phi, U) != (U in opens):
            return {'set': members(U)}
    basis = set(Phi.basis)
    for f in range(M.size):
        p = Phi.principal_point[f]
        for O in opens:
            if O >> p & 1 and not is_subset(Phi.basis[f], O):
                return {'element': f, 'open': members(O)}
    for U in opens:
        least = any(is_subset(U, Phi.up[i]) for i in members(U))
        if (U in basis) != (least and U != 0):
            return {'open': members(U)}


@law('filtrum.t0-unique-closed-point', 'ch2', 'monoids',
     'the filtrum is T0 and the unit filter is its only closed point', applies=_filtrum_applies)
def t0_closed_point(M):
    Phi = build_filtrum(M)
    X = filtrum_space(Phi)
    if not is_t0(X):
        return {'reason': 'not T0'}
    closed = [i for i in range(X.size) if closure(X, bit(i)) == bit(i)]
    if closed != [Phi.point(M.units)]:
        return {'closed': [Phi.labels[i] for i in closed]}


@law('filtrum.quasicompact-connected', 'ch2', 'monoids',
     'the filtrum is quasicompact and connected', applies=_filtrum_applies)
def quasicompact_connected(M):
    X = filtrum_space(build_filtrum(M))
    if not is_quasicompact(X) or not is_connected(X):
        return {'quasicompact': is_quasicompact(X), 'connected': is_connected(X)}


@law('filtrum.consistent-subspace', 'ch2', 'monoids',
     'the consistent filters form a closed set; D(f) misses it iff f is nilpotent',
     applies=lambda M: _filtrum_applies(M) and _has_zero(M))
def consistent_subspace_law(M):
    Phi = build_filtrum(M)
    X = filtrum_space(Phi)
    if not X.is_closed(Phi.consistent_points):
        return {'reason': 'consistent points not closed'}
    for f in range(M.size):
        if (Phi.basis[f] & Phi.consistent_points == 0) != nilpotent(M, f):
            return {'element': f}


@law('filtrum.ultrafilter-subspace', 'ch2', 'monoids',
     'the ultrafilters form a dense Hausdorff subspace with a clopen basis',
     applies=lambda M: _filtrum_applies(M) and _has_zero(M))
def ultrafilter_subspace_law(M):
    Phi = build_filtrum(M)
    X = filtrum_space(Phi)
    Y, _ = ultrafilter_subspace(Phi, X)
    if not is_hausdorff(Y) or not has_clopen_basis(Y):
        return {'hausdorff': is_hausdorff(Y), 'clopen_basis': has_clopen_basis(Y)}
    if not is_dense(X, Phi.ultrafilter_points, within=Phi.consistent_points):
        return {'reason': 'not dense in the consistent subspace'}


def _hom_applies(h):
    return h.source.size <= 12 and h.target.size <= 12


@law('filtrum.round-trip-monotone', 'ch2', 'homs',
     'F ⊆ h⁻¹F(h(F)) and F(h(h⁻¹G)) ⊆ G', applies=_hom_applies)
def round_trip(h):
    for F in all_filters(h.source):
        if not F <= pullback(h, pushforward(h, F)):
            return {'source': F.elements()}
    for G in all_filters(h.target):
        if not pushforward(h, pullback(h, G)) <= G:
            return {'target': G.elements()}


@law('filtrum.pullback-continuous', 'ch2', 'homs',
     'the preimage of D(f) under G ↦ h⁻¹G is D(h(f))', applies=_hom_applies)
def pullback_continuous(h):
    Phi_s, Phi_t = build_filtrum(h.source), build_filtrum(h.target)
    mapping = pullback_map(h, Phi_s, Phi_t)
    for f in range(h.source.size):
        pre = sum(1 << j for j, i in enumerate(mapping) if Phi_s.basis[f] >> i & 1)
        if pre != Phi_t.basis[h(f)]:
            return {'element': f}


@law('filtrum.pushforward-functorial', 'ch2', 'homs',
     'pushing forward along a composite is pushing forward twice', applies=_hom_applies)
def pushforward_functorial(h):
    _, q = principal_quotient(h.target)
    for psi in (identity_hom(h.target), q):
        composite = compose(psi, h)
        for F in all_filters(h.source):
            if pushforward(composite, F) != pushforward(psi, pushforward(h, F)):
                return {'filter': F.elements()}


@law('filtrum.fixfilter-homeomorphism', 'ch2', 'homs',
     'pushforward maps the source fixfilters homeomorphically onto the target fixfilters',
     applies=_hom_applies)
def fixfilter_homeo(h):
    result = fixfilters(h)
    if not result.certificate:
        return result.certificate.witness
    certificate = fixfilter_homeomorphism(h)
    if not certificate:
        return certificate.witness


@law('filtrum.surjective-target-fix', 'ch2', 'homs',
     'along a surjective hom every target filter is fix',
     applies=lambda h: _hom_applies(h) and h.is_surjective)
def surjective_target_fix(h):
    result = fixfilters(h)
    if len(result.target) != len(all_filters(h.target)):
        return {'fix': len(result.target)}


@law('filtrum.all-fix-iff-principal-fix', 'ch2', 'homs',
     'all source filters are fix iff all principal filters are', applies=_hom_applies)
def all_fix_iff_principal(h):
    M = h.source
    every = all(pullback(h, pushforward(h, F)) == F for F in all_filters(M))
    principal = all(pullback(h, pushforward(h, Filter(M, M.saturate(bit(f))))) == Filter(M, M.saturate(bit(f)))
                    for f in range(M.size))
    if every != principal:
        return {'all': every, 'principal': principal}


@law('filtrum.localization', 'ch2', 'monoids',
     'the fixfilters of M → M_F are the filters containing F, and Filt M_F has as many points',
     applies=_filtrum_applies)
def localization(M):
    family = all_filters(M)
    for F in family:
        fractions, h = fraction_monoid(M, F)
        above = [G.members for G in family if F <= G]
        fixed = [G.members for G in fixfilters(h).source]
        if fixed != above or len(all_filters(fractions)) != len(above):
            return {'filter': F.elements(), 'fix': [members(m) for m in fixed]}
        if not all(h(f) in [u for u in range(fractions.size) if fractions.units >> u & 1]
                   for f in F.elements()):
            return {'filter': F.elements(), 'reason': 'denominators not inverted'}


@law('filtrum.principal-quotient-homeomorphism', 'ch2', 'monoids',
     'Filt M is homeomorphic to the filtrum of its principal quotient', applies=_filtrum_applies)
def principal_quotient_homeo(M):
    quotient, h = principal_quotient(M)
    Phi, Phi_q = build_filtrum(M), build_filtrum(quotient)
    mapping = pullback_map(h, Phi, Phi_q)
    certificate = check_homeomorphism(filtrum_space(Phi_q), filtrum_space(Phi), mapping)
    if not certificate:
        return certificate.witness


@law('filtrum.product-homeomorphism', 'ch2', 'pairs',
     'Filt(M1 × M2) is homeomorphic to Filt M1 × Filt M2')
def product_homeo(pair):
    M1, M2 = pair
    result = product_homeomorphism(M1, M2)
    if not result.certificate:
        return result.certificate.witness
    if len(result.pairs) != len(all_filters(M1)) * len(all_filters(M2)):
        return {'filters': len(result.pairs)}


@law('filtrum.characterization-round-trip', 'ch2', 'monoids',
     'a filtrum is recognised as one, and the reconstruction is a homeomorphism',
     applies=lambda M: M.size <= 16 and len(all_filters(M)) <= 12)
def characterization_round_trip(M):
    result = characterize_filtrum_space(filtrum_space(build_filtrum(M)))
    if not result:
        return {'condition': result.condition, 'witness': result.witness}
    if not result.certificate:
        return result.certificate.witness


@law('ring.minimal-prime-subspace', 'ch2', 'rings',
     'the minimal-prime points form a dense Hausdorff totally disconnected subspace of the consistent subspace',
     applies=lambda R: R.size <= 12)
def minimal_prime_subspace(R):
    Phi = build_filtrum(mult_monoid(R))
    X = filtrum_space(Phi)
    points = sum(1 << Phi.point(p.complement()) for p in minimal_primes(R))
    Y, _ = subspace(X, points)
    if not is_hausdorff(Y) or not is_totally_disconnected(Y):
        return {'hausdorff': is_hausdorff(Y)}
    if not is_dense(X, points, within=Phi.consistent_points):
        return {'reason': 'not dense'}


# -- ch3: topological filters ------------------------------------------------------

def _space_applies(X):
    return len(X.opens) <= 32


@law('topo.quasicompact-filters', 'ch3', 'spaces',
     'every quasicompact filter converges and every consistent quasicompact filter is irreducible',
     applies=_space_applies)
def quasicompact_filters(X):
    for F in all_top_filters(X):
        if not is_quasicompact_filter(F):
            continue
        if not convergence_points(F):
            return {'filter': F.label(), 'reason': 'no convergence point'}
        if is_consistent_top(F) and not is_irreducible_filter(F):
            return {'filter': F.label(), 'reason': 'not irreducible'}


@law('topo.irreducible-definition', 'ch3', 'spaces',
     'the union test for irreducibility agrees with the subfamily definition',
     applies=lambda X: len(X.opens) <= min(10, config.current().max_subfamily_scan))
def irreducible_definition(X):
    for F in all_top_filters(X):
        if is_irreducible_filter(F) != is_irreducible_filter_exhaustive(F):
            return {'filter': F.label()}


@law('topo.quasicompact-intersection', 'ch3', 'spaces',
     'every filter is the intersection of the quasicompact filters containing it',
     applies=_space_applies)
def quasicompact_intersection(X):
    filters = all_top_filters(X)
    qc = [G.filter.members for G in filters if is_quasicompact_filter(G)]
    for F in filters:
        meet = -1
        for G in qc:
            if is_subset(F.filter.members, G):
                meet &= G
        if meet & F.filter.carrier.full != F.filter.members:
            return {'filter': F.label()}


@law('topo.convergence', 'ch3', 'spaces',
     'the convergence points of F are the x with U(x) ⊆ F', applies=_space_applies)
def convergence(X):
    for F in all_top_filters(X):
        expected = sum(1 << x for x in range(X.size) if point_filter(X, x).filter <= F.filter)
        if convergence_points(F) != expected:
            return {'filter': F.label()}


@law('topo.neighborhood-filters-of-subsets', 'ch3', 'spaces',
     'on a sober space every filter is U(T) for T the points whose neighbourhood filter contains it',
     applies=lambda X: _space_applies(X) and is_sober(X))
def neighborhood_filters_of_subsets(X):
    for F in all_top_filters(X):
        T = sum(1 << x for x in range(X.size) if F.filter <= point_filter(X, x).filter)
        if neighborhood_filter(X, T) != F:
            return {'filter': F.label()}


@law('topo.irreducible-closed-bijection', 'ch3', 'spaces',
     'irreducible filters correspond to non-empty irreducible closed sets', applies=_space_applies)
def irreducible_closed(X):
    certificate = irreducible_filter_closed_set_bijection(X)
    if not certificate:
        return certificate.witness


@law('topo.ultrafilters', 'ch3', 'spaces',
     'an ultrafilter meets every open it omits with a disjoint member, and the intersection of all '
     'ultrafilters is the set of dense opens', applies=_space_applies)
def top_ultrafilters_law(X):
    ultra = top_ultrafilters(X)
    ultra_masks = {U.filter.members for U in ultra}
    for F in all_top_filters(X):
        if top_ultrafilter_criterion(F) != (F.filter.members in ultra_masks):
            return {'filter': F.label()}
    meet = set(X.opens)
    for U in ultra:
        meet &= set(U.opens)
    if sorted(meet) != sorted(dense_opens(X)):
        return {'meet': [members(U) for U in sorted(meet)]}


@law('topo.embedding', 'ch3', 'spaces',
     'x ↦ U(x) is continuous, initial and dense in the consistent filters; injective iff T0',
     applies=_space_applies)
def embedding(X):
    e = embed(X)
    if not (e.continuous and e.initial and e.dense) or e.injective != is_t0(X):
        return {'continuous': e.continuous, 'initial': e.initial, 'dense': e.dense,
                'injective': e.injective}


@law('topo.embedding-filterhaft', 'ch3', 'spaces',
     'the embedding into the consistent filters is filterhaft', applies=lambda X: X.size <= 3)
def embedding_filterhaft(X):
    if not is_filterhaft(embedding_into_consistent(X)):
        return {'reason': 'not filterhaft'}


@law('topo.sobrification', 'ch3', 'spaces',
     "X' is sober, Top(X) ≅ Top(X') as lattices, sobrification is idempotent, sober spaces are fixed",
     applies=_space_applies)
def sobrification(X):
    result = sobrify(X)
    if not result.lattice:
        return result.lattice.witness
    if not is_sober(result.space):
        return {'reason': "X' not sober"}
    if not sobrify_idempotent(X):
        return {'reason': 'not idempotent'}
    if is_sober(X) and not check_homeomorphism(X, result.space, result.map):
        return {'reason': 'sober space moved'}


@law('topo.characterization-consistent', 'ch3', 'spaces',
     'a successful characterization carries a verified homeomorphism', applies=_space_applies)
def characterization_consistent(X):
    result = characterize_filtrum_space(X)
    if result and not result.certificate:
        return result.certificate.witness


def _subsets(n):
    return range(1 << n)


@law('topo.pushforward', 'ch3', 'maps',
     'φ(U(T)) = U(φ(T)); pushforward keeps quasicompact and irreducible filters; '
     'G ⊆ φ(φ⁻¹G) and φ⁻¹(φ(F)) ⊆ F')
def pushforward_law(phi):
    X, Y = phi.source, phi.target
    for T in _subsets(X.size):
        if pushforward_filter(phi, neighborhood_filter(X, T)) != neighborhood_filter(Y, phi.image(T)):
            return {'set': members(T)}
    for F in all_top_filters(X):
        G = pushforward_filter(phi, F)
        if is_quasicompact_filter(F) and not is_quasicompact_filter(G):
            return {'filter': F.label(), 'reason': 'quasicompactness lost'}
        if is_irreducible_filter(F) and not is_irreducible_filter(G):
            return {'filter': F.label(), 'reason': 'irreducibility lost'}
    for G in all_top_filters(Y):
        if not G.filter <= pushforward_filter(phi, pullback_filter(phi, G)).filter:
            return {'filter': G.label(), 'side': 'target'}
    for F in all_top_filters(X):
        if not pullback_filter(phi, pushforward_filter(phi, F)).filter <= F.filter:
            return {'filter': F.label(), 'side': 'source'}


@law('topo.all-fix-iff-initial', 'ch3', 'maps',
     'all filters on the source are fix iff all neighbourhood filters are iff the source carries the initial topology')
def all_fix_iff_initial(phi):
    values = (all_filters_fix(phi), neighborhood_filters_fix(phi), initial_topology(phi))
    if len(set(values)) != 1:
        return {'all_fix': values[0], 'neighborhoods_fix': values[1], 'initial': values[2]}


@law('topo.closed-map-criterion', 'ch3', 'maps',
     'φ is closed iff φ⁻¹U(y) = U(φ⁻¹(y)) for every y')
def closed_map(phi):
    verdict = closed_map_criterion(phi)
    if verdict.closed != verdict.criterion:
        return {'closed': verdict.closed, 'criterion': verdict.criterion}


@law('topo.surjective-filterhaft', 'ch3', 'maps', 'surjective continuous maps are filterhaft',
     applies=lambda phi: phi.is_surjective)
def surjective_filterhaft(phi):
    if not is_filterhaft(phi):
        return {'reason': 'not filterhaft'}


def _dense_embedding(phi):
    return (phi.is_injective and initial_topology(phi) and is_t0(phi.target)
            and is_dense(phi.target, phi.image(phi.source.full)))


@law('topo.filtrum-extension', 'ch3', 'maps',
     'for a filterhaft dense embedding into a T0 space, y ↦ φ⁻¹U(y) is an embedding',
     applies=_dense_embedding)
def filtrum_extension_law(phi):
    if is_filterhaft(phi) and not filtrum_extension_is_embedding(phi):
        return {'reason': 'extension not an embedding'}


# -- documents ------------------------------------------------------------------------

@law('fixture.expectations', None, 'documents',
     'a fixture document agrees with the counts it declares')
def expectations(doc):
    expect = doc.expect
    if not expect:
        return None
    observed = {}
    if doc.kind in ('monoid', 'ring'):
        M = doc.monoid
        if 'filters' in expect:
            observed['filters'] = len(all_filters(M))
        if 'ultrafilters' in expect:
            observed['ultrafilters'] = len(ultrafilters(M))
        if 'points' in expect or 'opens' in expect:
            Phi = build_filtrum(M)
            observed['points'] = len(Phi)
            if 'opens' in expect:
                observed['opens'] = len(open_sets(Phi))
    elif doc.kind == 'space':
        X = doc.value
        observed['points'] = X.size
        observed['opens'] = len(X.opens)
        if 'filters' in expect:
            observed['filters'] = len(all_top_filters(X))
        if 'ultrafilters' in expect:
            observed['ultrafilters'] = len(top_ultrafilters(X))
    mismatched = {key: {'expected': expect[key], 'observed': observed.get(key)}
                  for key in sorted(expect) if observed.get(key) != expect[key]}
    return mismatched or None

