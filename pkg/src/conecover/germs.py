"""Embedded resolution of plane-curve germs by point blow-ups.

A germ is given by one or more polynomials in two affine variables, each
vanishing at the origin; the list is treated as the components of a reduced
curve germ (components must be squarefree and pairwise coprime).

The engine blows up points until the total transform (curve plus exceptional
divisors) has normal crossings, keeping for every exceptional divisor E the
discrepancy k_E and the multiplicity of the total transform of each component
along E.  From that ledger we read off log-canonical thresholds and the
log-canonicity of weighted pairs; the multiplicity tree drives the
branch-point taxonomy used by the cover constructions:

* negligible -- a double point, or a triple point all of whose infinitely
  near points are at most double;
* elliptic_deg1 -- a [3,3]-point: a triple point with one infinitely near
  triple point, everything after at most double;
* elliptic_deg2 -- a quadruple point with all infinitely near points at most
  double;
* not_slc -- anything of log-canonical threshold below 1/2;
* other_lc -- log canonical at 1/2 but outside the patterns above.

Only blow-ups at rational centers are performed.  A point whose resolution
would continue at an irrational center raises IrrationalSingularityError
instead of guessing.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .linsys import TangentDir
from .roots import rational_roots, univariate_coeffs
from .wpoly import WPoly, is_squarefree, poly_gcd

SMOOTH = "smooth"
NEGLIGIBLE = "negligible"
ELLIPTIC_DEG1 = "elliptic_deg1"
ELLIPTIC_DEG2 = "elliptic_deg2"
ELLIPTIC_DEG4 = "elliptic_deg4"
QUARTER_POINT = "quarter_point"
OTHER_LC = "other_lc"
NOT_SLC = "not_slc"


class GermError(ValueError):
    pass


class IrrationalSingularityError(GermError):
    """Resolution would need a blow-up at a non-rational point."""


@dataclass
class BlowupRecord:
    """One exceptional divisor: discrepancy, total-transform multiplicities."""

    k: int
    m_comp: tuple
    strict_mult: int
    depth: int

    @property
    def m(self):
        return sum(self.m_comp)


@dataclass
class Node:
    """A blown-up infinitely near point (the root is depth 0)."""

    strict_mult: int
    depth: int
    direction: object  # TangentDir from the parent, None at the root
    record: int  # index into the ledger, -1 when the root was never blown up
    children: list = field(default_factory=list)


@dataclass
class Resolution:
    components: list
    root: Node
    ledger: list
    multiplicity_sequence: list

    def lct(self):
        """Log-canonical threshold: min over the ledger of (k+1)/m, capped at 1."""
        best = Fraction(1)
        for rec in self.ledger:
            best = min(best, Fraction(rec.k + 1, rec.m))
        return best

    def log_canonical(self, coefficients):
        """Is (plane, sum c_i * C_i) log canonical at this point?

        coefficients: one rational per component, in input order.
        """
        coefficients = [Fraction(c) for c in coefficients]
        if len(coefficients) != len(self.components):
            raise ValueError("need one coefficient per component")
        if any(c > 1 for c in coefficients):
            return False
        for rec in self.ledger:
            load = sum(c * m for c, m in zip(coefficients, rec.m_comp))
            if load > rec.k + 1:
                return False
        return True

    def deeper_mults(self):
        out = []

        def walk(node):
            for ch in node.children:
                out.append(ch.strict_mult)
                walk(ch)

        walk(self.root)
        return out


@dataclass
class SingularityReport:
    verdict: str
    multiplicity_sequence: list
    lct: Fraction
    tangent: object = None  # TangentDir of the [3,3] direction when relevant
    point: object = None

    def is_elliptic(self):
        return self.verdict in (ELLIPTIC_DEG1, ELLIPTIC_DEG2, ELLIPTIC_DEG4)

    def elliptic_degree(self):
        return {ELLIPTIC_DEG1: 1, ELLIPTIC_DEG2: 2, ELLIPTIC_DEG4: 4}.get(self.verdict)


def multiplicity(f):
    """Order of vanishing at the origin of the chart."""
    if f.is_zero():
        raise GermError("zero germ")
    return f.order()


def _binary_form_data(f):
    """Tangent cone of f as (univariate coeffs g(t) = phi(1,t), mult of u|phi)."""
    phi = f.lowest_part()
    m = f.order()
    u, v = f.ring.variables
    iu, iv = 0, 1
    coeffs = [Fraction(0)] * (m + 1)
    for e, c in phi.terms.items():
        coeffs[e[iv]] = c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    k_inf = m - (len(coeffs) - 1)
    return coeffs, k_inf


def _is_squarefree_binary(f):
    """Squarefree test for the tangent cone of f, including infinity."""
    g, k_inf = _binary_form_data(f)
    if k_inf >= 2:
        return False
    if len(g) <= 1:
        return True
    gp = [c * k for k, c in enumerate(g)][1:]
    return poly_gcd_univ_degree(g, gp) == 0


def poly_gcd_univ_degree(a, b):
    """Degree of gcd of two univariate coefficient lists over Q."""

    def strip(c):
        c = list(c)
        while c and c[-1] == 0:
            c.pop()
        return c

    a, b = strip(a), strip(b)
    while b:
        # remainder of a by b
        a = [Fraction(x) for x in a]
        while len(a) >= len(b) and a:
            f = a[-1] / b[-1]
            shift = len(a) - len(b)
            for i, c in enumerate(b):
                a[shift + i] -= f * c
            a = strip(a)
        a, b = b, a
    return len(a) - 1


class _PointState:
    __slots__ = ("comps", "exc_x", "exc_y", "depth")

    def __init__(self, comps, exc_x, exc_y, depth):
        self.comps = comps  # list of (component index, germ WPoly vanishing at 0)
        self.exc_x = exc_x  # ledger index of the exceptional along {u=0}, or None
        self.exc_y = exc_y  # along {v=0}, or None
        self.depth = depth


def _finished(state):
    """Total transform at this point is smooth or a normal crossing."""
    n_exc = (state.exc_x is not None) + (state.exc_y is not None)
    if not state.comps:
        return True
    m = sum(p.order() for _, p in state.comps)
    total = m + n_exc
    if total <= 1:
        return True
    if total > 2:
        return False
    germring = state.comps[0][1].ring
    f = germring.one()
    for _, p in state.comps:
        f = f * p.lowest_part()
    u, v = germring.gens()
    if state.exc_x is not None:
        f = f * u
    if state.exc_y is not None:
        f = f * v
    return _is_squarefree_binary(f)


def resolve(components, max_depth=60):
    """Resolve the reduced germ defined by the component list.

    components: WPoly germs in one common two-variable ring, each vanishing
    at the origin.  Each must be squarefree and they must be pairwise coprime
    (a non-reduced germ would make the blow-up process diverge).
    """
    components = list(components)
    if not components:
        raise GermError("no components")
    ring = components[0].ring
    if ring.nvars != 2:
        raise GermError("germ ring must have exactly two variables")
    for p in components:
        if p.ring != ring:
            raise GermError("components live in different rings")
        if p.is_zero():
            raise GermError("zero component")
        if p.order() < 1:
            raise GermError("component does not pass through the origin")
        if not is_squarefree(p):
            raise GermError("non-reduced germ: component is not squarefree")
    for i in range(len(components)):
        for j in range(i + 1, len(components)):
            if poly_gcd(components[i], components[j]).total_degree() > 0:
                raise GermError("non-reduced germ: components share a factor")

    ledger = []
    mult_seq = []
    n = len(components)
    u, v = ring.gens()

    root_mult = sum(p.order() for p in components)
    root = Node(strict_mult=root_mult, depth=0, direction=None, record=-1)
    mult_seq.append(root_mult)

    def blow(state, node):
        if _finished(state):
            return
        if state.depth >= max_depth:
            raise GermError("resolution did not terminate (non-reduced input?)")
        orders = {idx: p.order() for idx, p in state.comps}
        m_strict = sum(orders.values())
        k = 1
        m_comp = [0] * n
        for idx, d in orders.items():
            m_comp[idx] += d
        for exc in (state.exc_x, state.exc_y):
            if exc is not None:
                k += ledger[exc].k
                for i in range(n):
                    m_comp[i] += ledger[exc].m_comp[i]
        rec_index = len(ledger)
        ledger.append(
            BlowupRecord(k=k, m_comp=tuple(m_comp), strict_mult=m_strict, depth=state.depth)
        )
        node.record = rec_index

        f = ring.one()
        for _, p in state.comps:
            f = f * p.lowest_part()
        g, k_inf = _binary_form_data(f)

        # Directions needing further work: multiple tangent-cone roots, and
        # the directions where the strict transform of an old exceptional
        # meets the new one with a curve branch present.  Simple rational or
        # irrational directions away from old exceptionals are already normal
        # crossings and are never visited.
        finite_targets = []
        if len(g) > 1:
            rep_deg = _repeated_part_degree(g)
            if rep_deg > 0:
                mult_roots = [(r, m) for r, m in rational_roots(g) if m >= 2]
                if sum(m - 1 for _, m in mult_roots) < rep_deg:
                    raise IrrationalSingularityError(
                        "multiple tangent direction with no rational witness"
                    )
                finite_targets.extend(r for r, _ in mult_roots)
            if state.exc_y is not None and g[0] == 0 and Fraction(0) not in finite_targets:
                finite_targets.append(Fraction(0))
        want_infinite = k_inf >= 2 or (k_inf >= 1 and state.exc_x is not None)

        for t0 in sorted(finite_targets):
            sub = {ring.variables[0]: u, ring.variables[1]: u * (v + t0)}
            comps = []
            for idx, p in state.comps:
                q = p.substitute(sub).exact_div(u ** orders[idx])
                if q.coefficient((0, 0)) == 0:
                    comps.append((idx, q))
            new_state = _PointState(
                comps=comps,
                exc_x=rec_index,
                exc_y=state.exc_y if t0 == 0 else None,
                depth=state.depth + 1,
            )
            _descend(new_state, node, TangentDir(t0, 1))
        if want_infinite:
            sub = {ring.variables[0]: u * v, ring.variables[1]: v}
            comps = []
            for idx, p in state.comps:
                q = p.substitute(sub).exact_div(v ** orders[idx])
                if q.coefficient((0, 0)) == 0:
                    comps.append((idx, q))
            new_state = _PointState(
                comps=comps,
                exc_x=state.exc_x,
                exc_y=rec_index,
                depth=state.depth + 1,
            )
            _descend(new_state, node, TangentDir(1, 0))

    def _descend(new_state, parent, direction):
        if _finished(new_state):
            return
        child = Node(
            strict_mult=sum(p.order() for _, p in new_state.comps),
            depth=new_state.depth,
            direction=direction,
            record=-1,
        )
        parent.children.append(child)
        mult_seq.append(child.strict_mult)
        blow(new_state, child)

    state0 = _PointState(
        comps=list(enumerate(components)), exc_x=None, exc_y=None, depth=0
    )
    blow(state0, root)
    return Resolution(
        components=components, root=root, ledger=ledger, multiplicity_sequence=mult_seq
    )


def _repeated_part_degree(g):
    """Degree of gcd(g, g'): total multiplicity excess of the roots of g."""
    gp = [c * k for k, c in enumerate(g)][1:]
    return poly_gcd_univ_degree(g, gp)


def lct(f):
    """Log-canonical threshold of the reduced germ f at the origin."""
    return resolve([f]).lct()


def resolution_tree(f):
    """Full resolution of a single reduced germ."""
    return resolve([f])


def classify_components(components):
    """SingularityReport for the reduced germ given by a component list."""
    res = resolve(components)
    m0 = res.root.strict_mult
    if m0 == 0:
        raise GermError("germ does not vanish at the origin")
    deeper = res.deeper_mults()
    threshold = res.lct()
    verdict = None
    tangent = None
    if threshold < Fraction(1, 2):
        # the taxonomy below presumes the branch germ of an lc pair
        verdict = NOT_SLC
    elif m0 == 1:
        verdict = SMOOTH
    elif m0 == 2:
        verdict = NEGLIGIBLE
    elif m0 == 3:
        if all(d <= 2 for d in deeper):
            verdict = NEGLIGIBLE
        else:
            first_triples = [ch for ch in res.root.children if ch.strict_mult == 3]
            rest = [
                d
                for ch in res.root.children
                for d in _subtree_mults(ch, skip_root=ch in first_triples)
            ]
            if len(first_triples) == 1 and all(d <= 2 for d in rest):
                verdict = ELLIPTIC_DEG1
                tangent = first_triples[0].direction
    elif m0 == 4:
        if all(d <= 2 for d in deeper):
            verdict = ELLIPTIC_DEG2
    if verdict is None:
        verdict = OTHER_LC
    return SingularityReport(
        verdict=verdict,
        multiplicity_sequence=list(res.multiplicity_sequence),
        lct=threshold,
        tangent=tangent,
    )


def _subtree_mults(node, skip_root):
    out = [] if skip_root else [node.strict_mult]
    for ch in node.children:
        out.extend(_subtree_mults(ch, skip_root=False))
    return out


def classify_branch_point(f):
    """Classification of a single reduced germ polynomial."""
    return classify_components([f])


def is_ordinary_germ(components):
    """All tangent directions distinct: the tangent cone is squarefree."""
    ring = components[0].ring
    f = ring.one()
    for p in components:
        f = f * p.lowest_part()
    return _is_squarefree_binary(f)


def blow_up(f):
    """One blow-up of the germ f: list of (direction, strict transform).

    Returns the strict transform in every chart point where it meets the
    exceptional line at a rational direction, plus the infinite-direction
    chart; directions with irrational tangent-cone roots are not listed.
    The exceptional multiplicity (the order of f) is divided out.
    """
    if f.is_zero() or f.order() < 1:
        raise GermError("germ must vanish at the origin")
    ring = f.ring
    u, v = ring.gens()
    m = f.order()
    g, k_inf = _binary_form_data(f.lowest_part())
    out = []
    if len(g) > 1:
        for r, _ in rational_roots(g):
            sub = {ring.variables[0]: u, ring.variables[1]: u * (v + r)}
            out.append((TangentDir(r, 1), f.substitute(sub).exact_div(u**m)))
    if k_inf >= 1:
        sub = {ring.variables[0]: u * v, ring.variables[1]: v}
        out.append((TangentDir(1, 0), f.substitute(sub).exact_div(v**m)))
    return out
