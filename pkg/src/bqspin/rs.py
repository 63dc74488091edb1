"""The vector-spinor system: component operators, constraints, commutator
curvature, the coupled equation with parameter g, and its contraction and
reduction chain.

A vector-spinor field is a 4-tuple of biquaternion fields indexed by a
tensor index.  The component operators are

    pi_mu(X) = (d_mu X) nu - e phi_mu X,       d_mu = (d/dt, -d/dx_n)

with phi_mu the potential components (phi0, phi_n), and they recombine into
the minimally coupled spinor operator and its conjugate:

    Pibar      = eps_bar^mu pi_mu = (d/dt - i e.d)[.] nu - e phi.bar [.]
    Pibar_star = eps^mu      pi_mu = (d/dt + i e.d)[.] nu - e phi     [.]

Every identity in this module is verified exactly on polynomial fields in
the rational backend; the tests double as the committed derivation chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .biquaternion import Biquaternion, Frame
from .errors import DegenerateMass, OffShell
from .exactlinalg import nullspace, rank
from .fields import (
    ExternalField,
    Field,
    Momentum,
    nabla_bar,
    nabla_bar_from_right,
    plane_wave_field,
    wedge,
)
from .scalars import gr


def eps_units(exact=True):
    """The bireal unit 4-tuples: lower, upper, and their bar partners."""
    one = Biquaternion.one(exact)
    i_unit = gr(0, 1) if exact else 1j
    ie = [Biquaternion.vector(*v, exact=exact) * i_unit
          for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    lower = [one] + ie
    upper = [one] + [-u for u in ie]
    return {
        "lower": lower,
        "upper": upper,
        "bar_lower": [u.bar() for u in lower],
        "bar_upper": [u.bar() for u in upper],
    }


ETA = (1, -1, -1, -1)


def _d_lower(f: Field, mu: int) -> Field:
    return f.dt() if mu == 0 else -f.dx(mu)


def _d_upper(f: Field, mu: int) -> Field:
    return f.dt() if mu == 0 else f.dx(mu)


@dataclass(frozen=True)
class RSContext:
    """Shared data for the vector-spinor operators."""

    ext: ExternalField
    m: object
    frame: Frame

    def __post_init__(self):
        object.__setattr__(self, "_phi_comps", self.ext.component_fields())
        object.__setattr__(self, "_eps", eps_units(exact=True))

    @property
    def nu(self):
        return self.frame.nu

    @property
    def i_nu(self):
        return self.frame.nu * gr(0, 1)

    def pi_lower(self, mu: int, x: Field) -> Field:
        out = _d_lower(x, mu).rmul(self.nu)
        if bool(self.ext.e):
            out = out - (self._phi_comps[mu] * x).scale(self.ext.e)
        return out

    def pi_upper(self, mu: int, x: Field) -> Field:
        p = self.pi_lower(mu, x)
        return p if ETA[mu] > 0 else -p

    def pibar(self, x: Field) -> Field:
        out = nabla_bar(x).rmul(self.i_nu)
        if bool(self.ext.e):
            out = out - (self.ext.phi_bar() * x).scale(self.ext.e)
        return out

    def pibar_star(self, x: Field) -> Field:
        return self.pibar(x.star()).star()

    def eps(self, kind: str):
        return self._eps[kind]


def pi_mu(mu: int, ext: ExternalField, frame: Frame, upper=False):
    """The mu-th component operator as a standalone Field -> Field map."""
    ctx = RSContext(ext, None, frame)
    if upper:
        return lambda x: ctx.pi_upper(mu, x)
    return lambda x: ctx.pi_lower(mu, x)


# -- the free constrained system ---------------------------------------------------


def rs_free_system(psi, ext: ExternalField, m, frame: Frame):
    """Residuals of the spinor equations plus the two constraints."""
    ctx = RSContext(ext, m, frame)
    eq = [ctx.pibar(psi[mu]) - psi[mu].star().scale(m) for mu in range(4)]
    ebu = ctx.eps("bar_upper")
    algebraic = _sum_fields(psi[mu].lmul(ebu[mu]) for mu in range(4))
    differential = _sum_fields(ctx.pi_upper(mu, psi[mu]) for mu in range(4))
    return {
        "eq_residuals": eq,
        "algebraic_constraint": algebraic,
        "differential_constraint": differential,
    }


def _sum_fields(fields):
    total = None
    for f in fields:
        total = f if total is None else total + f
    return total if total is not None else Field.zero()


def rs_current(psi) -> Field:
    """Summed probability current of the four component fields."""
    return _sum_fields(p * p.plus() for p in psi)


# -- curvature: the dual-tensor map and the commutator identity ----------------------


def dual_tensor(ext: ExternalField):
    """The curvature map X -> (GL X + X GR)/2 built from the potential.

    GL and GR are the vector parts of the left and right gradients of the
    potential; dropping the scalar (gauge-divergence) parts is what makes
    the commutator identity below exact for arbitrary potentials.
    """
    gl = wedge(nabla_bar(ext.phi))
    gr_ = wedge(nabla_bar_from_right(ext.phi))
    half = gr(Fraction(1, 2))

    def apply(x):
        if isinstance(x, Biquaternion):
            x = Field.constant(x)
        return (gl * x + x * gr_).scale(half)

    return apply


def commutator_identity(ext: ExternalField, frame: Frame, fields, m=Fraction(1)):
    """Max residual of [pi^mu, Pibar] = e Phi(eps_bar^mu) [.] i nu over the
    supplied sample fields, per index; exact zero in the rational backend."""
    ctx = RSContext(ext, m, frame)
    phi_map = dual_tensor(ext)
    ebu = ctx.eps("bar_upper")
    worst = 0.0
    for x in fields:
        for mu in range(4):
            lhs = ctx.pi_upper(mu, ctx.pibar(x)) - ctx.pibar(ctx.pi_upper(mu, x))
            rhs = (phi_map(ebu[mu]) * x).rmul(ctx.i_nu).scale(ext.e)
            worst = max(worst, (lhs - rhs).max_abs())
    return worst


def extra_constraint(psi, ext: ExternalField, m, frame: Frame) -> Field:
    """The field whose vanishing the coupled system forces on solutions."""
    ctx = RSContext(ext, m, frame)
    phi_map = dual_tensor(ext)
    ebu = ctx.eps("bar_upper")
    total = _sum_fields((phi_map(ebu[mu]) * psi[mu]).rmul(ctx.i_nu)
                        for mu in range(4))
    return total


def extra_constraint_derivation_residual(psi, ext: ExternalField, m, frame: Frame):
    """Exact derivation identity behind the extra constraint.

    For arbitrary psi:  sum_mu pi^mu(Pibar psi_mu - m psi_mu*) equals
    (Pibar - m(.)*) applied to the differential-constraint contraction plus
    e times the extra-constraint field.  Returns the residual field.
    """
    ctx = RSContext(ext, m, frame)
    lhs = _sum_fields(
        ctx.pi_upper(mu, ctx.pibar(psi[mu]) - psi[mu].star().scale(m))
        for mu in range(4))
    w3 = _sum_fields(ctx.pi_upper(mu, psi[mu]) for mu in range(4))
    rhs = (ctx.pibar(w3) - w3.star().scale(m)
           + extra_constraint(psi, ext, m, frame).scale(ext.e))
    return lhs - rhs


# -- the coupled equation and its contractions -----------------------------------------


@dataclass(frozen=True)
class CoupledSystem:
    """The g-parameterized candidate equation, as four row operators."""

    g: object
    ctx: RSContext

    def rows(self, psi):
        ctx = self.ctx
        g = self.g
        m = ctx.m
        ebl = ctx.eps("bar_lower")
        ebu = ctx.eps("bar_upper")
        u = _sum_fields(psi[lam].lmul(ebu[lam]) for lam in range(4))
        w3 = _sum_fields(ctx.pi_upper(lam, psi[lam]) for lam in range(4))
        head = ctx.pibar_star(u) + u.star().scale(m)
        out = []
        for mu in range(4):
            row = (ctx.pibar(psi[mu]) - psi[mu].star().scale(m)
                   - (w3.lmul(ebl[mu]) + ctx.pi_lower(mu, u)).scale(g)
                   + head.lmul(ebl[mu]).scale(g))
            out.append(row)
        return out


def coupled_equation(g, ext: ExternalField, m, frame: Frame) -> CoupledSystem:
    return CoupledSystem(g=g, ctx=RSContext(ext, m, frame))


def eps_contraction(system: CoupledSystem, psi) -> Field:
    """sum_mu eps^mu times the mu-th row."""
    eu = system.ctx.eps("upper")
    rows = system.rows(psi)
    return _sum_fields(rows[mu].lmul(eu[mu]) for mu in range(4))


def eps_contraction_closed_form(system: CoupledSystem, psi) -> Field:
    """(4g-1) eps^lam m psi_lam* - 2(2g-1) pi^lam(psi_lam)
    + (3g-1) Pibar_star(eps_bar^lam psi_lam)."""
    ctx = system.ctx
    g = system.g
    m = ctx.m
    ebu = ctx.eps("bar_upper")
    u = _sum_fields(psi[lam].lmul(ebu[lam]) for lam in range(4))
    w3 = _sum_fields(ctx.pi_upper(lam, psi[lam]) for lam in range(4))
    return (u.star().scale(m * (4 * g - 1))
            - w3.scale(2 * (2 * g - 1))
            + ctx.pibar_star(u).scale(3 * g - 1))


def pi_contraction(system: CoupledSystem, psi) -> Field:
    """sum_mu pi^mu applied to the mu-th row."""
    rows = system.rows(psi)
    return _sum_fields(system.ctx.pi_upper(mu, rows[mu]) for mu in range(4))


def pi_contraction_closed_form(system: CoupledSystem, psi) -> Field:
    """m(g Pibar(eps^lam (.)*) - pi^lam((.)*)) + pi^lam(Pibar(.))
    - g Pibar(pi^lam(.)), contracted over lam, plus the second-order
    curvature correction g*(sum pi^mu pi_mu - Pibar Pibar_star) applied to
    the algebraic contraction."""
    ctx = system.ctx
    g = system.g
    m = ctx.m
    eu = ctx.eps("upper")
    ebu = ctx.eps("bar_upper")
    u = _sum_fields(psi[lam].lmul(ebu[lam]) for lam in range(4))
    first = _sum_fields(
        (ctx.pibar(psi[lam].star().lmul(eu[lam])).scale(g)
         - ctx.pi_upper(lam, psi[lam].star())).scale(m)
        + ctx.pi_upper(lam, ctx.pibar(psi[lam]))
        - ctx.pibar(ctx.pi_upper(lam, psi[lam])).scale(g)
        for lam in range(4))
    return first - second_order_defect(ctx, u).scale(g)


def second_order_defect(ctx: RSContext, x: Field) -> Field:
    """sum_mu pi^mu(pi_mu(x)) - Pibar(Pibar_star(x)): a derivative-free
    curvature multiplier, nonzero only with the coupling switched on."""
    total = _sum_fields(ctx.pi_upper(mu, ctx.pi_lower(mu, x)) for mu in range(4))
    return total - ctx.pibar(ctx.pibar_star(x))


def contraction_chain(g, ext: ExternalField, m, frame: Frame, sample_fields):
    """Verify both contractions of the coupled equation on sample
    vector-spinors; returns the max residuals (exact zeros expected)."""
    system = coupled_equation(g, ext, m, frame)
    worst_eps = 0.0
    worst_pi = 0.0
    for psi in sample_fields:
        d1 = eps_contraction(system, psi) - eps_contraction_closed_form(system, psi)
        d2 = pi_contraction(system, psi) - pi_contraction_closed_form(system, psi)
        worst_eps = max(worst_eps, d1.max_abs())
        worst_pi = max(worst_pi, d2.max_abs())
    return {"eps_residual": worst_eps, "pi_residual": worst_pi}


# -- the g = 1 reduction chain ----------------------------------------------------------


def g1_chain(ext: ExternalField, m, frame: Frame, sample_fields):
    """Verify every step of the g = 1 reduction as exact operator identities.

    Each "arrow" expresses one derived equation as an explicit combination
    of previously established ones, so the identities hold for arbitrary
    vector-spinors, not only on solutions.  Returns max residuals per step.
    """
    if not bool(m):
        raise DegenerateMass("the reduction chain requires m != 0")
    ctx = RSContext(ext, m, frame)
    system = coupled_equation(Fraction(1), ext, m, frame)
    eu = ctx.eps("upper")
    ebu = ctx.eps("bar_upper")
    e = ext.e
    out = {k: 0.0 for k in
           ("e27_is_eps_contraction", "e28_is_pi_contraction", "e29_conjugation",
            "e30_secondary", "e31_secondary", "e32_equation_of_motion")}

    for psi in sample_fields:
        u = _sum_fields(psi[lam].lmul(ebu[lam]) for lam in range(4))
        w3 = _sum_fields(ctx.pi_upper(lam, psi[lam]) for lam in range(4))
        w23 = extra_constraint(psi, ext, m, frame)

        # (27): the eps contraction at g = 1
        e27 = (u.star().scale(3 * m) - w3.scale(2) + ctx.pibar_star(u).scale(2))
        out["e27_is_eps_contraction"] = max(
            out["e27_is_eps_contraction"],
            (eps_contraction(system, psi) - e27).max_abs())

        # (28): the pi contraction at g = 1 (with curvature correction)
        e28 = _sum_fields(
            (ctx.pibar(psi[lam].star().lmul(eu[lam]))
             - ctx.pi_upper(lam, psi[lam].star())).scale(m)
            + ctx.pi_upper(lam, ctx.pibar(psi[lam]))
            - ctx.pibar(ctx.pi_upper(lam, psi[lam]))
            for lam in range(4))
        out["e28_is_pi_contraction"] = max(
            out["e28_is_pi_contraction"],
            (pi_contraction(system, psi)
             - (e28 - second_order_defect(ctx, u))).max_abs())

        # (29): complex conjugation of (28) after inserting the commutator;
        # the pointwise star already negates the trailing i nu factor, so the
        # curvature term enters with a plus sign in this representation
        e29 = (_sum_fields(ctx.pibar_star(psi[lam].lmul(ebu[lam]))
                           for lam in range(4)).scale(m)
               - w3.scale(m)
               + w23.star().scale(e))
        out["e29_conjugation"] = max(
            out["e29_conjugation"], (e29 - e28.star()).max_abs())

        # (30): the algebraic contraction in terms of the curvature field
        coeff = Fraction(2, 3) * e / (m * m) if isinstance(m, Fraction) else 2 * e / (3 * m * m)
        e30 = u - w23.scale(coeff)
        combo = (e27 - e29.scale(Fraction(2) / m)).scale(Fraction(1) / (3 * m))
        out["e30_secondary"] = max(
            out["e30_secondary"], (e30 - combo.star()).max_abs())

        # (31): the differential contraction in terms of the curvature field
        e31 = w3 - (ctx.pibar_star(w23.scale(coeff))
                    + w23.scale(coeff).star().scale(m * Fraction(3, 2)))
        combo31 = ctx.pibar_star(e30) - e29.scale(Fraction(1) / m)
        out["e31_secondary"] = max(
            out["e31_secondary"], (e31 - combo31).max_abs())

        # (32): the equation of motion row by row
        rows = system.rows(psi)
        ebl = ctx.eps("bar_lower")
        for mu in range(4):
            e32 = (ctx.pibar(psi[mu]) - psi[mu].star().scale(m)
                   - ctx.pi_lower(mu, w23.scale(coeff))
                   - w23.scale(coeff).star().lmul(ebl[mu]).scale(m * Fraction(1, 2)))
            combo32 = (rows[mu] + e31.lmul(ebl[mu]) + ctx.pi_lower(mu, e30)
                       - ctx.pibar_star(e30).lmul(ebl[mu])
                       - e30.star().lmul(ebl[mu]).scale(m))
            out["e32_equation_of_motion"] = max(
                out["e32_equation_of_motion"], (e32 - combo32).max_abs())
    return out


# -- constraint counting at fixed momentum -----------------------------------------------


def _rs_plane_wave(amps, k, frame):
    return tuple(plane_wave_field(a, k, frame) for a in amps)


def _extract_const_cos(f: Field, k):
    from .fields import _k_canonical
    kk = tuple(Fraction(c) for c in k)
    kc, _ = _k_canonical(kk)
    pair = f.modes.get(kc)
    if pair is None:
        return Biquaternion.zero()
    coeff = pair[0].terms.get((0, 0, 0, 0))
    return coeff if coeff is not None else Biquaternion.zero()


def constraint_counting(p: Momentum, m, frame: Frame):
    """Momentum-space rank analysis of the free constrained system.

    Reports the real dimension before constraints, after imposing the two
    constraint groups, and the real dimension of the full solution space.
    """
    if not p.on_shell():
        raise OffShell("counting requires an on-shell momentum")
    k = p.k_tuple()
    ext = ExternalField.zero()

    def filled(j):
        amps = []
        for mu in range(4):
            coords = [0] * 8
            if j // 8 == mu:
                coords[j % 8] = 1
            amps.append(Biquaternion.from_real_coords(coords))
        return _rs_plane_wave(amps, k, frame)

    dl_rows = [[] for _ in range(32)]
    alg_rows = [[] for _ in range(8)]
    diff_rows = [[] for _ in range(8)]
    for j in range(32):
        psi = filled(j)
        sysout = rs_free_system(psi, ext, m, frame)
        for mu in range(4):
            col = _extract_const_cos(sysout["eq_residuals"][mu], k).real_coords()
            for i in range(8):
                dl_rows[8 * mu + i].append(col[i])
        col = _extract_const_cos(sysout["algebraic_constraint"], k).real_coords()
        for i in range(8):
            alg_rows[i].append(col[i])
        col = _extract_const_cos(sysout["differential_constraint"], k).real_coords()
        for i in range(8):
            diff_rows[i].append(col[i])

    rank_alg = rank(alg_rows)
    rank_diff = rank(diff_rows)
    rank_constraints = rank(alg_rows + diff_rows)
    full = dl_rows + alg_rows + diff_rows
    sol_basis = nullspace(full)
    return {
        "total_real_dim": 32,
        "constraint_ranks": (rank_alg, rank_diff),
        "after_constraints": 32 - rank_constraints,
        "solution_dim": len(sol_basis),
        "solution_basis": sol_basis,
    }


def free_rs_solutions(p: Momentum, m, frame: Frame):
    """Plane-wave vector-spinor solutions of the full free system."""
    out = constraint_counting(p, m, frame)
    sols = []
    for vec in out["solution_basis"]:
        amps = [Biquaternion.from_real_coords(vec[8 * mu: 8 * mu + 8])
                for mu in range(4)]
        sols.append(_rs_plane_wave(amps, p.k_tuple(), frame))
    return sols
