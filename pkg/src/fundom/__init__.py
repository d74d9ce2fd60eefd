"""Coset representatives and connected fundamental domains for the
congruence subgroups of SL2(Z)."""

from .residues import Level, Residue, sym_rep, gcd_with_level, inv_mod, NotAUnit
from .projline import (
    ProjPoint,
    PointKind,
    big_m,
    enumerate_p1,
    m_distribution,
    m_table,
    normalize,
    psi,
    NotInH,
    NotOnProjLine,
)
from .words import (
    Cusp,
    GroupWord,
    Mat2,
    cusp,
    evaluate,
    in_gamma0,
    in_gammaN,
    in_pm_gamma1,
    make_word,
    mobius_cusp,
    parse_word,
    psl_normalize,
    row_map,
    st,
)
from .cosets import (
    CosetList,
    Group,
    VerificationFailed,
    gamma1_quotient_reps,
    theta0,
    theta1,
    theta_full,
    verify,
)
from .cayley import build_graph, is_connected, spanning_tree, to_dot
from .domain import (
    CuspClassTable,
    IdealTriangle,
    RenderOptions,
    cusp_equivalent,
    cusp_table,
    cusp_width,
    cusps_of,
    render_json,
    render_svg,
    triangle_of,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
