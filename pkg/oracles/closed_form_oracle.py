"""Independent symbolic verification of the closed forms frozen into the test suite.

Everything here is derived from first principles with sympy (symbolic) or
high-precision floating point (group-law checks), without importing the
package under development.  Each check prints one ``ok:`` line; any failure
prints ``FAIL:`` and the script exits nonzero.

Run:  python oracles/closed_form_oracle.py
"""

from __future__ import annotations

import itertools
import random
import sys
from fractions import Fraction

import sympy as sp

FAILURES: list[str] = []


def check(label: str, condition: bool, detail: str = "") -> None:
    if condition:
        print(f"ok: {label}")
    else:
        print(f"FAIL: {label} {detail}")
        FAILURES.append(label)


# --------------------------------------------------------------------------
# Bracket tables.  A table maps an ordered generator pair (a, b) with a
# before b in the basis to {generator: coefficient}.  Dense structure
# constants C[i][j][k] are antisymmetrized from the table.
# --------------------------------------------------------------------------

w, kap = sp.symbols("omega kappa", positive=True)
c_sym = w / kap  # velocity constant tied to the two curvatures
inv_c2 = 1 / c_sym**2  # = kappa**2 / omega**2


def rotation_pairs(table, pairs):
    """[J, V1] = V2, [J, V2] = -V1 for each vector pair (V1, V2)."""
    for v1, v2 in pairs:
        table[("J", v1)] = {v2: sp.Integer(1)}
        table[("J", v2)] = {v1: sp.Integer(-1)}


def isotropic_table(lam, beta, gamma):
    t = {}
    rotation_pairs(t, [("K1", "K2"), ("P1", "P2")])
    t[("K1", "K2")] = {"J": -lam * gamma}
    t[("P1", "P2")] = {"J": beta * gamma}
    t[("K1", "P1")] = {"H": gamma}
    t[("K2", "P2")] = {"H": gamma}
    t[("K1", "H")] = {"P1": lam}
    t[("K2", "H")] = {"P2": lam}
    t[("P1", "H")] = {"K1": beta}
    t[("P2", "H")] = {"K2": beta}
    return t


ISOTROPIC_BASIS = ("J", "K1", "K2", "P1", "P2", "H")
ANISO_BASIS = ("K1", "K2", "P1", "P2", "H")

# name -> (lambda, beta, gamma)
FAMILIES = {
    "dS+": (1, w**2, inv_c2),
    "P": (1, 0, inv_c2),
    "dS-": (1, -(w**2), inv_c2),
    "NH+": (1, w**2, 0),
    "G": (1, 0, 0),
    "NH-": (1, -(w**2), 0),
    "P'+": (0, w**2, inv_c2),
    "C": (0, 0, inv_c2),
    "P'-": (0, -(w**2), inv_c2),
    "G'+": (0, w**2, 0),
    "S": (0, 0, 0),
    "G'-": (0, -(w**2), 0),
}

ANISO_CAPABLE = ("NH+", "NH-", "G", "G'+", "G'-", "S", "C")


def aniso_table(lam, beta):
    t = {}
    t[("K1", "H")] = {"P1": lam}
    t[("K2", "H")] = {"P2": lam}
    t[("P1", "H")] = {"K1": beta}
    t[("P2", "H")] = {"K2": beta}
    if lam == 0 and beta == 0:
        pass  # fully abelian apart from nothing
    return t


def carroll_aniso_table():
    return {("K1", "P1"): {"H": inv_c2}, ("K2", "P2"): {"H": inv_c2}}


def central_ext_table(lam, beta, mu_charge, alpha_charge, carroll=False):
    """Anisotropic algebra + central charges.

    [K,K] = (mu/c^2) S eps, [P,P] = alpha kappa^2 S eps, [K,P] = M delta
    (for the Carroll family [K,P] keeps (1/c^2) H delta and no M exists).
    """
    t = {}
    t[("K1", "K2")] = {"S": mu_charge * inv_c2}
    t[("P1", "P2")] = {"S": alpha_charge * kap**2}
    if carroll:
        t[("K1", "P1")] = {"H": inv_c2}
        t[("K2", "P2")] = {"H": inv_c2}
    else:
        t[("K1", "P1")] = {"M": sp.Integer(1)}
        t[("K2", "P2")] = {"M": sp.Integer(1)}
    t[("K1", "H")] = {"P1": lam}
    t[("K2", "H")] = {"P2": lam}
    t[("P1", "H")] = {"K1": beta}
    t[("P2", "H")] = {"K2": beta}
    return t


CENTRAL_BASIS = ("K1", "K2", "P1", "P2", "H", "M", "S")
CARROLL_CENTRAL_BASIS = ("K1", "K2", "P1", "P2", "H", "S")

# Normalized central-extension charges (mu_charge, alpha_charge) per family.
CENTRAL_CHARGES = {
    "NH+": (1, -1),
    "NH-": (1, 1),
    "G": (1, 0),
    "G'+": (0, 1),
    "G'-": (0, 1),
    "S": (1, 1),
    "C": (1, 1),
}


def noncentral_table(name):
    """Noncentral extensions of the six absolute-time isotropic algebras."""
    t = {}
    if name in ("NH+", "NH-"):
        sign = 1 if name.endswith("+") else -1
        rotation_pairs(t, [("K1", "K2"), ("P1", "P2")])
        t[("K1", "K2")] = {"S": inv_c2}
        t[("P1", "P2")] = {"S": -sign * kap**2}
        t[("K1", "P1")] = {"M": sp.Integer(1)}
        t[("K2", "P2")] = {"M": sp.Integer(1)}
        t[("K1", "H")] = {"P1": sp.Integer(1)}
        t[("K2", "H")] = {"P2": sp.Integer(1)}
        t[("P1", "H")] = {"K1": sign * w**2}
        t[("P2", "H")] = {"K2": sign * w**2}
        basis = ("J", "K1", "K2", "P1", "P2", "H", "M", "S")
    elif name in ("G'+", "G'-"):
        sign = 1 if name.endswith("+") else -1
        rotation_pairs(t, [("K1", "K2"), ("P1", "P2"), ("Pi1", "Pi2")])
        t[("K1", "P1")] = {"M": sp.Integer(1)}
        t[("K2", "P2")] = {"M": sp.Integer(1)}
        t[("P1", "P2")] = {"S": kap**2}
        t[("K1", "H")] = {"Pi1": sp.Integer(1)}
        t[("K2", "H")] = {"Pi2": sp.Integer(1)}
        t[("P1", "H")] = {"K1": sign * w**2}
        t[("P2", "H")] = {"K2": sign * w**2}
        basis = ("J", "K1", "K2", "P1", "P2", "H", "M", "S", "Pi1", "Pi2")
    elif name == "G":
        rotation_pairs(
            t, [("K1", "K2"), ("P1", "P2"), ("F1", "F2"), ("Pi1", "Pi2")]
        )
        t[("K1", "K2")] = {"S": inv_c2}
        t[("K1", "P1")] = {"M": sp.Integer(1)}
        t[("K2", "P2")] = {"M": sp.Integer(1)}
        t[("K1", "H")] = {"Pi1": sp.Integer(1)}
        t[("K2", "H")] = {"Pi2": sp.Integer(1)}
        t[("P1", "H")] = {"F1": sp.Integer(1)}
        t[("P2", "H")] = {"F2": sp.Integer(1)}
        basis = ("J", "K1", "K2", "P1", "P2", "H", "M", "S", "F1", "F2", "Pi1", "Pi2")
    elif name == "S":
        rotation_pairs(
            t, [("K1", "K2"), ("P1", "P2"), ("F1", "F2"), ("Pi1", "Pi2")]
        )
        t[("K1", "P1")] = {"M": sp.Integer(1)}
        t[("K2", "P2")] = {"M": sp.Integer(1)}
        t[("K1", "F1")] = {"B": sp.Integer(1)}
        t[("K2", "F2")] = {"B": sp.Integer(1)}
        t[("P1", "F1")] = {"Lambda": sp.Integer(1)}
        t[("P2", "F2")] = {"Lambda": sp.Integer(1)}
        t[("K1", "Pi1")] = {"M'": sp.Integer(1)}
        t[("K2", "Pi2")] = {"M'": sp.Integer(1)}
        t[("P1", "Pi1")] = {"B": sp.Integer(1)}
        t[("P2", "Pi2")] = {"B": sp.Integer(1)}
        t[("K1", "H")] = {"Pi1": sp.Integer(1)}
        t[("K2", "H")] = {"Pi2": sp.Integer(1)}
        t[("P1", "H")] = {"F1": sp.Integer(1)}
        t[("P2", "H")] = {"F2": sp.Integer(1)}
        basis = (
            "J", "K1", "K2", "P1", "P2", "H", "M",
            "F1", "F2", "Pi1", "Pi2", "M'", "B", "Lambda",
        )
    else:
        raise ValueError(name)
    return basis, t


def dense(basis, table):
    n = len(basis)
    idx = {nm: i for i, nm in enumerate(basis)}
    C = [[[sp.Integer(0)] * n for _ in range(n)] for _ in range(n)]
    for (a, b), comps in table.items():
        i, j = idx[a], idx[b]
        for kname, v in comps.items():
            C[i][j][idx[kname]] += v
            C[j][i][idx[kname]] -= v
    return C


def jacobi_violations(basis, C):
    n = len(basis)
    bad = []
    for i, j, k in itertools.combinations(range(n), 3):
        for l in range(n):
            r = sp.expand(
                sum(
                    C[i][j][m] * C[m][k][l]
                    + C[j][k][m] * C[m][i][l]
                    + C[k][i][m] * C[m][j][l]
                    for m in range(n)
                )
            )
            if r != 0:
                bad.append(((basis[i], basis[j], basis[k]), basis[l], r))
    return bad


# --------------------------------------------------------------------------
# 1. Jacobi identity across the whole catalog
# --------------------------------------------------------------------------

for name, (lam, beta, gamma) in FAMILIES.items():
    C = dense(ISOTROPIC_BASIS, isotropic_table(lam, beta, gamma))
    check(f"jacobi isotropic {name}", not jacobi_violations(ISOTROPIC_BASIS, C))

for name in ANISO_CAPABLE:
    lam, beta, gamma = FAMILIES[name]
    if name == "C":
        t = carroll_aniso_table()
    else:
        t = aniso_table(lam, beta)
    C = dense(ANISO_BASIS, t)
    check(f"jacobi anisotropic {name}", not jacobi_violations(ANISO_BASIS, C))

for name, (mu_c, al_c) in CENTRAL_CHARGES.items():
    lam, beta, gamma = FAMILIES[name]
    carroll = name == "C"
    basis = CARROLL_CENTRAL_BASIS if carroll else CENTRAL_BASIS
    C = dense(basis, central_ext_table(lam, beta, mu_c, al_c, carroll=carroll))
    check(f"jacobi central extension {name}", not jacobi_violations(basis, C))

for name in ("NH+", "NH-", "G", "G'+", "G'-", "S"):
    basis, t = noncentral_table(name)
    C = dense(basis, t)
    check(f"jacobi noncentral extension {name}", not jacobi_violations(basis, C))

# --------------------------------------------------------------------------
# 2. Admissible central-extension charges: the general charged extension
#    must reduce Jacobi to the single constraint mu*beta/c^2 + kappa^2*lam*alpha = 0.
# --------------------------------------------------------------------------

mu_c, al_c = sp.symbols("mu_c alpha_c")
for lam_v, beta_v, label in [
    (1, w**2, "lam=1 beta=+w2"),
    (1, -(w**2), "lam=1 beta=-w2"),
    (1, 0, "lam=1 beta=0"),
    (0, w**2, "lam=0 beta=+w2"),
    (0, -(w**2), "lam=0 beta=-w2"),
    (0, 0, "lam=0 beta=0"),
]:
    C = dense(CENTRAL_BASIS, central_ext_table(lam_v, beta_v, mu_c, al_c))
    bad = jacobi_violations(CENTRAL_BASIS, C)
    constraint = sp.expand(mu_c * beta_v * inv_c2 + kap**2 * lam_v * al_c)
    if constraint == 0:
        check(f"extension charges unconstrained for {label}", not bad)
    else:
        residues_ok = all(
            not sp.simplify(r / constraint).free_symbols for _, _, r in bad
        )
        check(
            f"extension constraint for {label} is mu*beta/c^2 = -kappa^2*lam*alpha",
            bool(bad) and residues_ok,
        )

# Forced violation: lam=1, beta=+w^2 with mu=alpha=1 (inadmissible pairing).
C = dense(CENTRAL_BASIS, central_ext_table(1, w**2, 1, 1))
bad = jacobi_violations(CENTRAL_BASIS, C)
expected = {(("K1", "P2", "H"), "S"), (("K2", "P1", "H"), "S")}
got = {(t_, l_) for t_, l_, _ in bad}
vals_ok = all(sp.expand(r**2 - 4 * kap**4) == 0 for _, _, r in bad)
check(
    "forced inadmissible build violates Jacobi on mixed (K,P,H) triples with residual 2*kappa^2*S",
    got == expected and vals_ok,
    f"got={bad}",
)

# --------------------------------------------------------------------------
# 3. Kirillov matrices, restrictions, inverses, reference closed forms
# --------------------------------------------------------------------------

def kirillov(basis, C, alpha):
    n = len(basis)
    return sp.Matrix(
        n, n, lambda i, j: sum(alpha[basis[k]] * C[i][j][k] for k in range(n))
    )


def restrict(basis, K, chart):
    idx = {nm: i for i, nm in enumerate(basis)}
    rows = [idx[nm] for nm in chart]
    return K[rows, rows]


m_s, h_s, E_s = sp.symbols("m h E", positive=True)
k1, k2, p1, p2 = sp.symbols("k1 k2 p1 p2")
omega0 = m_s * c_sym**2 / h_s  # frequency tied to mass and action

CHART_KP = ("K1", "K2", "P1", "P2")

# --- flat/position-noncommuting family (Galilei central extension)
lam, beta, gamma = FAMILIES["G"]
Cg = dense(CENTRAL_BASIS, central_ext_table(lam, beta, *CENTRAL_CHARGES["G"]))
alpha_g = {"K1": k1, "K2": k2, "P1": p1, "P2": p2, "H": E_s, "M": m_s, "S": h_s}
Kg = kirillov(CENTRAL_BASIS, Cg, alpha_g)
Og = restrict(CENTRAL_BASIS, Kg, CHART_KP)
ref_Og = sp.Matrix(
    [
        [0, h_s / c_sym**2, m_s, 0],
        [-h_s / c_sym**2, 0, 0, m_s],
        [-m_s, 0, 0, 0],
        [0, -m_s, 0, 0],
    ]
)
check("galilei restricted matrix", sp.simplify(Og - ref_Og) == sp.zeros(4, 4))
ref_Og_inv = sp.Matrix(
    [
        [0, 0, -1 / m_s, 0],
        [0, 0, 0, -1 / m_s],
        [1 / m_s, 0, 0, 1 / (m_s * omega0)],
        [0, 1 / m_s, -1 / (m_s * omega0), 0],
    ]
)
check(
    "galilei inverse matches reference closed form",
    sp.simplify(Og.inv() - ref_Og_inv) == sp.zeros(4, 4),
)

# Canonical-chart scaling q = k/m; bracket matrix of (q1,q2,p1,p2) is -T*Og*T^T
T = sp.diag(1 / m_s, 1 / m_s, 1, 1)
theta_can = -T * Og * T.T
check(
    "galilei position noncommutativity G = -1/(m*omega0) and F = 0",
    sp.simplify(theta_can[0, 1] + 1 / (m_s * omega0)) == 0
    and theta_can[2, 3] == 0
    and sp.simplify(theta_can[2, 0] - 1) == 0,
)

# --- momentum-noncommuting family (Para-Galilei + branch central extension)
lam, beta, gamma = FAMILIES["G'+"]
Cpg = dense(CENTRAL_BASIS, central_ext_table(lam, beta, *CENTRAL_CHARGES["G'+"]))
Kpg = kirillov(CENTRAL_BASIS, Cpg, alpha_g)
Opg = restrict(CENTRAL_BASIS, Kpg, CHART_KP)
ref_Opg = sp.Matrix(
    [
        [0, 0, m_s, 0],
        [0, 0, 0, m_s],
        [-m_s, 0, 0, kap**2 * h_s],
        [0, -m_s, -(kap**2) * h_s, 0],
    ]
)
check("para-galilei restricted matrix", sp.simplify(Opg - ref_Opg) == sp.zeros(4, 4))
ref_Opg_inv = sp.Matrix(
    [
        [0, w**2 / (m_s * omega0), -1 / m_s, 0],
        [-(w**2) / (m_s * omega0), 0, 0, -1 / m_s],
        [1 / m_s, 0, 0, 0],
        [0, 1 / m_s, 0, 0],
    ]
)
check(
    "para-galilei inverse matches reference closed form",
    sp.simplify(Opg.inv() - ref_Opg_inv) == sp.zeros(4, 4),
)
theta_can_pg = -T * Opg * T.T
check(
    "para-galilei momentum noncommutativity F = -m*w^2/omega0 and G = 0",
    theta_can_pg[0, 1] == 0
    and sp.simplify(theta_can_pg[2, 3] + m_s * w**2 / omega0) == 0,
)

# --- fully noncommuting family (Static central extension)
Cs = dense(CENTRAL_BASIS, central_ext_table(0, 0, *CENTRAL_CHARGES["S"]))
Ks = kirillov(CENTRAL_BASIS, Cs, alpha_g)
Os = restrict(CENTRAL_BASIS, Ks, CHART_KP)
ref_Os = sp.Matrix(
    [
        [0, h_s / c_sym**2, m_s, 0],
        [-h_s / c_sym**2, 0, 0, m_s],
        [-m_s, 0, 0, kap**2 * h_s],
        [0, -m_s, -(kap**2) * h_s, 0],
    ]
)
check("static restricted matrix", sp.simplify(Os - ref_Os) == sp.zeros(4, 4))

mu_e = m_s - kap**2 * h_s / w
ref_Os_inv_claimed = sp.Matrix(
    [
        [0, -w / mu_e, -1 / mu_e, 0],
        [w / mu_e, 0, 0, -1 / mu_e],
        [1 / mu_e, 0, 0, 1 / (mu_e * omega0)],
        [0, 1 / mu_e, -1 / (mu_e * omega0), 0],
    ]
)
# The claimed closed-form inverse is NOT the inverse (documented defect):
prod = sp.simplify(Os * ref_Os_inv_claimed)
check(
    "static claimed inverse closed form is not the true inverse (pinned defect)",
    sp.simplify(prod - sp.eye(4)) != sp.zeros(4, 4),
)
sample = {m_s: 2, h_s: 1, w: 1, kap: 1}
true_inv_sample = sp.simplify(Os.inv().subs(sample))
expected_true_inv = sp.Matrix(
    [
        [0, sp.Rational(1, 3), -sp.Rational(2, 3), 0],
        [-sp.Rational(1, 3), 0, 0, -sp.Rational(2, 3)],
        [sp.Rational(2, 3), 0, 0, sp.Rational(1, 3)],
        [0, sp.Rational(2, 3), -sp.Rational(1, 3), 0],
    ]
)
check(
    "static true inverse at sample (m=2,h=1,w=1,kap=1)",
    true_inv_sample == expected_true_inv,
)
Ts = sp.diag(1 / mu_e, 1 / mu_e, 1, 1)
theta_can_s = sp.simplify(-Ts * Os * Ts.T)
check(
    "static chart fields G = -(h/c^2)/mu_e^2, F = -kap^2*h",
    sp.simplify(theta_can_s[0, 1] + (h_s / c_sym**2) / mu_e**2) == 0
    and sp.simplify(theta_can_s[2, 3] + kap**2 * h_s) == 0,
)

# --- Carroll central extension: same chart with E/c^2 in the mass slot
Cc = dense(
    CARROLL_CENTRAL_BASIS, central_ext_table(0, 0, 1, 1, carroll=True)
)
alpha_c = {"K1": k1, "K2": k2, "P1": p1, "P2": p2, "H": E_s, "S": h_s}
Kc = kirillov(CARROLL_CENTRAL_BASIS, Cc, alpha_c)
Oc = restrict(CARROLL_CENTRAL_BASIS, Kc, CHART_KP)
ref_Oc = sp.Matrix(
    [
        [0, h_s / c_sym**2, E_s / c_sym**2, 0],
        [-h_s / c_sym**2, 0, 0, E_s / c_sym**2],
        [-E_s / c_sym**2, 0, 0, kap**2 * h_s],
        [0, -E_s / c_sym**2, -(kap**2) * h_s, 0],
    ]
)
check("carroll restricted matrix", sp.simplify(Oc - ref_Oc) == sp.zeros(4, 4))
check(
    "carroll matrix equals static matrix after E = m*c^2",
    sp.simplify(Oc.subs(E_s, m_s * c_sym**2) - ref_Os) == sp.zeros(4, 4),
)

# --- Newton-Hooke central extensions (no reference matrix; derived here)
for name, ss in (("NH+", -1), ("NH-", 1)):
    Cn = dense(CENTRAL_BASIS, central_ext_table(*FAMILIES[name][:2], *CENTRAL_CHARGES[name]))
    Kn = kirillov(CENTRAL_BASIS, Cn, alpha_g)
    On = restrict(CENTRAL_BASIS, Kn, CHART_KP)
    ref_On = sp.Matrix(
        [
            [0, h_s / c_sym**2, m_s, 0],
            [-h_s / c_sym**2, 0, 0, m_s],
            [-m_s, 0, 0, ss * kap**2 * h_s],
            [0, -m_s, -ss * kap**2 * h_s, 0],
        ]
    )
    check(f"newton-hooke restricted matrix {name}", sp.simplify(On - ref_On) == sp.zeros(4, 4))

# --------------------------------------------------------------------------
# 4. Casimir (Kirillov-system) invariants, full-algebra symbolic residuals
# --------------------------------------------------------------------------

def casimir_residual(basis, K, alpha, f):
    grad = sp.Matrix([sp.diff(f, alpha[nm]) for nm in basis])
    return sp.expand(K * grad)


U_gal = E_s - (p1**2 + p2**2) / (2 * m_s)
check(
    "galilei internal energy is exact invariant",
    casimir_residual(CENTRAL_BASIS, Kg, alpha_g, U_gal) == sp.zeros(7, 1),
)
U_pg = E_s + w**2 * (k1**2 + k2**2) / (2 * m_s)
check(
    "para-galilei (+) energy invariant",
    casimir_residual(CENTRAL_BASIS, Kpg, alpha_g, U_pg) == sp.zeros(7, 1),
)
Cpgm = dense(CENTRAL_BASIS, central_ext_table(*FAMILIES["G'-"][:2], *CENTRAL_CHARGES["G'-"]))
Kpgm = kirillov(CENTRAL_BASIS, Cpgm, alpha_g)
U_pgm = E_s - w**2 * (k1**2 + k2**2) / (2 * m_s)
check(
    "para-galilei (-) energy invariant flips sign",
    casimir_residual(CENTRAL_BASIS, Kpgm, alpha_g, U_pgm) == sp.zeros(7, 1),
)
for f_triv, lbl in ((E_s, "E"), (m_s, "m"), (h_s, "h")):
    check(
        f"static trivial invariant {lbl}",
        casimir_residual(CENTRAL_BASIS, Ks, alpha_g, f_triv) == sp.zeros(7, 1),
    )

# --- Noncentral Static: full 14-dim symbolic invariants
NC_BASIS, nc_table = noncentral_table("S")
Cnc = dense(NC_BASIS, nc_table)
j_s = sp.Symbol("j")
f1, f2, I1, I2 = sp.symbols("f1 f2 I1 I2")
mu_s, beta_s, kap_s = sp.symbols("mu beta_d kappa_h")
alpha_nc = {
    "J": j_s, "K1": k1, "K2": k2, "P1": p1, "P2": p2, "H": E_s, "M": m_s,
    "F1": f1, "F2": f2, "Pi1": I1, "Pi2": I2, "M'": mu_s, "B": beta_s,
    "Lambda": kap_s,
}
Knc = kirillov(NC_BASIS, Cnc, alpha_nc)
D = mu_s * kap_s - beta_s**2


def cross(a1, a2, b1, b2):
    return a1 * b2 - a2 * b1


s_true = j_s - (
    kap_s * cross(k1, k2, I1, I2)
    - beta_s * cross(p1, p2, I1, I2)
    + mu_s * cross(p1, p2, f1, f2)
    - beta_s * cross(k1, k2, f1, f2)
    + m_s * cross(f1, f2, I1, I2)
) / D
U_true = E_s + (
    mu_s * (f1**2 + f2**2)
    - 2 * beta_s * (f1 * I1 + f2 * I2)
    + kap_s * (I1**2 + I2**2)
) / (2 * (beta_s**2 - mu_s * kap_s))
check(
    "noncentral static spin invariant (with m*(f x I)/D correction)",
    sp.simplify(casimir_residual(NC_BASIS, Knc, alpha_nc, s_true)) == sp.zeros(14, 1),
)
check(
    "noncentral static energy invariant",
    sp.simplify(casimir_residual(NC_BASIS, Knc, alpha_nc, U_true)) == sp.zeros(14, 1),
)
# The uncorrected spin expression is NOT invariant (documented defect):
kap_e = kap_s - beta_s**2 / mu_s
mu_e_nc = mu_s - beta_s**2 / kap_s
q1 = -f1 / kap_e
q2 = -f2 / kap_e
u1 = I1 / mu_e_nc
u2 = I2 / mu_e_nc
s_ref_claimed = (
    j_s
    - cross(k1 - beta_s / kap_s * p1, k2 - beta_s / kap_s * p2, u1, u2)
    + cross(p1 - beta_s / mu_s * k1, p2 - beta_s / mu_s * k2, q1, q2)
)
res = sp.simplify(casimir_residual(NC_BASIS, Knc, alpha_nc, s_ref_claimed))
check("uncorrected spin closed form fails the invariance system (pinned defect)", res != sp.zeros(14, 1))
corr = m_s * mu_e_nc / mu_s * cross(q1, q2, u1, u2)
check(
    "correction term equals m*mu_e/mu*(q x u)",
    sp.simplify(s_true - s_ref_claimed - corr) == 0,
)
for f_triv, lbl in ((m_s, "m"), (mu_s, "mu"), (beta_s, "beta"), (kap_s, "kappa")):
    check(
        f"noncentral static trivial invariant {lbl}",
        casimir_residual(NC_BASIS, Knc, alpha_nc, f_triv) == sp.zeros(14, 1),
    )

# --------------------------------------------------------------------------
# 5. Noncentral Static restricted matrix and its reference inverse
# --------------------------------------------------------------------------

NC_CHART = ("P1", "P2", "K1", "K2", "F1", "F2", "Pi1", "Pi2")
Onc = restrict(NC_BASIS, Knc, NC_CHART)
pref = 1 / (beta_s**2 - mu_s * kap_s)
ref_Onc_inv = pref * sp.Matrix(
    [
        [0, 0, 0, 0, mu_s, 0, -beta_s, 0],
        [0, 0, 0, 0, 0, mu_s, 0, -beta_s],
        [0, 0, 0, 0, -beta_s, 0, kap_s, 0],
        [0, 0, 0, 0, 0, -beta_s, 0, kap_s],
        [-mu_s, 0, beta_s, 0, 0, 0, m_s, 0],
        [0, -mu_s, 0, beta_s, 0, 0, 0, m_s],
        [beta_s, 0, -kap_s, 0, -m_s, 0, 0, 0],
        [0, beta_s, 0, -kap_s, 0, -m_s, 0, 0],
    ]
)
check(
    "noncentral static inverse matches reference closed form exactly",
    sp.simplify(Onc.inv() - ref_Onc_inv) == sp.zeros(8, 8),
)

# Canonical coordinates (q,u,p,k): q = -f/kap_e, u = I/mu_e.  Bracket matrix of
# z = (q1,q2,u1,u2,p1,p2,k1,k2) is -T*Onc*T^T with T the linear chart map.
Tnc = sp.zeros(8, 8)
Tnc[0, 4] = -1 / kap_e
Tnc[1, 5] = -1 / kap_e
Tnc[2, 6] = 1 / mu_e_nc
Tnc[3, 7] = 1 / mu_e_nc
Tnc[4, 0] = 1
Tnc[5, 1] = 1
Tnc[6, 2] = 1
Tnc[7, 3] = 1
theta_nc = sp.simplify(-Tnc * Onc * Tnc.T)
expected_entries = {
    (4, 0): kap_s / kap_e,          # {p1, q1}
    (6, 2): -mu_s / mu_e_nc,        # {k1, u1}
    (4, 2): -beta_s / mu_e_nc,      # {p1, u1}
    (0, 6): -beta_s / kap_e,        # {q1, k1}
    (4, 6): m_s,                    # {p1, k1}
    (0, 2): 0,                      # {q1, u1}
    (0, 1): 0,                      # {q1, q2}
    (4, 5): 0,                      # {p1, p2}
}
bad_entries = [
    (pos, sp.simplify(theta_nc[pos] - val))
    for pos, val in expected_entries.items()
    if sp.simplify(theta_nc[pos] - val) != 0
]
check("noncentral static true bracket table", not bad_entries, str(bad_entries))

# Evolution generator: H_t = -(kap_e*q^2/2 + mu_e*u^2/2 + (beta*mu_e/mu) q.u)
# must generate (qdot,udot,pdot,kdot) = (0,0,-kap_e*q, mu_e*u) via theta_nc.
q1v, q2v, u1v, u2v, p1v, p2v, k1v, k2v = sp.symbols("q1 q2 u1 u2 p1v p2v k1v k2v")
zvars = (q1v, q2v, u1v, u2v, p1v, p2v, k1v, k2v)
H_t = -(
    kap_e * (q1v**2 + q2v**2) / 2
    + mu_e_nc * (u1v**2 + u2v**2) / 2
    + beta_s * mu_e_nc / mu_s * (q1v * u1v + q2v * u2v)
)
gradH = sp.Matrix([sp.diff(H_t, zv) for zv in zvars])
flow = sp.simplify(theta_nc * gradH)
expected_flow = sp.Matrix(
    [0, 0, 0, 0, -kap_e * q1v, -kap_e * q2v, mu_e_nc * u1v, mu_e_nc * u2v]
)
check("evolution generator reproduces the linear-in-time flow", sp.simplify(flow - expected_flow) == sp.zeros(8, 1))

# --------------------------------------------------------------------------
# 6. Minimal-coupling pushforwards from the canonical bracket matrix
# --------------------------------------------------------------------------

G_f, F_f = sp.symbols("G F")
# canonical bracket matrix on (q1,q2,p1,p2) with {p_i,q^j} = +delta
theta0 = sp.Matrix(
    [[0, 0, -1, 0], [0, 0, 0, -1], [1, 0, 0, 0], [0, 1, 0, 0]]
)
# position coupling: x = q + (eps-rotated p)/(2 m omega0), momenta unchanged
A = sp.Matrix([[0, -1], [1, 0]]) / (2 * m_s * omega0)
Jac = sp.eye(4)
Jac[0:2, 2:4] = A
theta_x = Jac * theta0 * Jac.T
check(
    "position coupling pushforward gives {x1,x2} = -1/(m*omega0), unit cross block",
    sp.simplify(theta_x[0, 1] + 1 / (m_s * omega0)) == 0
    and theta_x[2, 3] == 0
    and sp.simplify(theta_x[2, 0] - 1) == 0,
)
# momentum coupling: pi = p + (m w^2 / (2 omega0)) * eps * q, positions unchanged
Bm = m_s * w**2 / (2 * omega0) * sp.Matrix([[0, 1], [-1, 0]])
Jac2 = sp.eye(4)
Jac2[2:4, 0:2] = Bm
theta_pi = Jac2 * theta0 * Jac2.T
check(
    "momentum coupling pushforward gives {pi1,pi2} = -m*w^2/omega0, unit cross block",
    sp.simplify(theta_pi[2, 3] + m_s * w**2 / omega0) == 0
    and theta_pi[0, 1] == 0
    and sp.simplify(theta_pi[2, 0] - 1) == 0,
)

# --------------------------------------------------------------------------
# 7. Extended Static group law: identity, inverse, associativity, cocycle
#    identity, and compatibility of the realization with composition.
#    Numeric with random elements.
# --------------------------------------------------------------------------

import math


def rot(theta):
    cth, sth = math.cos(theta), math.sin(theta)
    return ((cth, -sth), (sth, cth))


def mv(R, v):
    return (R[0][0] * v[0] + R[0][1] * v[1], R[1][0] * v[0] + R[1][1] * v[1])


def vadd(*vs):
    return (sum(v[0] for v in vs), sum(v[1] for v in vs))


def smul(s, v):
    return (s * v[0], s * v[1])


def dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


IDENT = (0.0, (0.0, 0.0), (0.0, 0.0), 0.0, 0.0, 0.0, 0.0, 0.0, (0.0, 0.0), (0.0, 0.0))
# element tuple: (theta, v, x, t, xi, phi, b, a, eta, l)


def compose(g, gp):
    th, v, x, t, xi, phi, b, a, eta, l = g
    thp, vp, xp, tp, xip, phip, bp, ap, etap, lp = gp
    R = rot(th)
    Rvp, Rxp = mv(R, vp), mv(R, xp)
    Retap, Rlp = mv(R, etap), mv(R, lp)
    dv = vadd(smul(tp, v), smul(-t, Rvp))   # t'v - t R v'
    dx = vadd(smul(tp, x), smul(-t, Rxp))   # t'x - t R x'
    c_xi = 0.5 * (dot(v, Rxp) - dot(x, Rvp))
    c_phi = dot(v, Rlp) + dot(dv, vadd(smul(1 / 3, v), smul(1 / 6, Rvp)))
    c_b = (
        dot(v, Retap)
        + dot(x, Rlp)
        + dot(dv, vadd(smul(1 / 3, x), smul(1 / 6, Rxp)))
        + dot(dx, vadd(smul(1 / 3, v), smul(1 / 6, Rvp)))
    )
    c_a = dot(x, Retap) + dot(dx, vadd(smul(1 / 3, x), smul(1 / 6, Rxp)))
    return (
        th + thp,
        vadd(v, Rvp),
        vadd(x, Rxp),
        t + tp,
        xi + xip + c_xi,
        phi + phip + c_phi,
        b + bp + c_b,
        a + ap + c_a,
        vadd(eta, Retap, smul(0.5, dx)),
        vadd(l, Rlp, smul(0.5, dv)),
    )


def inverse(g):
    th, v, x, t, xi, phi, b, a, eta, l = g
    Rm = rot(-th)
    return (
        -th,
        smul(-1, mv(Rm, v)),
        smul(-1, mv(Rm, x)),
        -t,
        -xi,
        -phi + dot(v, l),
        -b + dot(v, eta) + dot(x, l),
        -a + dot(x, eta),
        smul(-1, mv(Rm, eta)),
        smul(-1, mv(Rm, l)),
    )


def rand_elem(rng):
    def rv():
        return (rng.uniform(-2, 2), rng.uniform(-2, 2))

    return (
        rng.uniform(-3, 3), rv(), rv(), rng.uniform(-2, 2),
        rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1),
        rng.uniform(-1, 1), rv(), rv(),
    )


def elem_close(g, h, tol=1e-9):
    def flat(e):
        out = []
        for comp in e:
            if isinstance(comp, tuple):
                out.extend(comp)
            else:
                out.append(comp)
        return out

    return all(abs(a - b) <= tol * (1 + abs(a) + abs(b)) for a, b in zip(flat(g), flat(h)))


rng = random.Random(20260823)
ok_assoc = all(
    elem_close(
        compose(compose(g, h), k_), compose(g, compose(h, k_))
    )
    for g, h, k_ in (tuple(rand_elem(rng) for _ in range(3)) for _ in range(60))
)
check("group law associative over 60 random triples", ok_assoc)
g0 = rand_elem(rng)
check(
    "identity laws",
    elem_close(compose(g0, IDENT), g0) and elem_close(compose(IDENT, g0), g0),
)
ok_inv = all(
    elem_close(compose(g, inverse(g)), IDENT)
    and elem_close(compose(inverse(g), g), IDENT)
    for g in (rand_elem(rng) for _ in range(30))
)
check("two-sided inverse closed form", ok_inv)

# --- realization on the dual (numeric structure constants for the 14-dim algebra)
NCN = len(NC_BASIS)
NC_IDX = {nm: i for i, nm in enumerate(NC_BASIS)}
Cnum = [[[float(sp.nsimplify(Cnc[i][j][k])) for k in range(NCN)] for j in range(NCN)] for i in range(NCN)]


def ad_matrix(coords):
    """N[y][x] = coefficient of e_y in [A, e_x] for A = sum coords^i e_i."""
    N = [[0.0] * NCN for _ in range(NCN)]
    for i, ai in coords.items():
        if ai == 0.0:
            continue
        ii = NC_IDX[i]
        for x in range(NCN):
            for y in range(NCN):
                cv = Cnum[ii][x][y]
                if cv:
                    N[y][x] += ai * cv
    return N


def mat_apply_T(N, alpha):
    """alpha'(X) = sum_Y alpha(Y) N[Y][X]."""
    return [sum(alpha[y] * N[y][x] for y in range(NCN)) for x in range(NCN)]


def matmul(A, B):
    return [
        [sum(A[i][k] * B[k][j] for k in range(NCN)) for j in range(NCN)]
        for i in range(NCN)
    ]


def exp_neg_ad(coords):
    N = ad_matrix(coords)
    N2 = matmul(N, N)
    N3 = matmul(N2, N)
    assert all(abs(e) < 1e-12 for row in N3 for e in row), "nilpotency order exceeded"
    return [
        [
            (1.0 if i == j else 0.0) - N[i][j] + 0.5 * N2[i][j]
            for j in range(NCN)
        ]
        for i in range(NCN)
    ]


VEC_PAIRS = (("K1", "K2"), ("P1", "P2"), ("F1", "F2"), ("Pi1", "Pi2"))


def realize(g, alpha):
    th, v, x, t, xi, phi, b, a, eta, l = g
    out = list(alpha)
    R = rot(th)
    for n1, n2 in VEC_PAIRS:
        i1, i2 = NC_IDX[n1], NC_IDX[n2]
        out[i1], out[i2] = mv(R, (out[i1], out[i2]))
    A = {"K1": v[0], "K2": v[1], "P1": x[0], "P2": x[1], "H": t}
    out = mat_apply_T(exp_neg_ad(A), out)
    W = {"F1": eta[0], "F2": eta[1], "Pi1": l[0], "Pi2": l[1]}
    out = mat_apply_T(exp_neg_ad(W), out)
    return out


def rand_dual(rng):
    al = [rng.uniform(-2, 2) for _ in range(NCN)]
    # keep the chart nondegenerate: mu*kappa - beta^2 bounded away from 0
    al[NC_IDX["M'"]] = 2.0 + rng.random()
    al[NC_IDX["Lambda"]] = 3.0 + rng.random()
    al[NC_IDX["B"]] = rng.uniform(-0.5, 0.5)
    return al


ok_action = True
for _ in range(40):
    g, h = rand_elem(rng), rand_elem(rng)
    al = rand_dual(rng)
    lhs = realize(compose(g, h), al)
    rhs = realize(g, realize(h, al))
    if not all(abs(a - b) <= 1e-9 * (1 + abs(a) + abs(b)) for a, b in zip(lhs, rhs)):
        ok_action = False
        break
check("realization is compatible with composition (left action)", ok_action)


def invariants_num(al):
    jv = al[NC_IDX["J"]]
    kv = (al[NC_IDX["K1"]], al[NC_IDX["K2"]])
    pv = (al[NC_IDX["P1"]], al[NC_IDX["P2"]])
    fv = (al[NC_IDX["F1"]], al[NC_IDX["F2"]])
    Iv = (al[NC_IDX["Pi1"]], al[NC_IDX["Pi2"]])
    Ev = al[NC_IDX["H"]]
    mv_ = al[NC_IDX["M"]]
    muv = al[NC_IDX["M'"]]
    bev = al[NC_IDX["B"]]
    kav = al[NC_IDX["Lambda"]]
    Dv = muv * kav - bev**2

    def cr(a, b):
        return a[0] * b[1] - a[1] * b[0]

    s = jv - (
        kav * cr(kv, Iv) - bev * cr(pv, Iv) + muv * cr(pv, fv)
        - bev * cr(kv, fv) + mv_ * cr(fv, Iv)
    ) / Dv
    U = Ev + (
        muv * dot(fv, fv) - 2 * bev * dot(fv, Iv) + kav * dot(Iv, Iv)
    ) / (2 * (bev**2 - muv * kav))
    return s, U


ok_invariance = True
for _ in range(40):
    g = rand_elem(rng)
    al = rand_dual(rng)
    s0, U0 = invariants_num(al)
    s1, U1 = invariants_num(realize(g, al))
    if abs(s1 - s0) > 1e-8 * (1 + abs(s0)) or abs(U1 - U0) > 1e-8 * (1 + abs(U0)):
        ok_invariance = False
        break
check("spin and energy invariants conserved under realization", ok_invariance)

# One-parameter subgroups against the reference transformation formulas.
al = rand_dual(rng)
mval = al[NC_IDX["M"]]
muval = al[NC_IDX["M'"]]
beval = al[NC_IDX["B"]]
kaval = al[NC_IDX["Lambda"]]
kap_e_v = kaval - beval**2 / muval
mu_e_v = muval - beval**2 / kaval


def unpack(al):
    p = (al[NC_IDX["P1"]], al[NC_IDX["P2"]])
    k = (al[NC_IDX["K1"]], al[NC_IDX["K2"]])
    q = smul(-1 / kap_e_v, (al[NC_IDX["F1"]], al[NC_IDX["F2"]]))
    u = smul(1 / mu_e_v, (al[NC_IDX["Pi1"]], al[NC_IDX["Pi2"]]))
    return p, k, q, u


p0, k0, q0, u0 = unpack(al)
tval = 0.7
out = realize((0.0, (0.0, 0.0), (0.0, 0.0), tval, 0, 0, 0, 0, (0.0, 0.0), (0.0, 0.0)), al)
p1_, k1_, q1_, u1_ = unpack(out)
check(
    "pure time step: p -> p - t*kap_e*q, k -> k + t*mu_e*u, q,u fixed",
    elem_close((0, p1_, k1_, 0, 0, 0, 0, 0, q1_, u1_),
               (0, vadd(p0, smul(-tval * kap_e_v, q0)), vadd(k0, smul(tval * mu_e_v, u0)), 0, 0, 0, 0, 0, q0, u0)),
)
vv = (0.3, -0.5)
out = realize((0.0, vv, (0.0, 0.0), 0.0, 0, 0, 0, 0, (0.0, 0.0), (0.0, 0.0)), al)
p1_, k1_, q1_, u1_ = unpack(out)
check(
    "pure boost: q -> q + v*beta/kap_e, u -> u - (mu/mu_e) v, p -> p - m v, k fixed",
    elem_close(
        (0, p1_, k1_, 0, 0, 0, 0, 0, q1_, u1_),
        (0, vadd(p0, smul(-mval, vv)), k0, 0, 0, 0, 0, 0,
         vadd(q0, smul(beval / kap_e_v, vv)), vadd(u0, smul(-muval / mu_e_v, vv))),
    ),
)
xv = (-0.4, 0.8)
out = realize((0.0, (0.0, 0.0), xv, 0.0, 0, 0, 0, 0, (0.0, 0.0), (0.0, 0.0)), al)
p1_, k1_, q1_, u1_ = unpack(out)
check(
    "pure translation: q -> q + (kappa/kap_e) x, u -> u - (beta/mu_e) x, k -> k + m x, p fixed",
    elem_close(
        (0, p1_, k1_, 0, 0, 0, 0, 0, q1_, u1_),
        (0, p0, vadd(k0, smul(mval, xv)), 0, 0, 0, 0, 0,
         vadd(q0, smul(kaval / kap_e_v, xv)), vadd(u0, smul(-beval / mu_e_v, xv))),
    ),
)

# General element: position/velocity closed forms (ordering independent).
g = rand_elem(rng)
out = realize(g, al)
p1_, k1_, q1_, u1_ = unpack(out)
th, v, x, t, *_ = g
R = rot(th)
q_ref = vadd(mv(R, q0), smul(beval / kap_e_v, v), smul(kaval / kap_e_v, x))
u_ref = vadd(mv(R, u0), smul(-beval / mu_e_v, x), smul(-muval / mu_e_v, v))
check(
    "general element: q' and u' closed forms",
    elem_close((0, q1_, u1_, 0, 0, 0, 0, 0, (0, 0), (0, 0)),
               (0, q_ref, u_ref, 0, 0, 0, 0, 0, (0, 0), (0, 0))),
)
# Momentum closed forms for the single-exponential parameterization (midpoint form).
p_ref = vadd(
    mv(R, p0),
    smul(-t * kap_e_v / 2, vadd(mv(R, q0), q_ref)),
    smul(-mval, v),
    smul(kaval, g[8]),
    smul(beval, g[9]),
)
k_ref = vadd(
    mv(R, k0),
    smul(t * mu_e_v / 2, vadd(mv(R, u0), u_ref)),
    smul(mval, x),
    smul(muval, g[9]),
    smul(beval, g[8]),
)
check(
    "general element: p' and k' midpoint closed forms",
    elem_close((0, p1_, k1_, 0, 0, 0, 0, 0, (0, 0), (0, 0)),
               (0, p_ref, k_ref, 0, 0, 0, 0, 0, (0, 0), (0, 0))),
)

# --------------------------------------------------------------------------

print()
if FAILURES:
    print(f"{len(FAILURES)} checks FAILED")
    sys.exit(1)
print("all oracle checks passed")
