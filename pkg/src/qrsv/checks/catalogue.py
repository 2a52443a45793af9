"""The identity catalogue.

Most sides are written in the expression language so the parser and evaluator
run on every check; structural sides (Bailey pairs, Lovejoy sums, the
Appell-Lerch expansion of ``f_{2,3,2}``) call the engine directly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from qrsv.checks.builders import (
    AppellDifference,
    AppellExpansion,
    BaileyBeta,
    BaileySum,
    Expression,
    HeckeSide,
    LovejoyAtRoot,
    LovejoySide,
    SlaterSide,
)
from qrsv.checks.types import IdentityCheck, SidePair
from qrsv.series.bailey import BP1, BP2, BP3, LovejoyShape, SlaterId
from qrsv.series.core import Monomial

BAILEY_N_MAX = 30
SLATER_N_MAX = 25
F232_ELLS = (0, 1, 2)


def _f(x: int, y: int) -> str:
    return f"f(2,3,2; -q^{x}, -q^{y}; q^3)"


def _kl(x: int, y: int) -> str:
    return f"f(6,9,6; -q^{x}, -q^{y}; q)"


def _m(x: int, z: int, p: int = 30) -> str:
    return f"m(-q^{x}; q^{p}; q^{z})"


def _tq(numerator: str, denominator: str) -> str:
    """``J_30^3 * numerator / denominator`` over base ``q^30``."""
    return f"Jm(30)^3*{numerator}/({denominator})"


def _pair(label: str, lhs: str, rhs: str) -> SidePair:
    return SidePair(label, Expression(lhs), Expression(rhs))


def _check(
    id: str,
    description: str,
    anchor: str,
    order: int,
    *pairs: SidePair,
    scale: int = 1,
) -> IdentityCheck:
    return IdentityCheck(id, description, anchor, Fraction(order), tuple(pairs), scale)


def _nahm2(b: str, v: str = "0,0", a: str = "[[0,1/2],[1/2,0]]") -> str:
    return f'nahm("A={a} B=[{b}] v=[{v}] L=[[2,0],[0,2]]")'


CONJ1 = _nahm2("1/2,1/2")
CONJ2 = f"q^(-1/2)*{_nahm2('1/2,1', '1,0')}"
CONJ2_MIRROR = f"q^(-1/2)*{_nahm2('1,1/2', '0,1')}"
S_AT_ROOT = f"subs(Jm(1)^2*{CONJ1}; 1/2)"
T_AT_ROOT = f"subs(Jm(1)^2*{CONJ2}; 1/2)"

SLEM_HECKE = f"{_f(4, 4)} + 2*{_f(4, 5)} + {_f(5, 8)} - Jbar(1,6) - 2*Jbar(2,6)"
TLEM_HECKE = (
    f"{_f(7, 5)} - q*{_f(7, 8)} + q^-1*{_f(1, 4)} + {_f(5, 5)} - (1 + q^-1)*Jbar(1,6)"
)

# Theta quotients appearing in the W and M lemmas.
P1 = _tq("J(2,30)*Jbar(28,30)", "J(8,30)*J(6,30)*Jbar(22,30)*Jbar(20,30)")
P2 = _tq("J(14,30)*Jbar(16,30)", "J(8,30)*J(6,30)*Jbar(22,30)*Jbar(8,30)")
P3 = _tq("J(2,30)*Jbar(13,30)", "J(6,30)*J(8,30)*Jbar(5,30)*Jbar(7,30)")
P4 = _tq("J(14,30)*Jbar(1,30)", "J(6,30)*J(8,30)*Jbar(7,30)^2")
P5 = _tq("J(20,30)*Jbar(8,30)", "J(8,30)*J(12,30)*Jbar(4,30)*Jbar(16,30)")
P6 = _tq("J(4,30)*Jbar(16,30)", "J(8,30)*J(12,30)*Jbar(4,30)*Jbar(8,30)")
P7 = _tq("J(4,30)*Jbar(1,30)", "J(8,30)*J(12,30)*Jbar(19,30)*Jbar(23,30)")
P8 = _tq("J(20,30)*Jbar(7,30)", "J(12,30)*J(8,30)*Jbar(1,30)*Jbar(19,30)")

Q1 = _tq("J(8,30)*Jbar(17,30)", "J(2,30)*J(6,30)*Jbar(11,30)*Jbar(19,30)")
Q2 = _tq("J(10,30)*Jbar(7,30)", "J(2,30)*J(12,30)*Jbar(5,30)^2")
Q3 = _tq("J(8,30)*Jbar(2,30)", "J(2,30)*J(6,30)*Jbar(4,30)^2")
Q4 = _tq("J(10,30)*Jbar(22,30)", "J(2,30)*J(12,30)*Jbar(10,30)^2")
Q5 = _tq("J(20,30)*Jbar(4,30)", "J(8,30)*J(12,30)*Jbar(4,30)*Jbar(16,30)")
Q6 = _tq("J(2,30)*Jbar(1,30)", "J(6,30)*J(8,30)*Jbar(5,30)*Jbar(7,30)")
Q7 = _tq("J(20,30)*Jbar(19,30)", "J(8,30)*J(12,30)*Jbar(1,30)*Jbar(11,30)")
Q8 = _tq("J(2,30)*Jbar(16,30)", "J(6,30)*J(8,30)*Jbar(10,30)*Jbar(8,30)")

# (definition, rewritten through the functional equations, theta quotient)
W_FORMS: dict[int, tuple[str, str | None, str]] = {
    1: (
        f"{_m(14, 6)} + {_m(16, -8)}",
        f"{_m(14, 6)} + 1 - {_m(14, 8)}",
        f"1 - q^6*{P1}",
    ),
    2: (
        f"{_m(14, -6)} + {_m(16, -8)}",
        f"{_m(14, -6)} + 1 - {_m(14, 8)}",
        f"1 + {P2}",
    ),
    3: (
        f"q^-1*{_m(-1, 6)} + {_m(1, -8)}",
        f"-{_m(1, -6)} + {_m(1, -8)}",
        f"-q^5*{P3}",
    ),
    4: (
        f"q^-1*{_m(-1, -6)} + {_m(1, -8)}",
        f"-{_m(1, 6)} + {_m(1, -8)}",
        f"q^6*{P4}",
    ),
    5: (
        f"q^-4*{_m(-4, 8)} + {_m(4, 12)}",
        f"-{_m(4, -8)} + {_m(4, 12)}",
        f"-q^4*{P5}",
    ),
    6: (
        f"q^-4*{_m(-4, 8)} + {_m(4, -12)}",
        f"-{_m(4, -8)} + {_m(4, -12)}",
        f"-q^4*{P6}",
    ),
    7: (
        f"{_m(11, 8)} + {_m(19, -12)}",
        f"{_m(11, 8)} + 1 - {_m(11, 12)}",
        f"1 - q^7*{P7}",
    ),
    8: (
        f"{_m(11, 8)} + q^-11*{_m(-11, 12)}",
        f"{_m(11, 8)} - {_m(11, -12)}",
        f"-q*{P8}",
    ),
}

M_FORMS: dict[int, tuple[str, str | None, str]] = {
    1: (
        f"{_m(17, 2)} + {_m(13, 6)}",
        f"1 - {_m(13, -2)} + {_m(13, 6)}",
        f"1 - {Q1}",
    ),
    2: (
        f"{_m(7, -2)} + q^-7*{_m(-7, 12)}",
        f"{_m(7, -2)} - {_m(7, -12)}",
        Q2,
    ),
    3: (
        f"{_m(2, 2)} + q^-2*{_m(-2, 6)}",
        f"{_m(2, 2)} - {_m(2, -6)}",
        f"-q^2*{Q3}",
    ),
    4: (
        f"q^-8*{_m(-8, -2)} + {_m(8, 12)}",
        f"-{_m(8, 2)} + {_m(8, 12)}",
        f"q^2*{Q4}",
    ),
    5: (f"-{_m(8, 8)} + {_m(8, -12)}", None, f"q^4*{Q5}"),
    6: (f"-{_m(13, -8)} + {_m(13, -6)}", None, f"q^5*{Q6}"),
    7: (
        f"-q^-7*{_m(-7, 8)} + {_m(23, -12)}",
        f"1 - {_m(23, 8)} + {_m(23, -12)}",
        f"1 + q*{Q7}",
    ),
    8: (f"-{_m(-2, -8)} + {_m(-2, -6)}", None, f"q^8*{Q8}"),
}

# f_{2,3,2}(-q^x, -q^y, q^3) expanded with ell = 1.
F232_EXPANSIONS: dict[int, tuple[tuple[int, int], str]] = {
    1: (
        (4, 4),
        f"Jbar(2,6)*{_m(14, 6)} + Jbar(2,6)*{_m(14, -6)}"
        f" + q^-4*Jbar(1,6)*{_m(-1, 6)} + q^-4*Jbar(1,6)*{_m(-1, -6)}",
    ),
    2: (
        (4, 5),
        f"Jbar(1,6)*{_m(11, 8)} + Jbar(2,6)*{_m(16, -8)}"
        f" + q^-6*Jbar(2,6)*{_m(-4, 8)} + q^-3*Jbar(1,6)*{_m(1, -8)}",
    ),
    3: (
        (5, 8),
        f"q^-2*Jbar(2,6)*{_m(4, 12)} + Jbar(1,6)*{_m(19, -12)}"
        f" + q^-11*Jbar(1,6)*{_m(-11, 12)} + q^-2*Jbar(2,6)*{_m(4, -12)}",
    ),
    4: (
        (7, 5),
        f"Jbar(1,6)*{_m(17, 2)} + q^-1*Jbar(1,6)*{_m(7, -2)}"
        f" + q^-3*Jbar(2,6)*{_m(2, 2)} + q^-9*Jbar(2,6)*{_m(-8, -2)}",
    ),
    5: (
        (7, 8),
        f"q^-2*Jbar(2,6)*{_m(8, 8)} + q^-1*Jbar(1,6)*{_m(13, -8)}"
        f" + q^-9*Jbar(5,6)*{_m(-7, 8)} + q^-6*Jbar(2,6)*{_m(-2, -8)}",
    ),
    6: (
        (1, 4),
        f"Jbar(2,6)*{_m(8, 12)} + Jbar(1,6)*{_m(23, -12)}"
        f" + q^-7*Jbar(1,6)*{_m(-7, 12)} + Jbar(2,6)*{_m(8, -12)}",
    ),
    7: (
        (5, 5),
        f"Jbar(1,6)*{_m(13, 6)} + Jbar(1,6)*{_m(13, -6)}"
        f" + q^-5*Jbar(2,6)*{_m(-2, 6)} + q^-5*Jbar(2,6)*{_m(-2, -6)}",
    ),
}

# (x, y) instances for the ell-independence check; x = y is skipped at ell = 0
# where a theta factor of the expansion vanishes.
F232_INSTANCES = ((4, 5), (5, 8), (7, 5), (7, 8), (1, 4), (4, 4), (5, 5))

# (x exponent, base exponent p, z0 exponent, z1 exponent) with x = -q^x
MMINUS_INSTANCES = ((14, 30, 8, 6), (1, 30, -6, -8), (4, 30, -8, 12), (1, 5, 1, 2))

SPROOF_THETA = (
    f"Jbar(2,6)*(-q^6*{P1} + {P2} - q^2*{P5} - q^2*{P6})"
    f" + Jbar(1,6)*(-q^2*{P3} + q^3*{P4} - q^7*{P7} - q*{P8})"
)
TPROOF_THETA = (
    f"Jbar(1,6)*(-{Q1} + q^-1*{Q2} + q^5*{Q6} + {Q7})"
    f" + Jbar(2,6)*(-q^-1*{Q3} + q*{Q4} + q^3*{Q5} + q^3*{Q8})"
)


def _w(i: int) -> str:
    return f"({W_FORMS[i][0]})"


def _mm(i: int) -> str:
    return f"({M_FORMS[i][0]})"


def _warmups() -> list[IdentityCheck]:
    wz_rhs = "poch(q^8; 8; inf)/(poch(q; 2; inf)^2*poch(q^4; 8; inf))"
    wz = "A=[[0,1],[1,0]] B=[1/2,1/2] L=[[2,0],[0,2]]"
    conj2_rhs = "1/(poch(q; 2; inf)^2*poch(q^4, q^6; 10; inf))"
    return [
        _check(
            "rr1",
            "sum q^(n^2)/(q;q)_n equals 1/(q,q^4;q^5)_inf",
            "Rogers-Ramanujan first identity",
            100,
            _pair("", 'nahm("A=[[2]] B=[0]")', "1/poch(q, q^4; 5; inf)"),
        ),
        _check(
            "rr2",
            "sum q^(n^2+n)/(q;q)_n equals 1/(q^2,q^3;q^5)_inf",
            "Rogers-Ramanujan second identity",
            100,
            _pair("", 'nahm("A=[[2]] B=[1]")', "1/poch(q^2, q^3; 5; inf)"),
        ),
        _check(
            "wz",
            "sum q^(4ij+i+3j)/((q;q)_(2i+1)(q;q)_(2j)) as a coset Nahm sum",
            "rank-two coset identity",
            100,
            _pair("v=(1,0)", f'q^(-1/2)*nahm("{wz} v=[1,0]")', wz_rhs),
            _pair("v=(0,1)", f'q^(-1/2)*nahm("{wz} v=[0,1]")', wz_rhs),
        ),
        _check(
            "conj1",
            "sum q^(2ij+i+j)/((q;q)_(2i)(q;q)_(2j)) equals a product",
            "first partial Nahm sum identity",
            100,
            _pair("", CONJ1, "1/(poch(q; 2; inf)^2*poch(q^2, q^8; 10; inf))"),
        ),
        _check(
            "conj2",
            "sum q^(2ij+i+3j)/((q;q)_(2i+1)(q;q)_(2j)) equals a product",
            "second partial Nahm sum identity",
            100,
            _pair("v=(1,0)", CONJ2, conj2_rhs),
            _pair("v=(0,1)", CONJ2_MIRROR, conj2_rhs),
        ),
        _check(
            "sprod",
            "S(q^(1/2)) from the first Nahm sum equals J_1 J_{2,5}",
            "product form of S",
            75,
            _pair("", S_AT_ROOT, "Jm(1)*J(2,5)"),
            scale=2,
        ),
        _check(
            "tprod",
            "T(q^(1/2)) from the second Nahm sum equals J_1 J_{1,5}",
            "product form of T",
            75,
            _pair("", T_AT_ROOT, "Jm(1)*J(1,5)"),
            scale=2,
        ),
    ]


def _bailey_layer() -> list[IdentityCheck]:
    checks = []
    for which, rhs_text in (
        (SlaterId.FIRST, "(1-q^(6r+1)) q^(6r^2-r)"),
        (SlaterId.SECOND, "(1-q^(6r+2)) q^(6r^2+r)"),
    ):
        checks.append(
            _check(
                which.value,
                f"finite Slater identity with numerator {rhs_text}, n <= {SLATER_N_MAX}",
                f"Slater's finite identity ({which.name.lower()})",
                80,
                *(
                    SidePair(f"n={n}", SlaterSide(which, n, False), SlaterSide(which, n, True))
                    for n in range(SLATER_N_MAX + 1)
                ),
            )
        )
    for pair in (BP1, BP2, BP3):
        checks.append(
            _check(
                pair.pair_id.value.lower(),
                f"{pair} satisfies the Bailey pair relation for n <= {BAILEY_N_MAX}",
                f"Bailey pair {pair} relative to q^{pair.relative}",
                80,
                *(
                    SidePair(f"n={n}", BaileyBeta(pair, n), BaileySum(pair, n))
                    for n in range(BAILEY_N_MAX + 1)
                ),
            )
        )
    for shape, conj in ((LovejoyShape.S, CONJ1), (LovejoyShape.T, CONJ2)):
        pair_a, pair_z = shape.pairs
        checks.append(
            _check(
                f"lovejoy{shape.value}",
                f"Lovejoy's transform with ({pair_a}, {pair_z}) and the Nahm sum of {shape.value}",
                f"Lovejoy's double Bailey transform for {shape.value}",
                60,
                SidePair(
                    "transform",
                    LovejoySide(shape, transformed=False),
                    LovejoySide(shape, transformed=True),
                ),
                SidePair("nahm", Expression(conj), LovejoySide(shape, transformed=False)),
            )
        )
    return checks


def _hecke_layer() -> list[IdentityCheck]:
    checks = [
        _check(
            "slem",
            "S(q^(1/2)) as f_{2,3,2} series minus theta functions",
            "Hecke-type expansion of S",
            200,
            _pair("nahm", S_AT_ROOT, SLEM_HECKE),
            SidePair("lovejoy", LovejoyAtRoot(LovejoyShape.S), Expression(SLEM_HECKE)),
        ),
        _check(
            "tlem",
            "T(q^(1/2)) as f_{2,3,2} series minus theta functions",
            "Hecke-type expansion of T",
            200,
            _pair("nahm", T_AT_ROOT, TLEM_HECKE),
            SidePair("lovejoy", LovejoyAtRoot(LovejoyShape.T), Expression(TLEM_HECKE)),
        ),
    ]
    for index, ((x, y), expansion) in F232_EXPANSIONS.items():
        checks.append(
            _check(
                f"f232exp-{index}",
                f"f_{{2,3,2}}(-q^{x},-q^{y},q^3) through Appell-Lerch sums with ell=1",
                f"Appell-Lerch expansion of f_{{2,3,2}}(-q^{x},-q^{y},q^3)",
                200,
                _pair("", _f(x, y), expansion),
            )
        )
    checks.append(
        _check(
            "f232ell",
            "the Appell-Lerch expansion of f_{2,3,2} does not depend on ell",
            "Appell-Lerch expansion of f_{2,3,2} for every ell",
            200,
            *(
                SidePair(
                    f"ell={ell} x=-q^{x} y=-q^{y}", HeckeSide(x, y), AppellExpansion(x, y, ell)
                )
                for x, y in F232_INSTANCES
                for ell in F232_ELLS
                if ell or x != y
            ),
        )
    )
    checks.extend(
        [
            _check(
                "fid0",
                "f(x,y) = -q^(a+b+c)/(xy) f(q^(2a+b)/x, q^(2c+b)/y)",
                "Hecke-type reflection",
                200,
                _pair("x=-q^4 y=-q^5", _f(4, 5), f"-q^12*{_f(17, 16)}"),
                _pair("x=-q^5 y=-q^7", _f(5, 7), f"-q^9*{_f(16, 14)}"),
                _pair("base q", _kl(5, 7), f"-q^9*{_kl(16, 14)}"),
            ),
            _check(
                "fid1",
                "f(x,y) = -y f(q^b x, q^c y) + j(x; q^a)",
                "Hecke-type shift in y",
                200,
                _pair("x=-q^4 y=-q^4", _f(4, 4), f"q^4*{_f(13, 10)} + j(-q^4; q^6)"),
                _pair("x=-q^7 y=-q^5", _f(7, 5), f"q^5*{_f(16, 11)} + j(-q^7; q^6)"),
            ),
            _check(
                "fid2",
                "f(x,y) = -x f(q^a x, q^b y) + j(y; q^c)",
                "Hecke-type shift in x",
                200,
                _pair("x=-q^4 y=-q^5", _f(4, 5), f"q^4*{_f(10, 14)} + j(-q^5; q^6)"),
                _pair("x=-q^5 y=-q^8", _f(5, 8), f"q^5*{_f(11, 17)} + j(-q^8; q^6)"),
            ),
            _check(
                "mid1",
                "m(x,q,z) = m(x,q,qz)",
                "Appell-Lerch periodicity in z",
                200,
                _pair("x=-q^14 z=q^6", _m(14, 6), _m(14, 36)),
                _pair("x=-q^7 z=q^-2", _m(7, -2), _m(7, 28)),
            ),
            _check(
                "mid2",
                "m(x,q,z) = x^-1 m(x^-1,q,z^-1)",
                "Appell-Lerch inversion",
                200,
                _pair("x=-q^-7 z=q^12", _m(-7, 12), f"-q^7*{_m(7, -12)}"),
                _pair("x=-q^-1 z=q^6", _m(-1, 6), f"-q*{_m(1, -6)}"),
            ),
            _check(
                "mid3",
                "m(qx,q,z) = 1 - x m(x,q,z)",
                "Appell-Lerch shift in x",
                200,
                _pair("x=-q^-7 z=q^8", _m(23, 8), f"1 + q^-7*{_m(-7, 8)}"),
                _pair("x=-q^13 z=q^8", _m(43, 8), f"1 + q^13*{_m(13, 8)}"),
                _pair("x=-q^-13 z=q^2", _m(17, 2), f"1 + q^-13*{_m(-13, 2)}"),
            ),
            _check(
                "mid4",
                "m(x,q,z^-1) = 1 - m(q/x,q,z)",
                "Appell-Lerch reflection",
                200,
                _pair("x=-q^16 z=q^8", _m(16, -8), f"1 - {_m(14, 8)}"),
                _pair("x=-q^17 z=q^-2", _m(17, 2), f"1 - {_m(13, -2)}"),
                _pair("x=-q^19 z=q^12", _m(19, -12), f"1 - {_m(11, 12)}"),
            ),
            _check(
                "mminus",
                "m(x,q,z1) - m(x,q,z0) as a theta quotient",
                "difference of Appell-Lerch sums",
                200,
                *(
                    SidePair(
                        f"x=-q^{x} p={p} z0=q^{z0} z1=q^{z1}",
                        Expression(f"{_m(x, z1, p)} - {_m(x, z0, p)}"),
                        AppellDifference(Monomial.q(x, sign=-1), p, z0, z1),
                    )
                    for x, p, z0, z1 in MMINUS_INSTANCES
                ),
            ),
        ]
    )
    return checks


def _theta_layer() -> list[IdentityCheck]:
    checks = []
    for family, forms in (("w", W_FORMS), ("m", M_FORMS)):
        for index, (definition, middle, product) in forms.items():
            name = f"{family.upper()}{index}"
            pairs = [_pair("definition", definition, product)]
            if middle is not None:
                pairs = [
                    _pair("functional equations", definition, middle),
                    _pair("theta quotient", middle, product),
                ]
            checks.append(
                _check(
                    f"{family}{index}",
                    f"{name} as a theta quotient over base q^30",
                    f"Appell-Lerch pair {name}",
                    300,
                    *pairs,
                )
            )
    s1 = f"{_f(4, 4)} + 2*{_f(4, 5)} + {_f(5, 8)}"
    t1 = f"{_f(7, 5)} - q*{_f(7, 8)} + q^-1*{_f(1, 4)} + {_f(5, 5)}"
    checks.extend(
        [
            _check(
                "s1w",
                "the f_{2,3,2} part of S in terms of W1..W8",
                "S1 through the W sums",
                300,
                _pair(
                    "",
                    s1,
                    f"Jbar(2,6)*({_w(1)} + {_w(2)} + q^-2*{_w(5)} + q^-2*{_w(6)})"
                    f" + Jbar(1,6)*(q^-3*{_w(3)} + q^-3*{_w(4)} + {_w(7)} + {_w(8)})",
                ),
            ),
            _check(
                "t1m",
                "the f_{2,3,2} part of T in terms of M1..M8",
                "T1 through the M sums",
                300,
                _pair(
                    "",
                    t1,
                    f"Jbar(1,6)*({_mm(1)} + q^-1*{_mm(2)} + {_mm(6)} + q^-1*{_mm(7)})"
                    f" + Jbar(2,6)*(q^-3*{_mm(3)} + q^-1*{_mm(4)}"
                    f" + q^-1*{_mm(5)} + q^-5*{_mm(8)})",
                ),
            ),
            _check(
                "sproof",
                "S(q^(1/2)) as a sum of theta quotients equals J_1 J_{2,5}",
                "theta quotient form of S",
                75,
                _pair("nahm", S_AT_ROOT, SPROOF_THETA),
                _pair("product", SPROOF_THETA, "Jm(1)*J(2,5)"),
                scale=2,
            ),
            _check(
                "tproof",
                "T(q^(1/2)) as a sum of theta quotients equals J_1 J_{1,5}",
                "theta quotient form of T",
                75,
                _pair("nahm", T_AT_ROOT, TPROOF_THETA),
                _pair("product", TPROOF_THETA, "Jm(1)*J(1,5)"),
                scale=2,
            ),
        ]
    )
    return checks


def _second_proof() -> list[IdentityCheck]:
    kl1 = (
        f"{_kl(5, 4)} - q*{_kl(7, 7)} - q^2*{_kl(8, 10)} + q^4*{_kl(10, 13)}",
        f"{_f(5, 4)} - q*{_f(7, 7)} - q^2*{_f(8, 10)} + q^4*{_f(10, 13)}",
    )
    kl2 = (
        f"{_kl(5, 5)} - q*{_kl(8, 7)} - q*{_kl(7, 8)} + q^3*{_kl(10, 10)}",
        f"{_f(5, 5)} - q*{_f(8, 7)} - q*{_f(7, 8)} + q^3*{_f(10, 10)}",
    )
    equiv1_lhs = f"{_f(4, 4)} + 2*{_f(4, 5)} + {_f(5, 8)} - Jbar(1,6) - 2*Jbar(2,6)"
    equiv2_lhs = f"{_f(7, 5)} + q^-1*{_f(1, 4)} - (1 + q^-1)*Jbar(1,6)"
    snd2 = f"{_f(4, 5)} - q^5*{_f(13, 11)}"
    snd3 = f"{_f(5, 8)} - q^8*{_f(14, 14)}"
    snd5 = f"q^7*{_f(14, 13)} + j(-q^5; q^6)"
    return [
        _check(
            "kl1",
            "J_1^2/(q,q^4;q^5)_inf as f_{6,9,6} series",
            "Kim-Lovejoy first identity",
            150,
            _pair("base q", "Jm(1)^2/poch(q, q^4; 5; inf)", kl1[0]),
            _pair("base q^3", kl1[0], kl1[1]),
        ),
        _check(
            "kl2",
            "J_1^2/(q^2,q^3;q^5)_inf as f_{6,9,6} series",
            "Kim-Lovejoy second identity",
            150,
            _pair("base q", "Jm(1)^2/poch(q^2, q^3; 5; inf)", kl2[0]),
            _pair("base q^3", kl2[0], kl2[1]),
        ),
        _check(
            "equiv1",
            "the Hecke form of S matches the first Kim-Lovejoy sum",
            "reduction of S to the first Kim-Lovejoy sum",
            150,
            _pair("symmetry", _f(4, 5), _f(5, 4)),
            _pair("", equiv1_lhs, kl1[1]),
        ),
        _check(
            "equiv2",
            "the Hecke form of T matches the second Kim-Lovejoy sum",
            "reduction of T to the second Kim-Lovejoy sum",
            150,
            _pair(
                "before cancellation",
                f"{_f(7, 5)} + {_f(5, 5)} + q^-1*{_f(1, 4)} - q*{_f(7, 8)} - (1 + q^-1)*Jbar(1,6)",
                kl2[1],
            ),
            _pair("", equiv2_lhs, f"-q*{_f(7, 8)} + q^3*{_f(10, 10)}"),
        ),
        _check(
            "snd1",
            "f(-q^4,-q^4) = q^4 f(-q^13,-q^10) + Jbar_{2,6}",
            "second proof, first reduction",
            150,
            _pair("", _f(4, 4), f"q^4*{_f(13, 10)} + Jbar(2,6)"),
        ),
        _check(
            "snd2",
            "f(-q^4,-q^5) + q^2 f(-q^8,-q^10) = Jbar_{2,6}",
            "second proof, second reduction",
            150,
            _pair("shift", f"{_f(4, 5)} + q^2*{_f(8, 10)}", snd2),
            _pair("theta", snd2, "Jbar(2,6)"),
        ),
        _check(
            "snd3",
            "f(-q^5,-q^8) + q f(-q^7,-q^7) = Jbar_{1,6}",
            "second proof, third reduction",
            150,
            _pair("shift", f"{_f(5, 8)} + q*{_f(7, 7)}", snd3),
            _pair("theta", snd3, "Jbar(1,6)"),
        ),
        _check(
            "snd4",
            "f(-q,-q^4) = q^4 f(-q^10,-q^10) + Jbar_{1,6}",
            "second proof, fourth reduction",
            150,
            _pair("", _f(1, 4), f"q^4*{_f(10, 10)} + Jbar(1,6)"),
        ),
        _check(
            "snd5",
            "f(-q^5,-q^7) = -q f(-q^7,-q^8) + Jbar_{1,6}",
            "second proof, fifth reduction",
            150,
            _pair("shift", _f(5, 7), snd5),
            _pair("theta", snd5, f"-q*{_f(7, 8)} + Jbar(1,6)"),
        ),
    ]


@lru_cache(maxsize=1)
def catalogue() -> tuple[IdentityCheck, ...]:
    """Every check in its stable listing order."""
    checks = [*_warmups(), *_bailey_layer(), *_hecke_layer(), *_theta_layer(), *_second_proof()]
    seen: set[str] = set()
    for check in checks:
        if check.id in seen:
            raise RuntimeError(f"duplicate check id `{check.id}`")
        seen.add(check.id)
    return tuple(checks)
