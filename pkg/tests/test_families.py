import pytest
from fractions import Fraction

from msing.algebra import Poly, det, parse_poly, pfaffian, variables
from msing.families import (
    FamilyFormatError, build_A1, build_boundary, build_corner, build_L,
    build_table1, catalog_build, catalog_ids, family_to_text, match_table1,
    parse_family_file, recognize_reduced_shape, solve_weights, stabilize,
    verify_euler_identity,
)


def test_build_L_sym_2_matches_hand_form():
    fam = build_L("sym", 2)
    x12, x22 = variables("x12 x22")
    assert fam.vars == ("x12", "x22")
    assert fam.matrix[0, 0] == -x22
    assert fam.matrix[0, 1] == x12
    assert fam.matrix[1, 1] == x22
    # det(I + L) = 1 - x22^2 - x12^2
    one = Poly.const(1)
    d = det([[one + fam.matrix[0, 0], fam.matrix[0, 1]],
             [fam.matrix[1, 0], one + fam.matrix[1, 1]]])
    assert d == 1 - x22**2 - x12**2


def test_build_L_sk_4_corner():
    fam = build_L("sk", 4)
    assert fam.vars == ("x13", "x14", "x23", "x24", "x34")
    assert fam.matrix[0, 1] == -parse_poly("x34")
    # Pf = m12*m34 - m13*m24 + m14*m23 with m12 = -x34
    assert pfaffian(fam.matrix) == parse_poly("-x34^2 - x13*x24 + x14*x23")


def test_build_A1_sym_2_1():
    fam = build_A1("sym", 2, 1)
    assert fam.matrix[0, 0] == parse_poly("-x22 - z1^2")
    assert fam.matrix[0, 1] == parse_poly("x12")
    assert fam.matrix[1, 1] == parse_poly("x22")
    ws = solve_weights(fam)
    assert ws.var_weights == {"x12": 2, "x22": 2, "z1": 1}
    assert ws.delta == (1, 1)
    assert verify_euler_identity(fam, ws)


def test_build_A1_with_param():
    fam = build_A1("sym", 2, 1, with_param=True)
    assert fam.params == ("lam",)
    assert fam.matrix[0, 0] == parse_poly("lam - x22 - z1^2")
    germ = fam.specialize_params()
    assert germ.params == ()
    assert germ.matrix[0, 0] == parse_poly("-x22 - z1^2")


def test_build_A1_sk():
    fam = build_A1("sk", 4, 1)
    assert fam.matrix[0, 1] == parse_poly("-x34 - z1^2")
    assert fam.matrix[1, 0] == parse_poly("x34 + z1^2")


def test_table1_I2_form_and_weights():
    fam = build_table1("I2")
    assert fam.params == ("lam0", "lam1")
    assert fam.matrix[0, 1] == parse_poly("lam1")
    assert fam.matrix[1, 1] == parse_poly("y + x + lam0")
    ws = solve_weights(fam)
    assert ws.var_weights == {"x": 2, "y": 2, "z": 2, "w": 2}
    assert ws.param_weights == {"lam0": 2, "lam1": 2}
    assert ws.delta == (1, 1, 1)
    assert verify_euler_identity(fam, ws)


def test_table1_I_with_k_argument():
    fam = build_table1("I", k=2)
    assert fam.name == "I3"
    assert fam.matrix[1, 1] == parse_poly("y + x^2 + lam1*x + lam0")


def test_table1_II4_weights_frozen():
    # entry degrees force 2*w_w = w_x/... solving the linear system by hand
    # gives delta = (7, 5, 3), weights (x, y, z, w) = (14, 10, 8, 6)
    fam = build_table1("II4")
    ws = solve_weights(fam)
    assert ws.var_weights == {"x": 14, "y": 10, "z": 8, "w": 6}
    assert ws.delta == (7, 5, 3)
    assert verify_euler_identity(fam, ws)


def test_table1_square_variant():
    fam = build_table1("II4_sq")
    assert fam.kind == "sq"
    assert fam.vars == ("x", "y", "z", "w", "u12", "u13", "u23")
    assert fam.matrix[0, 1] - fam.matrix[1, 0] == parse_poly("2*u12")
    assert fam.matrix[0, 1] + fam.matrix[1, 0] == parse_poly("2*(w^2 + lam1*w + lam0)")
    ws = solve_weights(fam)
    assert ws.var_weights["u12"] == 12
    assert ws.delta == ws.delta_prime == (7, 5, 3)


def test_table1_rejects_bad_ids():
    for bad in ("II7", "I1", "Q3", "II"):
        with pytest.raises(ValueError):
            build_table1(bad)


def test_euler_identity_detects_inhomogeneous():
    fam = parse_family_file(
        "family bad\nkind sym\nsize 2\nvars a b\n"
        "entry 1 1 : a + a^2\nentry 1 2 : b\nentry 2 2 : a\n")
    assert solve_weights(fam) is None


def test_solve_weights_positivity_rejection():
    # a constant term next to a variable forces weight 0: not quasi-homogeneous
    fam = parse_family_file(
        "family bad\nkind sym\nsize 2\nvars a b\n"
        "entry 1 1 : a + 1\nentry 1 2 : b\nentry 2 2 : a\n")
    assert solve_weights(fam) is None
    # a solvable shifted-degree pattern for contrast
    ok = parse_family_file(
        "family ok\nkind sym\nsize 2\nvars a b\n"
        "entry 1 1 : a\nentry 1 2 : a*b^2\nentry 2 2 : a*b^4\n")
    assert solve_weights(ok) is not None


def test_stabilize_preserves_det_and_pf():
    fam = build_A1("sym", 2, 1)
    st = stabilize(fam, 4)
    assert st.n == 4
    assert det(st.matrix) == det(fam.matrix)
    sk = build_A1("sk", 4, 1)
    stk = stabilize(sk, 6)
    assert pfaffian(stk.matrix) == pfaffian(sk.matrix)
    ws = solve_weights(st)
    assert ws is not None and verify_euler_identity(st, ws)


def test_family_file_round_trip():
    for cid in ("I3", "II5", "A1_sk_4_1", "bd_sym_3_C3", "II4_sq"):
        fam = catalog_build(cid)
        text = family_to_text(fam)
        back = parse_family_file(text)
        assert back.kind == fam.kind and back.n == fam.n
        assert back.vars == fam.vars and back.params == fam.params
        assert back.matrix == fam.matrix
        assert back.boundary_var == fam.boundary_var


def test_family_file_errors():
    base = "family f\nkind sym\nsize 2\nvars a b\n"
    with pytest.raises(FamilyFormatError):
        parse_family_file(base + "entry 2 1 : a\n")  # sym lower triangle
    with pytest.raises(FamilyFormatError):
        parse_family_file(base + "entry 1 1 : a\nentry 1 1 : b\n")  # duplicate
    with pytest.raises(FamilyFormatError):
        parse_family_file(base + "entry 1 1 : q\n")  # undeclared name
    with pytest.raises(FamilyFormatError):
        parse_family_file("family f\nkind pear\nsize 2\nvars a\n")
    with pytest.raises(FamilyFormatError):
        parse_family_file("family f\nkind sk\nsize 2\nvars a\nentry 1 1 : a\n")


def test_family_file_comments_and_weights():
    fam = parse_family_file(
        "# comment\nfamily f\nkind sq\nsize 2\nvars a:2 b:1\n"
        "entry 1 2 : a  # trailing comment\nentry 2 1 : b^2\n")
    assert fam.declared_weights == {"a": 2, "b": 1}
    assert fam.matrix[0, 0].is_zero()


def test_recognize_corner_and_boundary_shapes():
    kind, g = recognize_reduced_shape(build_A1("sym", 3, 2))[:2]
    assert kind == "corner"
    assert g == parse_poly("-z1^2 - z2^2")
    fam = build_boundary("sym", 3, parse_poly("x22*z1 + z1^3"))
    tag, h, bvar = recognize_reduced_shape(fam)
    assert tag == "boundary" and bvar == "x22"
    assert h == parse_poly("x22*z1 + z1^3")
    sk = build_boundary("sk", 4, parse_poly("x34^2"))
    tag, h, bvar = recognize_reduced_shape(sk)
    assert tag == "boundary" and bvar == "x34"
    # a family that is neither
    assert recognize_reduced_shape(build_table1("II4")) is None


def test_match_table1_after_renaming():
    from msing.algebra import PolyMatrix
    from msing.families import MatrixFamily
    fam = build_table1("I3")
    names = {"x": "p", "y": "q", "z": "r", "w": "s"}
    ambient = tuple(names[v] for v in fam.vars) + fam.params
    sub = {old: Poly.var(new, ambient) for old, new in names.items()}
    rows = [[e.substitute(sub).extended(ambient) for e in row]
            for row in fam.matrix.rows]
    renamed = MatrixFamily(name="mystery", kind="sym", n=3,
                           vars=tuple(names[v] for v in fam.vars),
                           params=fam.params, matrix=PolyMatrix("sym", rows))
    assert match_table1(renamed) == "I3"
    assert match_table1(build_table1("II5_sq")) == "II5_sq"


def test_catalog_ids_all_build():
    for cid in catalog_ids():
        fam = catalog_build(cid)
        ws = solve_weights(fam)
        assert ws is not None, cid
        assert verify_euler_identity(fam, ws), cid
