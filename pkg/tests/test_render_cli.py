import json
import math
import re

import pytest

from coxlow import (
    INF,
    RenderOptions,
    build_automaton,
    build_root_system,
    convex_hull_2d,
    dihedral_matrix,
    group_to_json,
    hulls_equal,
    load_root_system,
    normalize_projective,
    parse_group_file,
    render_svg,
    small_roots,
    triangle_matrix,
)
from coxlow.cli import main
from coxlow.errors import (
    ParseError,
    RankNotThree,
    ValidationError,
    ZeroSum,
)

UNIVERSAL_JSON = """{
  "rank": 3,
  "coxeter": [[1, "inf", "inf"], ["inf", 1, "inf"], ["inf", "inf", 1]],
  "backend": "float"
}"""


# -- projective chart ---------------------------------------------------

def test_normalize_projective_examples(battery):
    rs, _, _ = battery.get("universal")
    tri = [(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)]
    for s in range(3):
        assert normalize_projective(rs, rs.simple_roots[s]) == pytest.approx(tri[s])
    mid = normalize_projective(rs, (1, 1, 0))
    assert mid == pytest.approx((0.5, 0.0))


def test_normalize_projective_dihedral_point():
    rs = build_root_system(dihedral_matrix(INF))
    # alpha_t + 2 alpha_s sits 2/3 of the way from the t-vertex to the s-vertex
    assert normalize_projective(rs, (2, 1)) == pytest.approx((1 / 3, 0.0))


def test_normalize_projective_scale_invariant(battery):
    rs, _, _ = battery.get("affine-3-3-3")
    v = (0.3, 1.7, 0.2)
    doubled = tuple(2 * c for c in v)
    assert normalize_projective(rs, v) == pytest.approx(
        normalize_projective(rs, doubled))


def test_normalize_projective_zero_sum():
    rs = build_root_system(dihedral_matrix(INF))
    with pytest.raises(ZeroSum):
        normalize_projective(rs, (1.0, -1.0))


def test_chart_rank_guard(battery):
    from coxlow.projective import chart_vertices
    with pytest.raises(RankNotThree):
        chart_vertices(4)


# -- hulls --------------------------------------------------------------

def test_convex_hull_degenerate():
    assert convex_hull_2d([(0.2, 0.3), (0.2, 0.3)]) == ((0.2, 0.3),)
    seg = convex_hull_2d([(0, 0), (0.5, 0.0), (1, 0)])
    assert seg == ((0, 0), (1, 0))


def test_convex_hull_square():
    pts = [(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5), (0.3, 0.9)]
    assert convex_hull_2d(pts) == ((0, 0), (0, 1), (1, 0), (1, 1))


def test_hulls_equal_tolerance():
    h1 = ((0.0, 0.0), (1.0, 0.0))
    h2 = ((1e-8, -1e-8), (1.0, 1e-8))
    assert hulls_equal(h1, h2)
    assert not hulls_equal(h1, ((0.0, 0.0),))
    assert not hulls_equal(h1, ((0.0, 0.0), (1.0, 0.1)))


# -- SVG rendering ------------------------------------------------------

def test_render_requires_rank3():
    rs = build_root_system(dihedral_matrix(3))
    with pytest.raises(RankNotThree):
        render_svg(rs, small_roots(rs))


def test_render_options_validate():
    with pytest.raises(ValidationError):
        RenderOptions(depth=0).validate()
    with pytest.raises(ValidationError):
        RenderOptions(size=50).validate()


def test_render_byte_stable(battery):
    rs, sigma, aut = battery.get("affine-3-3-3")
    opts = RenderOptions(depth=3, show_lambda_polytopes=True, labels=True)
    a = render_svg(rs, sigma, aut.states, opts)
    b = render_svg(rs, sigma, aut.states, opts)
    assert a == b
    assert a.startswith("<svg") and a.rstrip().endswith("</svg>")


def test_render_universal_depth1(battery):
    rs, sigma, _ = battery.get("universal")
    svg = render_svg(rs, sigma, opts=RenderOptions(depth=1))
    # exactly the 3 highlighted small-root dots, no others
    assert svg.count('r="4"') == 3
    assert svg.count('r="2.5"') == 0


def _point_segment_dist(p, a, b):
    ax, ay = a
    vx, vy = b[0] - ax, b[1] - ay
    t = ((p[0] - ax) * vx + (p[1] - ay) * vy) / (vx * vx + vy * vy)
    t = max(0.0, min(1.0, t))
    return math.hypot(p[0] - (ax + t * vx), p[1] - (ay + t * vy))


def test_sigma_points_on_triangle_edges(battery):
    # groups passing the edge condition draw Sigma on the triangle boundary
    rs, sigma, _ = battery.get("affine-3-3-3")
    svg = render_svg(rs, sigma, opts=RenderOptions(depth=3))
    corners = re.search(r'<polygon points="([^"]+)"', svg).group(1)
    tri = [tuple(map(float, xy.split(","))) for xy in corners.split()]
    reds = re.findall(r'<circle cx="([0-9.]+)" cy="([0-9.]+)" r="4"', svg)
    assert len(reds) == len(sigma) == 6
    for sx, sy in reds:
        p = (float(sx), float(sy))
        d = min(_point_segment_dist(p, tri[i], tri[(i + 1) % 3])
                for i in range(3))
        assert d <= 0.5, p


# -- group files --------------------------------------------------------

def test_parse_group_file_minimal():
    matrix, overrides, backend = parse_group_file(
        '{"rank": 2, "coxeter": [[1, 3], [3, 1]]}')
    assert matrix[0, 1] == 3 and overrides == {} and backend == "float"


def test_parse_group_file_inf_and_override():
    matrix, overrides, backend = parse_group_file("""
        {"rank": 2, "coxeter": [[1, "inf"], ["inf", 1]],
         "gram_overrides": [{"pair": [0, 1], "value": -1.5}],
         "backend": "rational"}""")
    assert matrix[0, 1] == INF
    assert overrides == {(0, 1): -1.5}
    assert backend == "rational"


def test_parse_group_file_errors():
    with pytest.raises(ParseError):
        parse_group_file("{not json")
    with pytest.raises(ValidationError, match="coxeter"):
        parse_group_file('{"rank": 2, "coxeter": [[1, 1], [1, 1]]}')
    with pytest.raises(ValidationError, match="gram_overrides"):
        parse_group_file("""
            {"rank": 2, "coxeter": [[1, 3], [3, 1]],
             "gram_overrides": [{"pair": [0, 1], "value": -1.5}]}""")
    with pytest.raises(ValidationError, match="rank"):
        parse_group_file('{"coxeter": [[1]]}')


def test_group_json_roundtrip():
    text = group_to_json(triangle_matrix(3, INF, 2), {(1, 2): -2}, "float")
    matrix, overrides, backend = parse_group_file(text)
    assert matrix == triangle_matrix(3, INF, 2)
    assert overrides == {(1, 2): -2}


# -- CLI ----------------------------------------------------------------

@pytest.fixture
def universal_file(tmp_path):
    path = tmp_path / "universal.json"
    path.write_text(UNIVERSAL_JSON)
    return str(path)


def test_cli_small_roots(universal_file, capsys):
    assert main(["small-roots", universal_file]) == 0
    out = capsys.readouterr().out
    assert "small roots (3)" in out


def test_cli_growth_elements(universal_file, capsys):
    assert main(["growth", universal_file, "--terms", "4", "--elements"]) == 0
    out = capsys.readouterr().out
    assert "[1, 3, 6, 12, 24]" in out


def test_cli_verify_ok(universal_file, tmp_path, capsys):
    report_path = tmp_path / "report.json"
    code = main(["verify", universal_file, "--max-length", "4",
                 "--gbip-length", "4", "--polytopes",
                 "--out", str(report_path)])
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["schema"] == "coxlow/verify/1"
    assert report["bijective"] is True
    assert report["gbip"]["violations"] == 0
    assert report["polytopes"]["matched"] == report["polytopes"]["total"] == 4


def test_cli_verify_unresolved(tmp_path, capsys):
    path = tmp_path / "h3.json"
    path.write_text(group_to_json(triangle_matrix(5, 3, 2)))
    code = main(["verify", str(path), "--max-length", "3",
                 "--gbip-length", "3"])
    assert code == 3
    assert "unresolved" in capsys.readouterr().out


def test_cli_validation_exit(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"rank": 2, "coxeter": [[1, 1], [1, 1]]}')
    assert main(["small-roots", str(path)]) == 2
    assert "coxeter" in capsys.readouterr().err
    assert main(["small-roots", str(tmp_path / "missing.json")]) == 2


def test_cli_automaton_dot(universal_file, tmp_path, capsys):
    dot_path = tmp_path / "aut.dot"
    assert main(["automaton", universal_file, "--dot", str(dot_path)]) == 0
    dot = dot_path.read_text()
    assert dot.startswith("digraph") and dot.count("shape=circle") == 4


def test_cli_render(universal_file, tmp_path):
    svg_path = tmp_path / "pic.svg"
    assert main(["render", universal_file, "--depth", "2",
                 "--out", str(svg_path)]) == 0
    text = svg_path.read_text()
    assert text.startswith("<svg")
    # determinism doubles as the golden-file check
    svg_path2 = tmp_path / "pic2.svg"
    main(["render", universal_file, "--depth", "2", "--out", str(svg_path2)])
    assert text == svg_path2.read_text()


def test_cli_tolerance_env(universal_file, monkeypatch):
    monkeypatch.setenv("COXLOW_TOLERANCE", "1e-6")
    assert main(["small-roots", universal_file]) == 0


def test_golden_dot_infinite_dihedral():
    rs = build_root_system(dihedral_matrix(INF))
    sigma = small_roots(rs)
    from coxlow import export_dot
    dot = export_dot(build_automaton(rs, sigma))
    golden = (
        'digraph reduced_words {\n'
        '  rankdir=LR;\n'
        '  start [shape=point, label=""];\n'
        '  n0 [shape=circle, label="0: {}"];\n'
        '  n1 [shape=circle, label="2: {1}"];\n'
        '  n2 [shape=circle, label="1: {0}"];\n'
        '  start -> n0;\n'
        '  n0 -> n1 [label="s0"];\n'
        '  n0 -> n2 [label="s1"];\n'
        '  n1 -> n2 [label="s1"];\n'
        '  n2 -> n1 [label="s0"];\n'
        '}\n'
    )
    assert dot == golden
