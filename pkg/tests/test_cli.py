from wqokit.cli import run

NET = """\
places 2
transition t1 consume (1,0) produce (0,1)
initial (2,0)
target (0,2)
"""


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_order_leq_e_exit_codes(capsys):
    assert run(["order", "leq-e", "aabbca", "abababcac"]) == 0
    assert capsys.readouterr().out == "true\n"
    assert run(["order", "leq-e", "abababcac", "aabbca"]) == 1
    assert capsys.readouterr().out == "false\n"


def test_order_leq_E(capsys):
    assert run(["order", "leq-E", "ab", "aabb"]) == 0
    assert run(["order", "leq-E", "a", "ab"]) == 1


def test_order_dickson(capsys):
    assert run(["order", "dickson", "(1,2)", "(2,2)"]) == 0
    assert run(["order", "dickson", "(2,2)", "(1,2)"]) == 1


def test_order_dickson_dimension_error_reports_operands(capsys):
    assert run(["order", "dickson", "(1,2)", "(1,2,3)"]) == 2
    err = capsys.readouterr().err
    assert "(1,2)" in err and "(1,2,3)" in err


def test_order_word_forms(capsys):
    assert run(["order", "leq-e", "[0,1]", "[0,0,1,1]"]) == 0
    assert run(["order", "leq-e", "ab", "[0,1]"]) == 2  # mixed forms
    assert run(["order", "leq-e", "ab", "[0,1]", "--alphabet", "ab"]) == 0
    assert run(["order", "leq-e", "xy", "xxyy", "--alphabet", "xy"]) == 0
    assert run(["order", "leq-e", "xz", "xxyy", "--alphabet", "xy"]) == 2


def test_usage_errors(capsys):
    assert run([]) == 2
    assert run(["order", "nonsense", "a", "b"]) == 2
    assert run(["--help"]) == 0


def test_seq_good_pair(tmp_path, capsys):
    f = write(tmp_path, "seq.txt", "(1,0)\n(0,1)\n(1,1)\n")
    assert run(["seq", "good-pair", f]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "good pair: 0 2"
    assert "(1,0) <= (1,1)" in out

    bad = write(tmp_path, "bad.txt", "(1,0)\n(0,1)\n")
    assert run(["seq", "good-pair", bad]) == 1
    assert capsys.readouterr().out == "bad\n"

    ws = write(tmp_path, "words.txt", "ba\nab\naabb\n")
    assert run(["seq", "good-pair", ws]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "good pair: 1 2"


def test_upset_normalize(tmp_path, capsys):
    f = write(tmp_path, "x.up", "upset X { ab ba aba }")
    assert run(["upset", "normalize", f]) == 0
    assert capsys.readouterr().out == "upset {\n  ab\n  ba\n}\n"

    g = write(tmp_path, "f.up", "upset F { (2,2) (1,2) (2,1) }")
    assert run(["upset", "normalize", g]) == 0
    assert capsys.readouterr().out == "upset {\n  (1,2)\n  (2,1)\n}\n"


def test_upset_normalize_output_reparses_identically(tmp_path, capsys):
    f = write(tmp_path, "x.up", "upset X { bb ba aab bab }")
    assert run(["upset", "normalize", f]) == 0
    first = capsys.readouterr().out
    g = write(tmp_path, "y.up", first)
    assert run(["upset", "normalize", g]) == 0
    assert capsys.readouterr().out == first


def test_upset_member(tmp_path, capsys):
    f = write(tmp_path, "f.up", "upset F { (1,2) }")
    assert run(["upset", "member", "(3,2)", f]) == 0
    assert run(["upset", "member", "(0,2)", f]) == 1
    x = write(tmp_path, "x.up", "upset X { ab }")
    assert run(["upset", "member", "ba", x]) == 1
    assert run(["upset", "member", "cacb", x]) == 0


def test_upset_includes(tmp_path):
    big = write(tmp_path, "big.up", "upset { (0,1) }")
    small = write(tmp_path, "small.up", "upset { (1,2) }")
    assert run(["upset", "includes", big, small]) == 0
    assert run(["upset", "includes", small, big]) == 1


def test_upset_union_and_intersect(tmp_path, capsys):
    a = write(tmp_path, "a.up", "upset { (1,0) }")
    b = write(tmp_path, "b.up", "upset { (0,1) }")
    assert run(["upset", "union", a, b]) == 0
    assert capsys.readouterr().out == "upset {\n  (0,1)\n  (1,0)\n}\n"
    assert run(["upset", "intersect", a, b]) == 0
    assert capsys.readouterr().out == "upset {\n  (1,1)\n}\n"

    w = write(tmp_path, "w.up", "upset { ab }")
    assert run(["upset", "intersect", w, w]) == 2


def test_upset_quotient(tmp_path, capsys):
    x = write(tmp_path, "x.up", "upset X { ab ba }")
    assert run(["upset", "quotient", "a", x]) == 0
    assert capsys.readouterr().out == "upset {\n  b\n}\n"

    y = write(tmp_path, "y.up", "upset { a }")
    assert run(["upset", "quotient", "a", y]) == 0
    assert capsys.readouterr().out == "upset {\n  []\n}\n"

    # quotient by a letter outside the generators leaves the set alone
    assert run(["upset", "quotient", "c", x]) == 0
    assert capsys.readouterr().out == "upset {\n  ab\n  ba\n}\n"


def test_upset_som(tmp_path, capsys):
    x = write(tmp_path, "x.up", "upset X { ab ba }")
    assert run(["upset", "som", x]) == 0
    assert capsys.readouterr().out == "{a,b}\n"
    e = write(tmp_path, "e.up", "upset { [] }")
    assert run(["upset", "som", e]) == 0
    assert capsys.readouterr().out == "{}\n"


def test_upset_phi_slice(tmp_path, capsys):
    f = write(tmp_path, "f.up", "upset F { (1,2) (3,0) }")
    assert run(["upset", "phi-slice", f, "(1)"]) == 0
    assert capsys.readouterr().out == "2\n"
    assert run(["upset", "phi-slice", f, "(0)"]) == 0
    assert capsys.readouterr().out == "inf\n"
    assert run(["upset", "phi-slice", f, "(3)"]) == 0
    assert capsys.readouterr().out == "0\n"


def test_embed_check(capsys):
    assert run(["embed", "check", "dickson-to-word", "3", "--dim", "2"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "true"
    assert run(["embed", "check", "word-to-labeled", "3"]) == 0
    assert run(["embed", "check", "no-such-map", "3"]) == 2


def test_cover(tmp_path, capsys):
    net = write(tmp_path, "demo.net", NET)
    assert run(["cover", net]) == 0
    out = capsys.readouterr().out
    assert out == (
        "coverable: true\n"
        "iterations: 2\n"
        "upset basis {\n  (0,2)\n  (1,1)\n  (2,0)\n}\n"
    )

    assert run(["cover", net, "--oracle-bound", "(4,4)"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "oracle: true"


def test_cover_uncoverable_and_errors(tmp_path, capsys):
    net = write(tmp_path, "n.net", "places 1\ninitial (0)\ntarget (2)\n")
    assert run(["cover", net]) == 1
    out = capsys.readouterr().out
    assert out.startswith("coverable: false\n")

    broken = write(tmp_path, "b.net", "places 1\nwhat (0)\ntarget (2)\n")
    assert run(["cover", broken]) == 2
    assert "line 2" in capsys.readouterr().err

    slow = write(
        tmp_path,
        "slow.net",
        "places 1\ntransition t consume (0) produce (1)\ninitial (0)\ntarget (9)\n",
    )
    assert run(["cover", slow, "--max-iterations", "2"]) == 2
    assert run(["cover", slow]) == 0


def test_cover_oracle_bound_note(tmp_path, capsys):
    # coverable, but the witness run leaves the bound: the oracle line
    # flags itself as inconclusive instead of contradicting the verdict
    net = write(
        tmp_path,
        "pump.net",
        "places 1\ntransition t consume (0) produce (2)\ninitial (0)\ntarget (3)\n",
    )
    assert run(["cover", net, "--oracle-bound", "(3)"]) == 0
    assert "inconclusive" in capsys.readouterr().out
