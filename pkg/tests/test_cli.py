import json

from hbtrace.cli import (
    EXIT_DOMAIN,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_RESOURCE,
    RunConfig,
    dispatch,
    main,
)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCommands:
    def test_trace_text(self, capsys):
        code, out = run(capsys, "trace", "x^3, x^2*y, y^2")
        assert code == EXIT_OK
        assert "nearly Gorenstein: True" in out
        assert "TwoVariables" in out and "proven" in out

    def test_trace_json(self, capsys):
        code, out = run(capsys, "trace", "x^3, x^2*y, y^2", "--format", "json")
        payload = json.loads(out)
        assert payload["schema"] == 1
        assert payload["is_nearly_gorenstein"] is True

    def test_conjectural_output_is_flagged(self, capsys):
        code, out = run(
            capsys, "trace", "x^2, x*y, y^2", "--vars", "x,y,z"
        )
        assert code == EXIT_OK
        assert "CONJECTURAL" in out

    def test_classify(self, capsys):
        code, out = run(capsys, "classify", "x1*x3, x1*x4, x2*x4")
        assert code == EXIT_OK
        assert "case: E" in out

    def test_decompose_height_polarize_dual_localize(self, capsys):
        assert run(capsys, "decompose", "x^2, x*y, y^3")[0] == EXIT_OK
        code, out = run(capsys, "height", "x2, x1*x3")
        assert code == EXIT_OK and "= 2" in out
        assert run(capsys, "polarize", "x^2, x*y")[0] == EXIT_OK
        code, out = run(capsys, "dual", "x1*x2, x2*x3")
        assert "x2, x1*x3" in out
        code, out = run(capsys, "localize", "x2, x1*x3", "--at", "x1,x2")
        assert code == EXIT_OK and "(x1, x2)" in out

    def test_graph_command(self, capsys):
        code, out = run(capsys, "graph", "1 2 1 1\n2 3 1 1", "--dot")
        assert code == EXIT_OK
        assert "cochordal: True" in out
        assert "graph {" in out

    def test_is_cm_betti_hb_matrix(self, capsys):
        code, out = run(capsys, "is-cm", "x^3, x^2*y, y^2")
        assert code == EXIT_OK and "Cohen-Macaulay: True" in out
        code, out = run(capsys, "betti", "x^2, x*y, y^2")
        assert "[1, 3, 2]" in out
        code, out = run(capsys, "hb-matrix", "x^3, x^2*y, y^2")
        assert "-x^2" in out

    def test_verify_commands(self, capsys):
        code, out = run(capsys, "verify-kernel-xy", "x^2, x*y, y^2")
        assert code == EXIT_OK and "equal" in out
        code, out = run(capsys, "verify-inclusion", "x^3, x^2*y, y^2")
        assert code == EXIT_OK and "holds" in out
        code, out = run(
            capsys, "verify-conjecture", "x1*x3, x1*x4, x2*x4", "--bound", "2,2,2,2"
        )
        assert code == EXIT_OK and "confirmed-to-bound" in out

    def test_sweep(self, capsys):
        code, out = run(
            capsys, "sweep", "--family", "xy", "--max-exp", "3", "--no-rows"
        )
        assert code == EXIT_OK
        assert "classification mismatches: 0" in out

    def test_stdin_input(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO("x^3, x^2*y, y^2"))
        code, out = run(capsys, "trace", "-")
        assert code == EXIT_OK and "nearly Gorenstein: True" in out


class TestExitCodes:
    def test_domain_error(self, capsys):
        code, out = run(capsys, "trace", "x^3, x^2*y")  # height 1
        assert code == EXIT_DOMAIN
        assert "domain error" in out

    def test_parse_error(self, capsys):
        code, out = run(capsys, "trace", "x^^2")
        assert code == EXIT_PARSE
        assert "parse error" in out

    def test_resource_cap(self, capsys):
        code, out = run(
            capsys, "verify-conjecture", "x^2, x*y, y^2", "--cap", "3"
        )
        assert code == EXIT_RESOURCE

    def test_bad_bound_is_parse_error(self, capsys):
        code, out = run(capsys, "verify-conjecture", "x^2, x*y, y^2", "--bound", "a,b")
        assert code == EXIT_PARSE


class TestDeterminism:
    def test_sweep_byte_identical(self, capsys):
        argv = ["sweep", "--family", "xy", "--max-exp", "4", "--seed", "7", "--format", "json"]
        code1, out1 = run(capsys, *argv)
        code2, out2 = run(capsys, *argv)
        assert code1 == code2 == EXIT_OK
        assert out1 == out2


class TestDispatchApi:
    def test_runconfig_roundtrip(self):
        cfg = RunConfig(command="height", input_text="x2, x1*x3")
        code, out = dispatch(cfg)
        assert code == EXIT_OK and "2" in out
