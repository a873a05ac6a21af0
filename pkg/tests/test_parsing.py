import pytest

from hbtrace.errors import ParseError
from hbtrace.monomials import ideal, ring
from hbtrace.parsing import IdealExpression, parse_graph_spec, parse_ideal, print_ideal


class TestParseIdeal:
    def test_basic(self):
        I = parse_ideal("x^3, x^2*y, y^2")
        assert I.ring.variable_names == ("x", "y")
        assert I == ideal(ring("x", "y"), (3, 0), (2, 1), (0, 2))

    def test_case_e_literal(self):
        I = parse_ideal("x1*x3, x1*x4, x2*x4")
        assert I.ring.variable_names == ("x1", "x3", "x4", "x2")
        assert I.mu == 3

    def test_deduplication(self):
        assert parse_ideal("x^2, x^2").mu == 1

    def test_whitespace_insignificant(self):
        assert parse_ideal(" x ^ 2 ,\n y ") == parse_ideal("x^2,y")

    def test_repeated_factor_accumulates(self):
        I = parse_ideal("x*x^2*y")
        assert I.generators[0].exponents == (3, 1)

    def test_exponent_zero(self):
        assert parse_ideal("x^0").is_unit()

    def test_zero_literal_requires_vars(self):
        assert parse_ideal("0", variables=["x", "y"]).is_zero()
        with pytest.raises(ParseError):
            parse_ideal("")

    def test_declared_variables(self):
        I = parse_ideal("y^2", variables=["x", "y"])
        assert I.ring.variable_names == ("x", "y")
        assert I.generators[0].exponents == (0, 2)

    def test_unknown_variable_under_declaration(self):
        with pytest.raises(ParseError) as exc:
            parse_ideal("x*z", variables=["x", "y"])
        assert "unknown variable" in str(exc.value)

    def test_negative_exponent(self):
        with pytest.raises(ParseError) as exc:
            parse_ideal("x^-2")
        assert "negative exponent" in str(exc.value)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as exc:
            parse_ideal("x^2,\n y %")
        assert exc.value.line == 2

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_ideal("x^2 y")

    def test_ideal_expression(self):
        expr = IdealExpression.parse("x^2, x^2*y")
        assert expr.parsed.mu == 1
        assert expr.canonical_source() == "x^2"

    def test_roundtrip(self):
        for text in ("x^3, x^2*y, y^2", "x1*x3, x1*x4, x2*x4", "x^2"):
            I = parse_ideal(text)
            assert parse_ideal(print_ideal(I), variables=list(I.ring.variable_names)) == I

    def test_roundtrip_random(self, rng):
        from hbtrace.sweeps import random_monomial_ideal

        for _ in range(40):
            I = random_monomial_ideal(rng, n=rng.randint(1, 4), max_gens=5, max_exp=4)
            back = parse_ideal(print_ideal(I), variables=list(I.ring.variable_names))
            assert back == I


class TestParseGraphSpec:
    def test_path(self):
        d = parse_graph_spec("1 2 1 1\n2 3 1 1")
        assert d.graph.vertices == ("x1", "x2", "x3")
        assert d.edge_order == (("x1", "x2"), ("x2", "x3"))
        assert d.a == (1, 1) and d.b == (1, 1)

    def test_single_edge(self):
        d = parse_graph_spec("1 2 2 1")
        assert d.a == (2,) and d.b == (1,)

    def test_duplicate_edge(self):
        with pytest.raises(ParseError):
            parse_graph_spec("1 2 1 1\n1 2 2 2")
        with pytest.raises(ParseError):
            parse_graph_spec("1 2 1 1\n2 1 2 2")

    def test_nonpositive_exponents(self):
        with pytest.raises(ParseError):
            parse_graph_spec("1 2 0 1")
        with pytest.raises(ParseError):
            parse_graph_spec("1 2 1 -1")

    def test_loop_rejected(self):
        with pytest.raises(ParseError):
            parse_graph_spec("3 3 1 1")

    def test_comments_and_blanks(self):
        d = parse_graph_spec("# a path\n1 2 1 1\n\n2 3 1 1  # second edge\n")
        assert d.t == 2

    def test_malformed_line_number(self):
        with pytest.raises(ParseError) as exc:
            parse_graph_spec("1 2 1 1\n1 2 3")
        assert exc.value.line == 2
