import io
import json

import pytest
from hypothesis import given, strategies as st

from sgap import FiniteRelation, InvalidSetoid
from sgap.cli import run_cli
from sgap.corpus import full_corpus
from sgap.errors import SgapError
from sgap.families import FAMILIES, family_semigroup, generate_family
from sgap.sgapfile import SgapDocument, SgapSyntaxError, emit_sgap, parse_sgap


def cli(args, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run_cli(args, io.StringIO(stdin), out, err)
    return code, out.getvalue(), err.getvalue()


def doc_text(spec):
    return emit_sgap(generate_family(spec))


def pairs(payload):
    return sorted(tuple(p) for p in payload["pairs"])


class TestFormat:
    def test_left_zero(self):
        doc = parse_sgap("n 2\ntable\n0 0\n1 1")
        s = doc.semigroup()
        assert s.table.tolist() == [[0, 0], [1, 1]]
        assert s.apt == ~FiniteRelation.identity(2)

    def test_comments_and_name(self):
        doc = parse_sgap("# two elements\nname lz\nn 2\ntable\n0 0  # row 0\n1 1\n")
        assert doc.name == "lz" and doc.n == 2

    def test_eq_closure_and_apt_symmetrised(self):
        doc = parse_sgap("n 3\ntable\n0 0 0\n0 0 0\n0 0 0\neq 0 1\neq 1 2\n")
        assert doc.eq == FiniteRelation.full(3) and doc.apt.is_empty()
        doc = parse_sgap("n 2\ntable\n0 1\n1 0\napt 1 0\n")
        assert doc.apt == ~FiniteRelation.identity(2)

    def test_explicit_empty_apartness(self):
        doc = parse_sgap("n 2\ntable\n0 1\n1 0\napt none\n")
        assert doc.apt.is_empty()
        assert "apt none" in emit_sgap(doc)

    def test_non_cotransitive_apt(self):
        with pytest.raises(InvalidSetoid) as info:
            parse_sgap("n 3\ntable\n0 0 0\n0 0 0\n0 0 0\napt 0 1\n")
        assert len(info.value.witness) == 3

    @pytest.mark.parametrize("text,line", [
        ("n 2\ntable\n0 0\n", 3),
        ("n 2\nn 2\n", 2),
        ("table\n", 1),
        ("n 2\ntable\n0 x\n1 1\n", 3),
        ("n 2\ntable\n0 0\n1 1\nfoo 1\n", 5),
        ("n 2\ntable\n0 0\n1 1\neq 0 5\n", 5),
    ])
    def test_syntax_errors(self, text, line):
        with pytest.raises(SgapSyntaxError) as info:
            parse_sgap(text)
        assert info.value.line_no == line

    def test_canonical_emission(self):
        doc = parse_sgap("n 2\ntable\n0 1\n1 0\napt none\nname z\n")
        assert emit_sgap(doc) == "name z\nn 2\ntable\n0 1\n1 0\napt none\n"

    @given(st.sampled_from(full_corpus()))
    def test_roundtrip(self, member):
        name, s = member
        doc = SgapDocument.from_semigroup(s, name)
        assert parse_sgap(emit_sgap(doc)) == doc


class TestFamilies:
    def test_cyclic(self):
        assert family_semigroup("cyclic:3").table.tolist() == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]

    def test_monogenic_wraps(self):
        s = family_semigroup("monogenic:2:3")
        power = 0
        for _ in range(4):
            power = s.mul(power, 0)
        assert s.n == 4 and power == 1

    def test_full_transformations_compose_left_to_right(self):
        s = family_semigroup("fulltransform:2")
        # maps by value tuple: 0=(0,0) 1=(0,1) 2=(1,0) 3=(1,1); fg applies f first
        assert s.table.tolist() == [[0, 0, 3, 3], [0, 1, 2, 3], [0, 2, 1, 3], [0, 3, 0, 3]]

    @pytest.mark.parametrize("spec", ["nope:2", "cyclic", "cyclic:0", "cyclic:x", "fulltransform:5", "cyclic:5000"])
    def test_bad_specs(self, spec):
        with pytest.raises(SgapError):
            generate_family(spec)

    def test_every_family_is_valid(self):
        for name, (arity, _) in FAMILIES.items():
            spec = ":".join([name] + ["3"] * arity)
            assert family_semigroup(spec).n >= 1


class TestCommands:
    def test_validate(self):
        assert cli(["validate", "-"], doc_text("cyclic:3")) == (0, "OK n=3\n", "")

    def test_validate_broken(self, tmp_path):
        path = tmp_path / "broken.sgap"
        path.write_text("n 2\ntable\n1 1\n0 1\n")
        code, _, err = cli(["validate", str(path)])
        assert code == 1 and "NonAssociative" in err and "witness" in err

    def test_gen_then_green(self):
        code, text, _ = cli(["gen", "--family", "leftzero:2"])
        assert code == 0
        code, out, _ = cli(["green", "-"], text)
        g = json.loads(out)
        assert pairs(g["L"]) == [(0, 0), (0, 1), (1, 0), (1, 1)]
        assert pairs(g["R"]) == [(0, 0), (1, 1)]

    def test_gen_to_file(self, tmp_path):
        path = tmp_path / "c3.sgap"
        assert cli(["gen", "--family", "cyclic:3", "-o", str(path)])[0] == 0
        assert path.read_bytes() == doc_text("cyclic:3").encode()

    def test_kernel(self, tmp_path):
        path = tmp_path / "cyclic3.sgap"
        path.write_text(doc_text("cyclic:3"))
        code, out, _ = cli(["kernel", "--kind", "cotransitive", "--rel", "pairs=(0,1)(1,2)", str(path)])
        payload = json.loads(out)
        assert code == 0 and payload["relation"]["pairs"] == [] and payload["fixpoint_step"] == 2

    def test_kernel_from_file_literal(self, tmp_path):
        lit = tmp_path / "rel.txt"
        lit.write_text("n=2; pairs=(0,1)(1,0)(0,0)(1,1)")
        code, out, _ = cli(["kernel", "--kind", "cocongruence", "--rel", f"@{lit}", "-"], doc_text("cyclic:2"))
        assert code == 0 and pairs(json.loads(out)["relation"]) == [(0, 1), (1, 0)]

    def test_kernel_hamming(self):
        code, out, _ = cli(["kernel", "--hamming", "3"])
        payload = json.loads(out)
        assert code == 0 and payload["relation"]["pairs"] == [] and payload["fixpoint_step"] <= 5

    def test_closure(self):
        code, out, _ = cli(["closure", "--kind", "congruence", "--rel", "pairs=(0,2)", "-"], doc_text("cyclic:4"))
        assert code == 0
        assert pairs(json.loads(out)["relation"]) == [(0, 0), (0, 2), (1, 1), (1, 3), (2, 0), (2, 2), (3, 1), (3, 3)]

    def test_classify(self):
        code, out, _ = cli(["classify", "--rel", "pairs=(0,1)(1,0)", "-"], doc_text("cyclic:2"))
        payload = json.loads(out)
        assert code == 0 and payload["compatibility"]["co_congruence"]
        code, out, _ = cli(["classify", "-"], doc_text("cyclic:2"))
        assert json.loads(out)["apartness"]["tight"] is True

    def test_cogreen(self):
        code, out, _ = cli(["cogreen", "-"], doc_text("leftzero:2"))
        payload = json.loads(out)
        assert code == 0 and payload["coL"]["pairs"] == [] and pairs(payload["coR"]) == [(0, 1), (1, 0)]

    def test_eggbox(self):
        code, out, _ = cli(["eggbox", "-"], doc_text("leftzero:2"))
        assert code == 0 and json.loads(out) == {"d_classes": [{"rows": [[[0]], [[1]]]}]}
        code, out, _ = cli(["eggbox", "--format", "dot", "-"], doc_text("fulltransform:2"))
        assert code == 0 and out.startswith("digraph")

    def test_rees(self):
        code, out, _ = cli(["rees", "--coideal", "0", "-"], doc_text("monogenic:3:1"))
        payload = json.loads(out)
        assert code == 0 and payload["ideal"] == [1, 2] and payload["representatives"] == [0, 1]
        factor = parse_sgap(payload["factor"]).semigroup()
        assert factor.table.tolist() == [[1, 1], [1, 1]]

    def test_rees_rejects_non_co_ideal(self):
        code, _, err = cli(["rees", "--coideal", "0", "-"], doc_text("cyclic:2"))
        assert code == 1 and "co-ideal" in err

    def test_monogenic(self):
        code, out, _ = cli(["monogenic", "--element", "0", "-"], doc_text("monogenic:2:3"))
        payload = json.loads(out)
        assert (payload["index"], payload["period"], payload["idempotent_power"]) == (2, 3, 3)

    def test_free(self):
        code, out, _ = cli(["free", "--map", "1,1", "--word", "0,1", "-"], doc_text("cyclic:2"))
        payload = json.loads(out)
        assert code == 0 and payload["words"] == [{"word": "g0g1", "letters": [0, 1], "value": 0}]
        code, out, _ = cli(["free", "--map", "0,1", "--max-length", "2", "-"], doc_text("leftzero:2"))
        assert len(json.loads(out)["words"]) == 6

    def test_oracle_single(self):
        code, out, _ = cli(["oracle", "--check", "kernel_oracle"])
        assert code == 0 and out.startswith("[PASS]  1 kernel_oracle")

    def test_oracle_list(self):
        code, out, _ = cli(["oracle", "--list"])
        assert code == 0 and len(out.splitlines()) == 14


class TestUsage:
    @pytest.mark.parametrize("args", [
        [],
        ["bogus"],
        ["validate", "/nonexistent/file.sgap"],
        ["kernel", "--kind", "coequivalence", "--hamming", "3"],
        ["kernel", "--hamming", "20"],
        ["kernel", "-"],
        ["gen", "--family", "nope:1"],
        ["oracle", "--check", "nope"],
    ])
    def test_exit_two(self, args, capsys):
        assert cli(args)[0] == 2

    def test_bad_relation_literal(self):
        assert cli(["classify", "--rel", "pairs=(0,9)", "-"], doc_text("cyclic:2"))[0] == 2

    def test_bad_index_lists(self):
        assert cli(["rees", "--coideal", "a,b", "-"], doc_text("cyclic:2"))[0] == 2
        assert cli(["rees", "--coideal", "7", "-"], doc_text("cyclic:2"))[0] == 2
        assert cli(["monogenic", "--element", "7", "-"], doc_text("cyclic:2"))[0] == 2

    def test_syntax_error_exit_one(self):
        code, _, err = cli(["validate", "-"], "n 2\ntable\n0 0\n")
        assert code == 1 and "line 3" in err
