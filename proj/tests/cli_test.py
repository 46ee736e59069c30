"""End-to-end checks of the domcode CLI: exit codes, text output and JSON schemas.

Usage: cli_test.py <domcode binary> <schema dir> <fixture dir>
"""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN, SCHEMAS, FIXTURES = sys.argv[1:4]
del sys.argv[1:4]


def run(*args, env=None):
    full_env = dict(os.environ, **(env or {}))
    p = subprocess.run([BIN, *args], capture_output=True, text=True, timeout=300, env=full_env)
    return p.returncode, p.stdout, p.stderr


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


class CliTest(unittest.TestCase):
    def json_of(self, name, *args, rc=0):
        code, out, err = run(*args, "--json")
        self.assertEqual(code, rc, err)
        doc = json.loads(out)
        jsonschema.validate(doc, schema(name))
        return doc

    def fixture(self, name):
        return os.path.join(FIXTURES, name)

    def test_schemas_are_valid(self):
        for f in os.listdir(SCHEMAS):
            with open(os.path.join(SCHEMAS, f)) as h:
                jsonschema.Draft202012Validator.check_schema(json.load(h))

    def test_verify(self):
        args = ["verify", "--graph", "direct(K(3),K(3))", "--code", self.fixture("k3x3_ld.code")]
        doc = self.json_of("verify", *args, "--class", "LD")
        self.assertTrue(doc["ok"])
        self.assertIsNone(doc["witness"])
        self.assertEqual(doc["size"], 3)
        doc = self.json_of("verify", *args, "--class", "SLD", rc=1)
        self.assertFalse(doc["ok"])
        self.assertEqual(doc["witness"]["kind"], "intersection-too-big")

    def test_verify_graph_mismatch_is_usage_error(self):
        code, _, err = run("verify", "--graph", "cart(K(3),K(3))", "--code", self.fixture("k3x3_ld.code"),
                           "--class", "LD")
        self.assertEqual(code, 2)
        self.assertIn("error", err)

    def test_solve_full_and_decision(self):
        doc = self.json_of("solve", "solve", "--graph", "cube(2)", "--class", "DLD")
        self.assertEqual(doc["status"], "optimal")
        self.assertEqual(doc["gamma"], 4)
        self.assertEqual(len(doc["witness"]), 4)
        doc = self.json_of("solve", "solve", "--graph", "cube(2)", "--class", "DLD", "--k", "3", rc=1)
        self.assertEqual(doc["status"], "infeasible")
        doc = self.json_of("solve", "solve", "--graph", "cube(2)", "--class", "DLD", "--k", "4")
        self.assertEqual(doc["status"], "feasible")

    def test_solve_identifying_infeasible(self):
        doc = self.json_of("solve", "solve", "--graph", "K(3)", "--class", "ID", rc=1)
        self.assertEqual(doc["status"], "infeasible")
        self.assertIsNone(doc["gamma"])

    def test_solve_limits_give_exit_three(self):
        doc = self.json_of("solve", "solve", "--graph", "direct(K(5),K(5))", "--class", "LD", "--node-limit", "3",
                           rc=3)
        self.assertEqual(doc["status"], "incomplete")
        self.assertFalse(doc["complete"])
        self.assertLessEqual(doc["lower_bound"], 6)
        self.assertGreaterEqual(doc["upper_bound"], 6)

    def test_solve_parallel_threads_from_env(self):
        code, out, err = run("solve", "--graph", "direct(K(4),K(5))", "--class", "LD", "--parallel", "--json",
                             env={"DOMCODE_THREADS": "2"})
        self.assertEqual(code, 0, err)
        self.assertEqual(json.loads(out)["gamma"], 5)

    def test_solve_config_and_inconsistent_hint(self):
        with tempfile.TemporaryDirectory() as d:
            cfg = os.path.join(d, "cfg.json")
            with open(cfg, "w") as f:
                json.dump({"upper_bound_hint": 4}, f)
            doc = self.json_of("solve", "solve", "--graph", "direct(K(4),K(4))", "--class", "LD", "--config", cfg,
                               rc=1)
            self.assertEqual(doc["status"], "inconsistent-hint")

    def test_manifest_and_replay(self):
        with tempfile.TemporaryDirectory() as d:
            manifest = os.path.join(d, "run.json")
            code, _, err = run("solve", "--graph", "cart(K(3),K(3))", "--class", "SLD", "--manifest", manifest)
            self.assertEqual(code, 0, err)
            with open(manifest) as f:
                jsonschema.validate(json.load(f), schema("manifest"))
            doc = self.json_of("replay", "replay", manifest)
            self.assertTrue(doc["match"])

            with open(manifest) as f:
                m = json.load(f)
            m["result_digest"] = "0" * 16
            with open(manifest, "w") as f:
                json.dump(m, f)
            doc = self.json_of("replay", "replay", manifest, rc=1)
            self.assertFalse(doc["match"])

    def test_construct(self):
        doc = self.json_of("construct", "construct", "--family", "direct_ld_general", "--n", "10", "--m", "10")
        self.assertEqual(doc["size"], 12)
        self.assertTrue(doc["verified"])
        doc = self.json_of("construct", "construct", "--family", "direct_sld_cross", "--n", "4", "--m", "7")
        self.assertEqual(doc["size"], 10)
        self.assertEqual(doc["class"], "SLD")

    def test_construct_writes_code_file_that_verifies(self):
        with tempfile.TemporaryDirectory() as d:
            out = os.path.join(d, "c.code")
            code, _, err = run("construct", "--family", "direct_ld_A123", "--n", "5", "--m", "6", "--out", out)
            self.assertEqual(code, 0, err)
            code, out_text, err = run("verify", "--graph", "direct(K(5),K(6))", "--code", out, "--class", "LD")
            self.assertEqual(code, 0, err)
            self.assertIn("ok", out_text)

    def test_construct_bad_parameters(self):
        self.assertEqual(run("construct", "--family", "direct_ld_A123", "--n", "5", "--m", "5")[0], 2)
        self.assertEqual(run("construct", "--family", "nope", "--n", "5", "--m", "5")[0], 2)

    def test_gamma(self):
        self.assertEqual(self.json_of("gamma", "gamma", "--family", "cart_ld", "--n", "3", "--m", "6")["gamma"], 5)
        self.assertEqual(self.json_of("gamma", "gamma", "--family", "direct_ld", "--n", "4", "--m", "4")["gamma"], 5)
        self.assertEqual(self.json_of("gamma", "gamma", "--family", "cube_dld", "--q", "3")["gamma"], 9)
        code, out, _ = run("gamma", "--family", "direct_sld", "--n", "3", "--m", "5")
        self.assertEqual((code, out.strip()), (0, "7"))
        code, _, err = run("gamma", "--family", "cart_ld", "--n", "1", "--m", "3")
        self.assertEqual(code, 2)
        self.assertIn("n >= 2", err)

    def test_table(self):
        doc = self.json_of("table", "table", "--family", "direct_dld", "--max", "6")
        cart = self.json_of("table", "table", "--family", "cart_dld", "--max", "6")
        self.assertEqual(len(doc["rows"]), 5)
        self.assertEqual(doc["rows"], cart["rows"])
        self.assertIsNone(doc["rows"][1]["values"][0])
        _, out, _ = run("gamma", "--family", "direct_dld", "--n", "3", "--m", "5")
        self.assertEqual(doc["rows"][1]["values"][3], int(out))
        doc = self.json_of("table", "table", "--family", "cube_dld", "--max", "4")
        self.assertEqual([r["gamma"] for r in doc["rows"]], [4, 9, 16])

    def test_grid_checks(self):
        doc = self.json_of("grid", "grid", "--code", "tri_sld", "--check", "SLD", "--n", "8")
        self.assertTrue(doc["ok"])
        doc = self.json_of("grid", "grid", "--code", "king_dld", "--check", "SLD", "--n", "8", rc=1)
        self.assertEqual(doc["witness"]["u"], [2, 0])
        self.assertEqual(len(doc["witness"]["intersection"]), 2)
        doc = self.json_of("grid", "grid", "--code", "king_dld", "--check", "strip", "--n", "12")
        self.assertGreaterEqual(doc["min_count"], 9)
        doc = self.json_of("grid", "grid", "--code", "king_dld", "--check", "density", "--n", "1")
        self.assertEqual(doc["ratio"], "1/9")
        doc = self.json_of("grid", "grid", "--pred", "x % 5 in {0}", "--check", "T", "--n", "4", rc=1)
        self.assertEqual(doc["witness"]["kind"], "empty-pattern")

    def test_grid_bad_predicate(self):
        self.assertEqual(run("grid", "--pred", "x % 0 in {0}", "--check", "DLD", "--n", "4")[0], 2)

    def test_reproduce(self):
        doc = self.json_of("reproduce", "reproduce", "direct_sld", "--max", "4")
        self.assertEqual(doc["fail"], 0)
        self.assertEqual(doc["unknown"], 0)
        self.assertGreater(doc["pass"], 0)
        doc = self.json_of("reproduce", "reproduce", "direct_ld", "--max", "5", "--time-limit", "1e-9", rc=3)
        self.assertGreater(doc["unknown"], 0)

    def test_usage_errors(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("solve", "--graph", "K(")[0], 2)
        self.assertEqual(run("solve", "--graph", "K(3)", "--class", "XYZ")[0], 2)


if __name__ == "__main__":
    unittest.main(verbosity=2)
