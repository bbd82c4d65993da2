"""End-to-end checks of the eil command-line tool."""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

EIL = os.path.abspath(sys.argv.pop(1))
SCHEMA_PATH = sys.argv.pop(1)
with open(SCHEMA_PATH) as f:
    SCHEMA = json.load(f)


def run(*args, cwd=None, env=None):
    return subprocess.run([EIL, *map(str, args)], cwd=cwd, env=env, capture_output=True, text=True)


def read(path):
    with open(path, "rb") as f:
        return f.read()


class CliTest(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = self.tmp.name

    def tearDown(self):
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.dir, name)

    def validate(self, text):
        doc = json.loads(text)
        jsonschema.validate(doc, SCHEMA)
        return doc

    def test_construct_incidence_is_deterministic(self):
        outputs = []
        for sub, workers in (("a", 1), ("b", 1), ("c", 3)):
            os.mkdir(self.path(sub))
            r = run("construct", "incidence", "--q", 7, "--t", 3, "--seed", 42, "--workers", workers, cwd=self.path(sub))
            self.assertEqual(r.returncode, 0, r.stderr)
            files = sorted(os.listdir(self.path(sub)))
            outputs.append({name: read(os.path.join(self.path(sub), name)) for name in files})
        self.assertEqual(outputs[0], outputs[1])
        self.assertEqual(outputs[0], outputs[2])
        names = set(outputs[0])
        self.assertIn("incidence-q7-t3.graph", names)
        self.assertIn("incidence-q7-t3.graph.report.json", names)
        self.assertIn("incidence-q7-t3.graph.vertices.txt", names)
        doc = self.validate(outputs[0]["incidence-q7-t3.graph.report.json"])
        self.assertEqual(doc["kind"], "incidence")
        self.assertTrue(doc["passed"])
        header = outputs[0]["incidence-q7-t3.graph"].decode().splitlines()[0]
        self.assertRegex(header, r"^bipartite \d+ \d+$")

    def test_construct_furedi(self):
        out = self.path("f.graph")
        r = run("construct", "furedi", "--q", 7, "--t", 3, "--out", out)
        self.assertEqual(r.returncode, 0, r.stderr)
        lines = read(out).decode().splitlines()
        self.assertEqual(lines[0], "general 16")
        degrees = [0] * 16
        for line in lines[1:]:
            u, v = map(int, line.split())
            self.assertLess(u, v)
            degrees[u] += 1
            degrees[v] += 1
        self.assertTrue(all(d in (6, 7) for d in degrees))
        self.assertEqual(lines[1:], sorted(lines[1:], key=lambda s: tuple(map(int, s.split()))))
        classes = read(out + ".vertices.txt").decode().splitlines()
        self.assertEqual(len(classes), 16)
        self.validate(read(out + ".report.json"))

        r = run("verify", out, "--s", 3, "--m", 3)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = self.validate(r.stdout)
        self.assertEqual(doc["trials"][0]["ksm_free"], True)

    def test_verify_k23_fixture(self):
        fixture = self.path("k23.graph")
        with open(fixture, "w") as f:
            f.write("bipartite 2 3\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n")
        r = run("verify", fixture, "--s", 2, "--m", 3)
        self.assertEqual(r.returncode, 2)
        doc = self.validate(r.stdout)
        self.assertFalse(doc["passed"])
        self.assertEqual(doc["trials"][0]["ksm_free_witness"], {"subset": [0, 1], "common": [2, 3, 4]})

    def test_verify_parse_errors(self):
        truncated = self.path("truncated.graph")
        with open(truncated, "w") as f:
            f.write("general 4\n0 1\n2")
        r = run("verify", truncated, "--s", 2, "--m", 2)
        self.assertEqual(r.returncode, 3)
        self.assertIn("line 3", r.stderr)
        r = run("verify", self.path("missing.graph"), "--s", 2, "--m", 2)
        self.assertEqual(r.returncode, 3)

    def test_validation_errors(self):
        r = run("construct", "incidence", "--q", 4, "--t", 3, cwd=self.dir)
        self.assertEqual(r.returncode, 1)
        self.assertIn("q must be prime", r.stderr)
        r = run("construct", "furedi", "--q", 7, "--t", 4, cwd=self.dir)
        self.assertEqual(r.returncode, 1)
        r = run("montecarlo", "--q", 7, "--t", 3, "--trials", 10)
        self.assertEqual(r.returncode, 1)
        self.assertIn("trials must be >= 100", r.stderr)
        r = run("sweep", "--q", 7, "--t", 3)
        self.assertEqual(r.returncode, 1)
        r = run("montecarlo", "--q", 7)
        self.assertEqual(r.returncode, 1)
        self.assertEqual(os.listdir(self.dir), [])

    def test_montecarlo_formats(self):
        r = run("montecarlo", "--q", 7, "--t", 3, "--trials", 200, "--seed", 3)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = self.validate(r.stdout)
        self.assertAlmostEqual(doc["aggregates"]["exact_t"]["target"], 30 / 343, places=12)
        self.assertEqual(len(doc["trials"]), 200)

        out = self.path("mc.csv")
        r = run("montecarlo", "--q", 7, "--t", 3, "--trials", 200, "--seed", 3, "--format", "csv", "--out", out,
                "--workers", 2)
        self.assertEqual(r.returncode, 0, r.stderr)
        rows = list(csv.reader(io.StringIO(read(out).decode())))
        self.assertEqual(rows[0], ["scope", "index", "field", "value"])
        cells = {(s, i, k): v for s, i, k, v in rows[1:]}
        self.assertEqual(cells[("meta", "", "schema")], "report-v1")
        for i, trial in enumerate(doc["trials"]):
            for key, value in trial.items():
                self.assertEqual(cells[("trial", str(i), key)], json.dumps(value) if not isinstance(value, str) else value)

    def test_env_workers_and_timing(self):
        env = dict(os.environ, EIL_WORKERS="3")
        a = run("montecarlo", "--q", 5, "--t", 3, "--trials", 100, env=env)
        b = run("montecarlo", "--q", 5, "--t", 3, "--trials", 100)
        self.assertEqual(a.stdout, b.stdout)
        self.assertNotIn("duration_seconds", a.stdout)
        c = run("montecarlo", "--q", 5, "--t", 3, "--trials", 100, "--timing")
        self.assertIn("duration_seconds", self.validate(c.stdout))

    def test_sweep(self):
        r = run("sweep", "--q", "5,7", "--t", 3, "--trials", 5)
        doc = self.validate(r.stdout)
        self.assertEqual([g["q"] for g in doc["groups"]], [5, 7])
        self.assertTrue(all(g["k2t1_free"] for g in doc["groups"]))
        self.assertEqual(len(doc["trials"]), 10)
        self.assertEqual(r.returncode, 0 if doc["passed"] else 2)


if __name__ == "__main__":
    unittest.main()
