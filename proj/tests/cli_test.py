"""Runs the dtour CLI, checks exit codes and validates every JSON output
against schemas/dtour-output.schema.json."""

import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

DTOUR = sys.argv.pop(1)
SCHEMA_PATH = sys.argv.pop(1)

with open(SCHEMA_PATH) as fh:
    SCHEMA = json.load(fh)


def validator(name):
    return jsonschema.Draft202012Validator({"$ref": f"#/$defs/{name}", "$defs": SCHEMA["$defs"]})


def run(*args, stdin=None):
    return subprocess.run([DTOUR, *args], input=stdin, capture_output=True, text=True, check=False)


class Cli(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()

    def write(self, name, content):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w") as fh:
            fh.write(content if isinstance(content, str) else json.dumps(content))
        return path

    def output(self, name, proc, code=0):
        self.assertEqual(proc.returncode, code, proc.stderr)
        doc = json.loads(proc.stdout)
        validator(name).validate(doc)
        return doc

    def gallery(self, name):
        return run("gallery", "--name", name).stdout

    def test_check_example_1_is_cyclic(self):
        doc = self.output("check", run("check", "--property", "acyclic", stdin=self.gallery("example-1")), 1)
        self.assertEqual(doc["witness"]["kind"], "cycle")
        self.assertEqual(len(doc["witness"]["weights"]), 4)

    def test_check_example_2(self):
        e2 = self.gallery("example-2")
        doc = self.output("check", run("check", "--property", "acyclic", stdin=e2))
        self.assertEqual(doc["witness"]["kind"], "chamber")
        doc = self.output("check", run("check", "--property", "collapsible", stdin=e2))
        self.assertTrue(doc["holds"])
        self.assertGreater(len(doc["witness"]["steps"]), 0)

    def test_octahedron(self):
        octa = self.gallery("octahedron")
        self.assertTrue(self.output("check", run("check", "--property", "k2cycle-free", stdin=octa))["holds"])
        doc = self.output("check", run("check", "--property", "zero-one-acyclic", stdin=octa), 1)
        self.assertEqual(len(doc["witness"]["faces"]), 8)

    def test_collapsible_failure_has_residue(self):
        doc = self.output("check", run("check", "--property", "collapsible", stdin=self.gallery("chamber-10")), 1)
        self.assertEqual(doc["witness"]["kind"], "residue")

    def test_k2cycle_failure(self):
        doc = self.output("check", run("check", "--property", "k2cycle-free", stdin=self.gallery("example-1")), 1)
        self.assertEqual(doc["witness"]["vertices"], [1, 2, 3, 4])

    def test_census(self):
        doc = self.output("census", run("census", "--n", "4", "--d", "2"))
        self.assertEqual(doc["acyclic"], 14)
        doc = self.output("census", run("census", "--n", "5", "--d", "2", "--orbits", "relabel-only",
                                        "--predicates", "acyclic"))
        self.assertEqual(doc["orbits"]["acyclic"], 6)
        self.assertIsNone(doc["collapsible"])

    def test_census_csv(self):
        proc = run("census", "--n", "4", "--d", "1", "--format", "csv")
        self.assertEqual(proc.returncode, 0)
        header, row = proc.stdout.strip().split("\n")
        self.assertEqual(dict(zip(header.split(","), row.split(",")))["acyclic"], "24")

    def test_census_is_thread_independent(self):
        one = run("census", "--n", "5", "--d", "2", "--threads", "1").stdout
        many = run("census", "--n", "5", "--d", "2", "--threads", "0").stdout
        self.assertEqual(one, many)

    def test_too_large(self):
        proc = run("census", "--n", "7", "--d", "2")
        self.assertEqual(proc.returncode, 3)
        validator("error").validate(json.loads(proc.stderr))
        big = run("random", "--n", "13", "--d", "2", "--seed", "1").stdout
        self.assertEqual(run("max-acyclic", stdin=big).returncode, 3)

    def test_gallery(self):
        doc = self.output("gallery", run("gallery"))
        names = {f["name"] for f in doc}
        self.assertTrue({"example-1", "example-2", "octahedron", "rp2-plus-sigma", "chamber-9", "chamber-10",
                         "cone-5"} <= names)
        self.assertEqual(run("gallery", "--name", "nope").returncode, 2)

    def test_random_is_seeded(self):
        a = self.output("tournament", run("random", "--n", "6", "--d", "2", "--seed", "9"))
        b = self.output("tournament", run("random", "--n", "6", "--d", "2", "--seed", "9"))
        self.assertEqual(a, b)
        acyc = run("random", "--n", "6", "--d", "2", "--seed", "9", "--acyclic").stdout
        self.assertEqual(run("check", "--property", "acyclic", stdin=acyc).returncode, 0)

    def test_extract(self):
        t = run("random", "--n", "20", "--d", "2", "--seed", "4").stdout
        proc = run("extract", stdin=t)
        self.assertEqual(proc.returncode, 0)
        lines = [json.loads(x) for x in proc.stdout.strip().split("\n")]
        for step in lines[:-1]:
            validator("extractionStep").validate(step)
        validator("vertexSet").validate(lines[-1])
        k = len(lines[-1]["survivors"])
        self.assertEqual(len(lines) - 1, k * (k - 1) // 2)

    def test_max_acyclic(self):
        doc = self.output("vertexSet", run("max-acyclic", stdin=self.gallery("example-2")))
        self.assertEqual(doc["vertices"], [1, 2, 3, 4])

    def test_realize(self):
        pts = self.write("p.json", {"d": 2, "points": [["0", "0"], ["1", "0"], ["0", "1"]]})
        doc = self.output("tournament", run("realize", "--points", pts))
        self.assertEqual(doc["signs"], [1])
        bad = self.write("b.json", {"d": 2, "points": [["0", "0"], ["1", "1"], ["2", "2"]]})
        proc = run("realize", "--points", bad)
        self.assertEqual(proc.returncode, 2)
        self.assertIn("1,2,3", json.loads(proc.stderr)["message"])

    def test_chamber_round_trip(self):
        e2 = self.write("e2.json", self.gallery("example-2"))
        x = self.output("chamberPoint", run("chamber", "--to-point", e2))
        xp = self.write("x.json", x)
        back = self.output("tournament", run("chamber", "--from-point", xp))
        self.assertEqual(back["signs"], [1, 1, 1, 1])
        e1 = self.write("e1.json", self.gallery("example-1"))
        self.output("chamberFailure", run("chamber", "--to-point", e1), 1)
        self.assertEqual(run("chamber").returncode, 2)

    def test_chamber_fixture_point(self):
        coords = [42, 0, 3, 88, 91, 87, 66, 28, 64, 60, 87, 11, 39, 81, 37, 51, 0, 23,
                  77, 33, 23, 58, 11, 7, 70, 64, 73, 57, 86, 52, 98, 49, 57, 100, 43, 60]
        keys = [f"{i},{j}" for i in range(1, 10) for j in range(i + 1, 10)]
        xp = self.write("x9.json", {"x": {k: str(v) for k, v in zip(keys, coords)}})
        t = run("chamber", "--from-point", xp).stdout
        self.assertEqual(json.loads(t)["signs"], json.loads(self.gallery("chamber-9"))["signs"])

    def test_ramsey(self):
        doc = self.output("ramsey", run("ramsey", "--demo", "8", "2", "1"))
        self.assertEqual(doc["blue_cliques_of_size_d_plus_3"], 0)
        self.assertAlmostEqual(doc["blue_fraction"], 0.125, delta=0.01)

    def test_info(self):
        doc = self.output("info", run("info", stdin=self.gallery("cone-5")))
        self.assertEqual(doc["free_faces"], [[1, 2], [1, 3], [2, 3], [4, 5]])

    def test_usage_errors(self):
        self.assertEqual(run().returncode, 2)
        self.assertEqual(run("check", "--property", "bogus", stdin="{}").returncode, 2)
        self.assertEqual(run("check", "--property", "acyclic", stdin="{\"n\":4}").returncode, 2)
        self.assertEqual(run("check", "--property", "acyclic", stdin="not json").returncode, 2)
        self.assertEqual(run("check", "/nonexistent.json", "--property", "acyclic").returncode, 2)
        proc = run("check", "--property", "acyclic", stdin='{"n":4,"d":2,"signs":[1,1,1,2]}')
        self.assertEqual(proc.returncode, 2)
        validator("error").validate(json.loads(proc.stderr))


if __name__ == "__main__":
    unittest.main()
