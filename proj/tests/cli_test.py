"""End-to-end tests of the hweyl command-line tool.

usage: cli_test.py <path-to-hweyl> <path-to-schema>
"""

import json
import subprocess
import sys
import unittest

import jsonschema

CLI = None
SCHEMA = None


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True, timeout=300)


class JsonRecords(unittest.TestCase):
    # (arguments, expected exit code)
    CASES = [
        (["mul", "--n", "1", "x1", "y1"], 0),
        (["mul", "--n", "2", "x1*y1 + y2^2", "x2"], 0),
        (["star", "--n", "1", "--k", "1", "x1", "y1"], 0),
        (["twist", "--k", "1,0", "y1*y2"], 0),
        (["twist", "--k", "2", "--power", "-3", "y1^2"], 0),
        (["commutator", "--n", "1", "x1", "y1"], 0),
        (["commutator", "--k", "1", "--star", "x1", "y1"], 0),
        (["associator", "--k", "1", "y1*x1", "y1*x1", "y1*x1"], 0),
        (["homassoc-check", "--k", "1,-1/2", "x1+y2", "y1^2", "x2*y1"], 0),
        (["reduce", "--n", "1", "--k", "1", "y1^2*x1"], 0),
        (["derivation-check", "--k", "1", "y1"], 0),
        (["derivation-check", "--k", "1", "y1^2"], 1),
        (["iso", "--n", "1", "--k", "2", "--k2", "3"], 0),
        (["iso", "--k", "0,2", "--k2", "5,0", "--inverse"], 0),
        (["iso", "--k", "1,0", "--k2", "1,1"], 1),
        (["morphism-check", "--k", "2", "--k2", "3", "3/2*x1", "2/3*y1"], 0),
        (["morphism-check", "--k", "2", "--k2", "3", "3/2*x1", "2*y1"], 1),
        (["morphism-check", "--k", "1", "--k2", "1", "x1", "y1^2"], 1),
        (["deform", "--k", "1", "--op", "star", "y1", "x1"], 0),
        (["deform", "--k", "1", "--op", "bracket", "x1", "y1^2"], 0),
        (["deform", "--k", "1,1", "--op", "twist", "y1^2*y2", "--at", "1,1"], 0),
        (["selftest", "--seed", "7", "--scale", "0.1"], 0),
        (["mul", "--n", "1", "x1 +* y1"], 2),
        (["mul", "--n", "1", "x3"], 3),
        (["star", "--n", "2", "--k", "1", "x1"], 3),
        (["reduce", "--n", "1", "0"], 4),
    ]

    def test_every_record_validates(self):
        for args, code in self.CASES:
            with self.subTest(args=args):
                r = run(*args, "--json")
                self.assertEqual(r.returncode, code, r.stderr)
                record = json.loads(r.stdout)
                jsonschema.validate(record, SCHEMA)
                self.assertEqual(record["command"], args[0])
                self.assertEqual(record["ok"], code == 0)

    def test_every_command_is_covered(self):
        covered = {args[0] for args, _ in self.CASES}
        self.assertEqual(covered, set(SCHEMA["properties"]["command"]["enum"]))


class HumanOutput(unittest.TestCase):
    def lines(self, *args, code=0):
        r = run(*args)
        self.assertEqual(r.returncode, code, r.stderr)
        return r.stdout.splitlines()

    def test_star(self):
        self.assertEqual(self.lines("star", "--n", "1", "--k", "1", "x1", "y1"), ["y1*x1 + x1 + 1"])

    def test_star_symbol(self):
        self.assertEqual(self.lines("star", "--k", "1", "x1 ⊛ y1"), ["y1*x1 + x1 + 1"])
        self.assertEqual(self.lines("star", "--k", "1", "x1 @ y1"), ["y1*x1 + x1 + 1"])

    def test_mul(self):
        self.assertEqual(self.lines("mul", "--n", "1", "x1*y1"), ["y1*x1 + 1"])
        self.assertEqual(self.lines("mul", "--n", "1", "x1·y1"), ["y1*x1 + 1"])
        self.assertEqual(self.lines("mul", "--n", "1", "((y1^2))"), ["y1^2"])

    def test_reduce(self):
        out = self.lines("reduce", "--n", "1", "--k", "1", "y1^2*x1")
        self.assertEqual(out[0], "y1^2*x1")
        self.assertEqual(len([l for l in out if l.startswith("  [")]), 3)
        self.assertEqual(out[-1], "scalar: 2 (3 steps)")

    def test_iso(self):
        self.assertEqual(self.lines("iso", "--n", "1", "--k", "2", "--k2", "3"),
                         ["φ(x1) = 3/2*x1", "φ(y1) = 2/3*y1"])

    def test_iso_two_generators(self):
        self.assertEqual(self.lines("iso", "--k", "0,2", "--k2", "5,0"),
                         ["φ(x1) = x2", "φ(x2) = 5/2*x1", "φ(y1) = y2", "φ(y2) = 2/5*y1"])

    def test_deform(self):
        self.assertEqual(self.lines("deform", "--k", "1", "y1", "x1"), ["y1*x1 + t1*x1"])
        self.assertEqual(self.lines("deform", "--k", "1", "--op", "bracket", "x1", "y1^2"), ["2*y1 + 2*t1"])
        self.assertEqual(self.lines("deform", "--k", "1", "--op", "twist", "y1^2", "--at", "1"),
                         ["y1^2 + 2*t1*y1 + t1^2", "at (1): y1^2 + 2*y1 + 1"])

    def test_explicit_positions(self):
        self.assertEqual(self.lines("deform", "--n", "2", "--positions", "2", "y2", "x2"), ["y2*x2 + t1*x2"])

    def test_mixed_products_rejected(self):
        r = run("star", "--k", "1", "x1 @ y1 * x1")
        self.assertEqual(r.returncode, 2)
        self.assertIn("offset", r.stderr)

    def test_decimal_rejected(self):
        self.assertEqual(run("mul", "--n", "1", "0.5*x1").returncode, 2)

    def test_unknown_flag_is_usage_error(self):
        self.assertEqual(run("mul", "--bogus", "x1").returncode, 2)


if __name__ == "__main__":
    CLI = sys.argv.pop(1)
    with open(sys.argv.pop(1), encoding="utf-8") as f:
        SCHEMA = json.load(f)
    unittest.main()
