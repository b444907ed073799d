# Copyright the halftwist authors
# Licensed under the MIT license

import json
from pathlib import Path
from tempfile import TemporaryDirectory
from typing import Any
from unittest import TestCase

from click.testing import CliRunner, Result

from ..main import explore_m5, main


def records(result: Result) -> list[dict[str, Any]]:
    return [json.loads(line) for line in result.output.splitlines() if line.startswith("{")]


class MainTest(TestCase):
    def invoke(self, *args: str, exit_code: int = 0) -> list[dict[str, Any]]:
        result = CliRunner().invoke(main, list(args))
        self.assertEqual(exit_code, result.exit_code, result.output)
        return records(result)

    def test_version(self):
        self.invoke("--version")

    def test_dim(self):
        for points, dimension in ((2, 1), (4, 2), (8, 14), (12, 132)):
            with self.subTest(points):
                (record,) = self.invoke("dim", "--points", str(points))
                self.assertEqual("dimension", record["schema"])
                self.assertEqual(dimension, record["dimension"])
                self.assertEqual(points // 2, record["n"])
        for points in ("5", "0"):
            with self.subTest(points):
                self.invoke("dim", "-p", points, exit_code=3)

    def test_matrix(self):
        (record,) = self.invoke("matrix", "-p", "4", "-w", "1")
        self.assertEqual([["-A^3", "A"], ["0", "A^-1"]], record["entries"])
        self.assertEqual("symbolic", record["ring"])

        (record,) = self.invoke("matrix", "-p", "4", "--word=-2")
        self.assertEqual([["A", "0"], ["A^-1", "-A^-3"]], record["entries"])

        (record,) = self.invoke("matrix", "-p", "4", "-w", "1", "-r", "12:1")
        self.assertEqual("12:1", record["ring"])
        self.assertEqual("N=12:[0,1,0,-1]", record["entries"][1][1])

        (record,) = self.invoke("matrix", "-p", "4", "-w", "1 1 -2 -2")
        self.assertEqual(
            [["A^8 - A^4 + 2 - A^-4", "-A^-2 + A^-6"], ["A^-2 - A^-6", "A^-8"]],
            record["entries"],
        )

        (record,) = self.invoke("matrix", "-p", "4")
        self.assertEqual([["1", "0"], ["0", "1"]], record["entries"])

        (record,) = self.invoke("matrix", "-p", "6")
        self.assertEqual(5, len(record["entries"]))
        self.assertEqual([], record["word"])

    def test_matrix_usage(self):
        self.invoke("matrix", "-p", "4", "-w", "4", exit_code=3)
        self.invoke("matrix", "-p", "4", "-w", "1", "-r", "12:2", exit_code=3)
        self.invoke("matrix", "-p", "4", "-s", "-r", "12:1", exit_code=3)
        self.invoke("matrix", "-p", "14", "-w", "1", exit_code=3)

    def test_certify(self):
        (record,) = self.invoke(
            "certify", "-p", "4", "-w", "1 1 -2 -2", "-r", "20:1", exit_code=10
        )
        self.assertEqual("infinite", record["verdict"])
        self.assertEqual("trace-conjugate", record["witness"]["type"])
        self.assertEqual(2, record["dimension"])

        (record,) = self.invoke(
            "certify", "-p", "4", "-w", "1 1 -2 -2", "-r", "12:1", exit_code=10
        )
        self.assertEqual("parabolic-trace", record["witness"]["type"])

        (record,) = self.invoke(
            "certify", "-p", "6", "-w", "1 1 -2 -2", "-r", "56:1", exit_code=10
        )
        self.assertEqual(2, record["dimension"])

        (record,) = self.invoke("certify", "-p", "4", "-w", "1", "-r", "40:1")
        self.assertEqual("finite", record["verdict"])
        self.assertEqual(5, record["order"])

        (record,) = self.invoke("certify", "-p", "4", "-r", "40:1")
        self.assertEqual(1, record["order"])

        self.invoke("certify", "-p", "4", "-w", "1", exit_code=3)

    def test_verify_birman(self):
        reports = self.invoke("verify-birman", "-p", "4")
        self.assertEqual(["R1", "R2"], [r["relator"] for r in reports])
        self.assertEqual(["A^6", "A^12"], [r["scalar"] for r in reports])
        self.assertTrue(all(r["pass"] for r in reports))

        reports = self.invoke("verify-birman", "-p", "6", "-r", "12:1")
        self.assertTrue(all(r["pass"] for r in reports))

        self.invoke("verify-birman", "-p", "8", exit_code=3)
        self.invoke("verify-birman", "-p", "2", exit_code=3)

    def test_check_power(self):
        (record,) = self.invoke("check-power", "-p", "4", "-m", "6")
        self.assertEqual("12:1", record["ring"])
        self.assertEqual("N=12:[-1,0,0,0]", record["scalar"])
        self.assertTrue(record["pass"])

        (record,) = self.invoke("check-power", "-p", "6", "-m", "5")
        self.assertEqual("40:1", record["ring"])

        self.invoke("check-power", "-p", "4", "-m", "6", "-r", "8:1", exit_code=3)

    def test_rescale_check(self):
        for points, expected in (("4", -1), ("6", 1)):
            with self.subTest(points):
                (record,) = self.invoke("rescale-check", "-p", points, "-m", "7")
                self.assertEqual("56:1", record["ring"])
                self.assertEqual(expected, record["value"])
                self.assertTrue(record["pass"])
        self.invoke("rescale-check", "-p", "4", "-m", "8", exit_code=3)
        self.invoke("rescale-check", "-p", "4", "-m", "3", "-r", "12:1", exit_code=3)

    def test_closure(self):
        (record,) = self.invoke("closure", "-p", "4")
        self.assertEqual(60, record["order"])
        self.assertEqual("40:1", record["ring"])
        self.assertFalse(record["cap_exceeded"])

        (record,) = self.invoke("closure", "-p", "4", "-r", "12:1", "-c", "100", exit_code=20)
        self.assertTrue(record["cap_exceeded"])
        self.assertIsNone(record["order"])
        self.assertGreater(record["explored"], 100)

    def test_reproduce(self):
        rows = self.invoke("reproduce")
        self.assertEqual(14, len(rows))
        self.assertEqual(
            [(m, n) for m in range(6, 13) for n in (2, 3)],
            [(row["m"], row["n"]) for row in rows],
        )
        self.assertTrue(all(row["pass"] for row in rows))
        self.assertTrue(all(row["verdict"] == "infinite" for row in rows))
        self.assertEqual("N=12:[-1,0,0,0]", rows[0]["power_scalar"])
        self.assertEqual(3, rows[0]["q_order"])

    def test_reproduce_usage(self):
        (row,) = self.invoke("reproduce", "-m", "7", "-p", "4")
        self.assertEqual("56:1", row["ring"])
        self.assertEqual(14, row["q_order"])
        self.invoke("reproduce", "-m", "5", exit_code=3)
        self.invoke("reproduce", "-m", "8..6", exit_code=3)
        self.invoke("reproduce", "-p", "2", exit_code=3)
        self.invoke("reproduce", "-p", "x", exit_code=3)

    def test_explore_empty(self):
        self.assertEqual([], self.invoke("explore-m5", "--max-len", "0"))
        self.invoke("explore-m5", "--max-len", "0", "-r", "12:1", exit_code=3)

    def test_explore_default_length(self):
        (option,) = [p for p in explore_m5.params if p.name == "max_len"]
        self.assertEqual(2, option.default)

    def test_explore_identity(self):
        (row,) = self.invoke("explore-m5", "--max-len", "1", "--cap", "1")
        self.assertEqual([], row["word"])
        self.assertEqual("40:1", row["ring"])
        self.assertEqual("finite", row["verdict"])
        self.assertEqual(1, row["certificate"]["order"])

    def test_out(self):
        with TemporaryDirectory() as td:
            path = Path(td) / "out.jsonl"
            self.assertEqual([], self.invoke("--out", str(path), "dim", "-p", "6"))
            (line,) = path.read_text().splitlines()
            self.assertEqual(5, json.loads(line)["dimension"])
