"""Rendering of results as text, canonical JSON, or CSV.

Output is deterministic: terms and classes are sorted, nothing time-dependent
is written.
"""

from __future__ import annotations

import csv
import io
import json

from .classify import BasicClassReport, DistinguishResult, divisibility
from .ring import LaurentPolynomial
from .verify import VerifyReport

FORMATS = ("text", "json", "csv")


def _json(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def to_jsonable(result):
    if isinstance(result, (LaurentPolynomial, BasicClassReport, DistinguishResult)):
        return result.to_dict()
    if isinstance(result, VerifyReport):
        return {"ok": result.ok, "checks": [r.to_dict() for r in result.results]}
    if isinstance(result, dict):
        return {k: to_jsonable(v) for k, v in result.items()}
    if isinstance(result, (list, tuple)):
        return [to_jsonable(v) for v in result]
    return result


def _report_text(rep: BasicClassReport) -> str:
    header = [f"{v}_exp" for v in rep.variables] + ["coeff", "divisibility"]
    rows = [[*map(str, e), str(c), str(divisibility(e))] for e, c in rep.classes]
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines += ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows]
    lines.append(f"count: {rep.count}")
    lines.append("coefficient multiset: {" + ", ".join(map(str, rep.coefficient_multiset)) + "}")
    lines.append("+-1 divisibility multiset: {" + ", ".join(map(str, rep.divisibility_multiset)) + "}")
    return "\n".join(lines) + "\n"


def emit(result, fmt: str = "text") -> str:
    """Serialize a polynomial, report, comparison, or verification run."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}")
    if fmt == "json":
        return _json(to_jsonable(result)) + "\n"

    if isinstance(result, LaurentPolynomial):
        if fmt == "text":
            return str(result) + "\n"
        return _csv([f"{v}_exp" for v in result.variables] + ["coeff"],
                    [[*e, c] for e, c in result.items()])

    if isinstance(result, BasicClassReport):
        if fmt == "text":
            return _report_text(result)
        return _csv([f"{v}_exp" for v in result.variables] + ["coeff", "divisibility"],
                    [[*e, c, divisibility(e)] for e, c in result.classes])

    if isinstance(result, DistinguishResult):
        if fmt == "csv":
            rows = [[result.p1, *e, c, divisibility(e)] for e, c in result.report1.classes]
            rows += [[result.p2, *e, c, divisibility(e)] for e, c in result.report2.classes]
            return _csv(["p", "xi_exp", "tau_exp", "coeff", "divisibility"], rows)
        lines = [
            f"n={result.n} p1={result.p1} p2={result.p2} r={result.r}",
            f"--- E({result.n},{result.r}) for p={result.p1}",
            _report_text(result.report1).rstrip(),
            f"--- E({result.n},{result.r}) for p={result.p2}",
            _report_text(result.report2).rstrip(),
            f"counts differ: {result.counts_differ}",
            f"coefficient multisets differ: {result.coefficients_differ}",
            f"+-1 divisibility multisets differ: {result.divisibilities_differ}",
            f"verdict: {result.verdict}",
        ]
        return "\n".join(lines) + "\n"

    if isinstance(result, VerifyReport):
        if fmt == "csv":
            return _csv(["suite", "identity", "cell", "status"],
                        [[r.suite, r.identity, r.cell_str(), "pass" if r.passed else "FAIL"]
                         for r in result.results])
        lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.suite}: {r.identity} [{r.cell_str()}]"
                 for r in result.results]
        failed = sum(not r.passed for r in result.results)
        lines.append(f"{len(result.results) - failed} passed, {failed} failed")
        return "\n".join(lines) + "\n"

    if isinstance(result, list) and result and isinstance(result[0], dict):
        header = list(result[0])
        if fmt == "csv":
            return _csv(header, [[row[h] for h in header] for row in result])
        return "\n".join("  ".join(f"{h}={row[h]}" for h in header) for row in result) + "\n"

    raise TypeError(f"cannot emit {type(result).__name__} as {fmt}")
