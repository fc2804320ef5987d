"""Text, JSON, LaTeX and CSV renderings of the multipole and spin tables."""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .multipole import multipole_basis
from .spinalg import SpinAlgebraTable
from .uea import AXES, UeaElement, format_element, format_rational

FORMATS = ("text", "json", "latex", "csv")


def _latex_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def _latex_monomial(m) -> str:
    parts = []
    for axis, e in zip(AXES, m):
        if e == 1:
            parts.append(f"J_{axis}")
        elif e > 1:
            parts.append(f"J_{axis}^{{{e}}}")
    return "".join(parts)


def latex_element(u: UeaElement) -> str:
    if u.is_zero():
        return "0"
    pieces = []
    for m, c in sorted(u.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))):
        mono = _latex_monomial(m)
        mag = abs(c)
        body = _latex_rational(mag) if not mono else (mono if mag == 1 else _latex_rational(mag) + mono)
        pieces.append(("-" if c < 0 else "+", body))
    out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def _tensor_label(indices: str) -> str:
    return "1" if indices in ("", "1") else f"T_{{{indices}}}"


# -- multipole table ----------------------------------------------------------

def multipole_rows(k_max: int):
    for k in range(k_max + 1):
        for comp in multipole_basis(k).components:
            yield k, comp.label, comp.expansion


def multipole_table(k_max: int, fmt: str) -> str:
    rows = list(multipole_rows(k_max))
    if fmt == "text":
        out = []
        for k in range(k_max + 1):
            out.append(f"k = {k}")
            for kk, lab, exp in rows:
                if kk == k:
                    out.append(f"  T[{lab}] = {format_element(exp)}")
        return "\n".join(out) + "\n"
    if fmt == "json":
        levels = [{"k": k, "components": [{"indices": lab, "expansion": exp.to_json()}
                                          for kk, lab, exp in rows if kk == k]}
                  for k in range(k_max + 1)]
        return json.dumps({"k_max": k_max, "levels": levels}, indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["k", "indices", "e_x", "e_y", "e_z", "c"])
        for k, lab, exp in rows:
            for m, c in exp.sorted_terms():
                w.writerow([k, lab, *m, format_rational(c)])
        return buf.getvalue()
    if fmt == "latex":
        out = [r"\begin{longtable}{cll}", r"$k$ & component & image \\", r"\hline"]
        for k in range(k_max + 1):
            for kk, lab, exp in rows:
                if kk == k:
                    out.append(rf"{k} & ${_tensor_label(lab)}$ & ${latex_element(exp)}$ \\")
            out.append(r"\hline")
        out.append(r"\end{longtable}")
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def parse_multipole_json(text: str) -> dict[tuple[int, str], UeaElement]:
    data = json.loads(text)
    return {(lvl["k"], c["indices"]): UeaElement.from_json(c["expansion"])
            for lvl in data["levels"] for c in lvl["components"]}


# -- spin table ---------------------------------------------------------------

def _vec_text(table: SpinAlgebraTable, row: dict[int, Fraction]) -> str:
    if not row:
        return "0"
    parts = []
    for l, c in sorted(row.items()):
        lab = f"T[{table.labels[l]}]" if table.labels[l] != "1" else "1"
        parts.append((c, lab))
    text = ""
    for i, (c, lab) in enumerate(parts):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = lab if mag == 1 else (str(mag) if lab == "1" else f"{mag}*{lab}")
        text += (("-" if sign == "-" else "") + body) if i == 0 else f" {sign} {body}"
    return text


def _vec_latex(table: SpinAlgebraTable, row: dict[int, Fraction]) -> str:
    if not row:
        return "0"
    text = ""
    for i, (l, c) in enumerate(sorted(row.items())):
        lab = _tensor_label(table.labels[l] if table.labels[l] != "1" else "")
        mag = abs(c)
        if lab == "1":
            body = _latex_rational(mag)
        else:
            body = lab if mag == 1 else _latex_rational(mag) + lab
        sign = "-" if c < 0 else "+"
        text += (("-" if sign == "-" else "") + body) if i == 0 else f" {sign} {body}"
    return text


def spin_table(table: SpinAlgebraTable, fmt: str) -> str:
    n = table.dim

    def name(i):
        return "1" if table.labels[i] == "1" else f"T[{table.labels[i]}]"

    if fmt == "text":
        out = [f"spin algebra 2s = {table.two_s}, dimension {n}"]
        for i in range(n):
            for j in range(n):
                out.append(f"  {name(i)} * {name(j)} = {_vec_text(table, table.constants[i, j])}")
        return "\n".join(out) + "\n"
    if fmt == "json":
        return json.dumps(table.to_json(), indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "l", "left", "right", "result", "c"])
        for i in range(n):
            for j in range(n):
                for l, c in sorted(table.constants[i, j].items()):
                    w.writerow([i, j, l, table.labels[i], table.labels[j], table.labels[l],
                                format_rational(c)])
        return buf.getvalue()
    if fmt == "latex":
        def tex(i):
            return _tensor_label(table.labels[i] if table.labels[i] != "1" else "")
        out = [rf"% spin algebra 2s = {table.two_s}", r"\begin{longtable}{rcl}", r"\hline"]
        for i in range(n):
            for j in range(n):
                out.append(rf"${tex(i)} \cdot {tex(j)}$ & $=$ & ${_vec_latex(table, table.constants[i, j])}$ \\")
        out += [r"\hline", r"\end{longtable}"]
        return "\n".join(out) + "\n"
    raise ValueError(f"unknown format {fmt!r}")


def decomposition(coeffs, fmt: str) -> str:
    rows = []
    for (m, n, c), v in coeffs.items():
        lab = multipole_basis(n).components[c].label
        rows.append((m, n, c, lab, v))
    if fmt == "json":
        return json.dumps([{"m": m, "n": n, "component": c, "indices": lab,
                            "c": format_rational(v)} for m, n, c, lab, v in rows], indent=1) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["m", "n", "component", "indices", "c"])
        for m, n, c, lab, v in rows:
            w.writerow([m, n, c, lab, format_rational(v)])
        return buf.getvalue()
    if fmt == "latex":
        text = ""
        for i, (m, n, c, lab, v) in enumerate(rows):
            cas = "" if m == 0 else ("C" if m == 1 else f"C^{{{m}}}")
            op = cas + (_tensor_label(lab) if n else "")
            mag = abs(v)
            body = _latex_rational(mag) if not op else (op if mag == 1 else rf"{_latex_rational(mag)}\,{op}")
            sign = "-" if v < 0 else "+"
            text += (("-" if sign == "-" else "") + body) if i == 0 else f" {sign} {body}"
        return "$" + (text or "0") + "$\n"
    lines = []
    for m, n, c, lab, v in rows:
        lines.append(f"C^{m} T{n}[{lab}] : {v}")
    return "\n".join(lines or ["0"]) + "\n"
