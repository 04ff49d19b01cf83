"""On-disk text formats for sequences and JSON rendering of reports.

Sequence files come in two forms:

    COMPLEX <n>            general sequences; n lines "<re> <im>" printed
    <re> <im>              with 17 significant digits (lossless doubles)
    ...

    UNIMODULAR-PHASE <L> <n>   phase-exact sequences; n integer lines p_j,
    <p_0>                      meaning entry_j = exp(i*pi*p_j/L)
    ...

Phase-exact files regenerate their entries bit for bit. JSON output is
assembled by hand so every float is printed with 17 significant digits.
"""

from __future__ import annotations

import os

import numpy as np

from .errors import FormatError
from .gauss import GaussSumDecomposition
from .seqcore import DemeritReport, Sequence


def _fmt(value: float) -> str:
    return format(float(value), ".17g")


def format_sequence(seq: Sequence) -> str:
    if seq.phase_exact:
        lines = [f"UNIMODULAR-PHASE {seq.phase_modulus} {seq.n}"]
        lines.extend(str(int(p)) for p in seq.phases)
    else:
        lines = [f"COMPLEX {seq.n}"]
        lines.extend(f"{_fmt(v.real)} {_fmt(v.imag)}" for v in seq.entries)
    return "\n".join(lines) + "\n"


def parse_sequence(text: str) -> Sequence:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty sequence file")
    header = lines[0].split()
    body = lines[1:]

    if header[0] == "UNIMODULAR-PHASE":
        if len(header) != 3:
            raise FormatError("UNIMODULAR-PHASE header needs modulus and length")
        try:
            modulus, n = int(header[1]), int(header[2])
        except ValueError as exc:
            raise FormatError(f"bad UNIMODULAR-PHASE header: {lines[0]!r}") from exc
        if len(body) != n:
            raise FormatError(f"expected {n} phase lines, found {len(body)}")
        try:
            phases = np.array([int(ln) for ln in body], dtype=np.int64)
        except ValueError as exc:
            raise FormatError("phase lines must be integers") from exc
        return Sequence.from_phases(modulus, phases)

    if header[0] == "COMPLEX":
        if len(header) != 2:
            raise FormatError("COMPLEX header needs a length")
        try:
            n = int(header[1])
        except ValueError as exc:
            raise FormatError(f"bad COMPLEX header: {lines[0]!r}") from exc
        if len(body) != n:
            raise FormatError(f"expected {n} entry lines, found {len(body)}")
        entries = np.empty(n, dtype=np.complex128)
        for i, ln in enumerate(body):
            parts = ln.split()
            if len(parts) != 2:
                raise FormatError(f"entry line {i + 1} must be '<re> <im>': {ln!r}")
            try:
                entries[i] = complex(float(parts[0]), float(parts[1]))
            except ValueError as exc:
                raise FormatError(f"bad number on entry line {i + 1}: {ln!r}") from exc
        return Sequence.from_entries(entries)

    raise FormatError(f"unknown sequence header: {lines[0]!r}")


def write_sequence(seq: Sequence, path: str | os.PathLike) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_sequence(seq))


def read_sequence(path: str | os.PathLike) -> Sequence:
    with open(path, "r", encoding="ascii") as fh:
        return parse_sequence(fh.read())


def _json_object(items: list[tuple[str, str]], indent: bool) -> str:
    if not indent:
        return "{" + ", ".join(f'"{k}": {v}' for k, v in items) + "}"
    inner = ",\n".join(f'  "{k}": {v}' for k, v in items)
    return "{\n" + inner + "\n}"


def _complex_json(value: complex) -> str:
    return f"[{_fmt(value.real)}, {_fmt(value.imag)}]"


def report_json(report: DemeritReport, indent: bool = False) -> str:
    """Flat JSON object with the seven demerit-report fields."""
    items = [(k, _fmt(v)) for k, v in report.as_dict().items()]
    return _json_object(items, indent)


def gauss_json(N: int, x: float, theta: float, total: complex,
               decomposition: GaussSumDecomposition | None = None,
               indent: bool = False) -> str:
    """JSON for the gauss command: the total, plus every term if decomposed."""
    items = [("N", str(int(N))), ("x", _fmt(x)), ("theta", _fmt(theta)),
             ("total", _complex_json(total))]
    if decomposition is not None:
        d = decomposition
        items += [
            ("M", str(d.M)),
            ("epsilon", _fmt(d.epsilon)),
            ("mu", _complex_json(d.mu)),
            ("main_term", _complex_json(d.main_term)),
            ("half_mu_term", _complex_json(d.half_mu_term)),
            ("e_terms", _complex_json(d.e_terms)),
            ("g_terms", _complex_json(d.g_terms)),
            ("remainder", _complex_json(d.remainder)),
        ]
    return _json_object(items, indent)
