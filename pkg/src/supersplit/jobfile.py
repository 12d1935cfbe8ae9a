"""Line-oriented job files.

Example::

    [model]
    m = 2
    n = 2
    b = 1, 1

    [variety]
    f1 = "x1^2 + x2^2 + x3^2 + t1*t2"

    [assume]
    smooth = true

Sections: ``[model]`` (m, n, optional a and b, default all 1), optional
``[model2]`` for products, ``[variety]`` (generators ``f<i>`` and optional
``index_base`` 0 or 1), ``[assume]`` (irreducible, smooth) and ``[output]``
(max_order).  For products the variables of the second factor follow those of
the first: with P^{1|1} x P^{1|1} the coordinates are x1 x2 | x3 x4 and t1 | t2.
"""

from __future__ import annotations

import configparser
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .analysis import VarietyJob
from .errors import JobError, ParseError, SupersplitError
from .models import ModelSpec
from .parser import parse_polynomial, uses_zero_index

SECTIONS = {
    "model": {"m", "n", "a", "b"},
    "model2": {"m", "n", "a", "b"},
    "variety": None,  # f<i> plus index_base
    "assume": {"irreducible", "smooth"},
    "output": {"max_order"},
}

_GEN_KEY = re.compile(r"^f(\d+)$")


@dataclass(frozen=True)
class JobFile:
    spec: ModelSpec
    spec2: Optional[ModelSpec]
    generator_texts: Tuple[Tuple[str, str], ...]  # (name, expression)
    zero_based: bool
    assume_irreducible: bool = False
    assume_smooth: bool = False
    max_order: Optional[int] = None
    source: str = "<job>"

    @property
    def has_variety(self) -> bool:
        return bool(self.generator_texts)

    def counts(self) -> Tuple[int, int]:
        specs = [self.spec] + ([self.spec2] if self.spec2 else [])
        return sum(s.n_even for s in specs), sum(s.n for s in specs)


def _line_index(text: str) -> Dict[Tuple[str, str], int]:
    """(section, key) -> 1-based line number, recovered by scanning the text."""
    out = {}
    section = ""
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        m = re.match(r"^\[([^\]]+)\]", line)
        if m:
            section = m.group(1).strip().lower()
            out.setdefault((section, ""), no)
            continue
        m = re.match(r"^([A-Za-z_][\w]*)\s*[=:]", line)
        if m and section:
            out.setdefault((section, m.group(1).lower()), no)
    return out


def _int(value: str, where: str, line: int, block: str) -> int:
    try:
        return int(value.strip())
    except ValueError:
        raise JobError(f"{where}: expected an integer, got {value.strip()!r}", line, block) from None


def _int_list(value: str, where: str, line: int, block: str) -> List[int]:
    body = value.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1]
    if not body.strip():
        return []
    return [_int(v, where, line, block) for v in body.split(",")]


def _bool(value: str, where: str, line: int, block: str) -> bool:
    v = value.strip().lower()
    if v in ("true", "yes", "1", "on"):
        return True
    if v in ("false", "no", "0", "off"):
        return False
    raise JobError(f"{where}: expected true or false, got {value.strip()!r}", line, block)


def _unquote(value: str) -> str:
    v = value.strip()
    if len(v) >= 2 and v[0] == v[-1] and v[0] in "\"'":
        return v[1:-1]
    return v


def _read_model(cp, block: str, lines) -> ModelSpec:
    sec = cp[block]

    def ln(key):
        return lines.get((block, key), lines.get((block, ""), 0))

    for key in ("m", "n"):
        if key not in sec:
            raise JobError(f"[{block}] is missing '{key}'", ln(""), block)
    m = _int(sec["m"], f"[{block}] m", ln("m"), block)
    n = _int(sec["n"], f"[{block}] n", ln("n"), block)
    if m < 0 or n < 0:
        raise JobError(f"[{block}] m and n must be non-negative", ln("m"), block)
    a = _int_list(sec["a"], f"[{block}] a", ln("a"), block) if "a" in sec else [1] * (m + 1)
    b = _int_list(sec["b"], f"[{block}] b", ln("b"), block) if "b" in sec else [1] * n
    if len(a) != m + 1:
        raise JobError(f"[{block}] a has {len(a)} entries, expected m+1 = {m + 1}", ln("a"), block)
    if len(b) != n:
        raise JobError(f"[{block}] b has {len(b)} entries, expected n = {n}", ln("b"), block)
    if any(x < 1 for x in a):
        raise JobError(f"[{block}] even weights must be positive", ln("a"), block)
    return ModelSpec.create(m, n, a, b)


def parse_job_text(text: str, source: str = "<job>") -> JobFile:
    lines = _line_index(text)
    cp = configparser.ConfigParser(interpolation=None, delimiters=("=",), comment_prefixes=("#", ";"),
                                   inline_comment_prefixes=None, strict=True)
    cp.optionxform = str.lower
    try:
        cp.read_string(text, source=source)
    except configparser.Error as exc:
        line = getattr(exc, "lineno", 0) or 0
        raise JobError(f"malformed job file: {exc.message if hasattr(exc, 'message') else exc}", line) from None

    for block in cp.sections():
        if block not in SECTIONS:
            raise JobError(f"unknown section [{block}]", lines.get((block, ""), 0), block)
        allowed = SECTIONS[block]
        for key in cp[block]:
            if allowed is not None and key not in allowed:
                raise JobError(f"unknown key '{key}' in [{block}]", lines.get((block, key), 0), block)
            if allowed is None and key != "index_base" and not _GEN_KEY.match(key):
                raise JobError(
                    f"generator keys must look like f1, f2, ...; got '{key}'",
                    lines.get((block, key), 0), block,
                )
    if "model" not in cp:
        raise JobError("missing [model] section")
    spec = _read_model(cp, "model", lines)
    spec2 = _read_model(cp, "model2", lines) if "model2" in cp else None

    gens: List[Tuple[str, str]] = []
    zero_based = None
    if "variety" in cp:
        sec = cp["variety"]
        keys = sorted((k for k in sec if _GEN_KEY.match(k)), key=lambda k: int(k[1:]))
        gens = [(k, _unquote(sec[k])) for k in keys]
        if "index_base" in sec:
            base = _int(sec["index_base"], "[variety] index_base", lines.get(("variety", "index_base"), 0),
                        "variety")
            if base not in (0, 1):
                raise JobError("index_base must be 0 or 1", lines.get(("variety", "index_base"), 0), "variety")
            zero_based = base == 0
    if zero_based is None:
        zero_based = any(uses_zero_index(t) for _, t in gens)

    assume = cp["assume"] if "assume" in cp else {}
    flags = {}
    for key in ("irreducible", "smooth"):
        flags[key] = _bool(assume[key], f"[assume] {key}", lines.get(("assume", key), 0), "assume") \
            if key in assume else False
    max_order = None
    if "output" in cp and "max_order" in cp["output"]:
        max_order = _int(cp["output"]["max_order"], "[output] max_order",
                         lines.get(("output", "max_order"), 0), "output")
    return JobFile(spec, spec2, tuple(gens), zero_based, flags["irreducible"], flags["smooth"],
                   max_order, source)


def load_job_file(path) -> JobFile:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise JobError(f"cannot read {path}: {exc.strerror}") from None
    return parse_job_text(text, str(path))


def build_job(jf: JobFile, lines: Optional[Dict] = None) -> VarietyJob:
    """Parse the generator expressions and validate them against the model."""
    if not jf.has_variety:
        raise JobError("job has no [variety] generators", 0, "variety")
    ne, no = jf.counts()
    polys = []
    for name, text in jf.generator_texts:
        line = (lines or {}).get(("variety", name), 0)
        try:
            polys.append(parse_polynomial(text, ne, no, zero_based=jf.zero_based))
        except ParseError as exc:
            raise JobError(f"{name}: {exc}", line, "variety") from None
    try:
        return VarietyJob(jf.spec, tuple(polys), jf.spec2, jf.assume_irreducible, jf.assume_smooth)
    except SupersplitError as exc:
        raise JobError(str(exc), 0, "variety") from None


def load_job(path) -> Tuple[VarietyJob, JobFile]:
    p = Path(path)
    jf = load_job_file(p)
    return build_job(jf, _line_index(p.read_text())), jf


def parse_job(text: str, source: str = "<job>") -> VarietyJob:
    jf = parse_job_text(text, source)
    return build_job(jf, _line_index(text))
