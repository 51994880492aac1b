"""Regenerate the pinned Unicode classification tables.

The splitter and the reference regex splitter must agree on what counts as
a Letter, a Number and whitespace, so the tables are generated once, checked
in as ``peek2/_uni_tables.py`` and pinned with a checksum manifest. Two
sources are supported:

  --from-engine   Extract ``\\p{L}``, ``\\p{N}``, ``\\s`` and the
                  case-fold sets for the contraction letters from the
                  installed ``regex`` engine. This is the default and
                  guarantees the tables match the engine that backs the
                  reference splitter, whatever Unicode version it bundles.

  --ucd DIR       Parse UnicodeData.txt and PropList.txt (and, when present,
                  CaseFolding.txt) from a Unicode Character Database
                  directory. Use this to target an explicit UCD release.

The build never runs this script; regenerate by hand and commit the result:

    python -m peek2.tools.gen_unicode_tables --from-engine
"""

from __future__ import annotations

import argparse
import hashlib
import json
import pathlib
import sys

# Letters the contraction branch has to case-fold: s/d/m/t plus the letters
# of the two-letter endings ll/ve/re.
CONTRACTION_LETTERS = "sdmtlvre"

# Scalars first assigned in a given Unicode release; used to identify the
# database bundled with the regex engine. Newest first.
_VERSION_SENTINELS = [
    ("17.0.0", (0x10940, 0x323B0)),   # Sidetic, CJK extension J
    ("16.0.0", (0x105C0, 0x11BC0)),   # Todhri, Sunuwar
    ("15.1.0", (0x2EBF0,)),           # CJK extension I
    ("15.0.0", (0x1E4D0,)),           # Nag Mundari
    ("14.0.0", (0x0870,)),            # Arabic Extended-B
    ("13.0.0", (0x10FB0,)),           # Chorasmian
]

_SCALAR_BLOCKS = ((0x0000, 0xD800), (0xE000, 0x110000))


def _coalesce(ranges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Sort and merge overlapping or adjacent inclusive ranges."""
    if not ranges:
        return []
    ranges = sorted(ranges)
    out = [ranges[0]]
    for lo, hi in ranges[1:]:
        plo, phi = out[-1]
        if lo <= phi + 1:
            out[-1] = (plo, max(phi, hi))
        else:
            out.append((lo, hi))
    return out


def _all_scalars_str(lo: int, hi: int):
    import numpy as np

    return np.arange(lo, hi, dtype="<u4").tobytes().decode("utf-32-le")


def extract_from_engine() -> dict:
    """Scan every Unicode scalar through the installed regex engine."""
    import regex

    props = {"L": r"\p{L}++", "N": r"\p{N}++", "WS": r"\s++"}
    ranges: dict[str, list[tuple[int, int]]] = {k: [] for k in props}
    folds: list[tuple[int, str]] = []
    fold_pats = {c: regex.compile(f"(?i){c}") for c in CONTRACTION_LETTERS}

    for lo, hi in _SCALAR_BLOCKS:
        block = _all_scalars_str(lo, hi)
        for key, pat in props.items():
            for m in regex.finditer(pat, block):
                s, e = m.span()
                ranges[key].append((lo + s, lo + e - 1))
        for letter, pat in fold_pats.items():
            for m in pat.finditer(block):
                folds.append((lo + m.start(), letter))

    version = "unknown"
    for candidate, cps in _VERSION_SENTINELS:
        if all(not regex.match(r"\p{Cn}", chr(cp)) for cp in cps):
            version = candidate
            break

    return {
        "unicode_version": version,
        "source": f"regex {regex.__version__}",
        "letter_ranges": _coalesce(ranges["L"]),
        "number_ranges": _coalesce(ranges["N"]),
        "whitespace_ranges": _coalesce(ranges["WS"]),
        "contraction_folds": sorted(set(folds)),
    }


def _parse_cp_field(field: str) -> tuple[int, int]:
    field = field.strip()
    if ".." in field:
        a, b = field.split("..", 1)
        return int(a, 16), int(b, 16)
    cp = int(field, 16)
    return cp, cp


def parse_unicode_data(path: pathlib.Path) -> dict[str, list[tuple[int, int]]]:
    """Read general categories from UnicodeData.txt.

    Handles the ``First>``/``Last>`` convention used for large CJK and
    Hangul blocks.
    """
    by_cat: dict[str, list[tuple[int, int]]] = {}
    pending_first: tuple[int, str] | None = None
    for line in path.read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        fields = line.split(";")
        cp = int(fields[0], 16)
        name, cat = fields[1], fields[2]
        if name.endswith(", First>"):
            pending_first = (cp, cat)
            continue
        if name.endswith(", Last>"):
            if pending_first is None or pending_first[1] != cat:
                raise ValueError(f"unpaired range marker at U+{cp:04X}")
            by_cat.setdefault(cat, []).append((pending_first[0], cp))
            pending_first = None
            continue
        by_cat.setdefault(cat, []).append((cp, cp))
    return by_cat


def parse_prop_list(path: pathlib.Path, prop: str) -> list[tuple[int, int]]:
    out = []
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        cp_field, name = (part.strip() for part in line.split(";", 1))
        if name == prop:
            out.append(_parse_cp_field(cp_field))
    return out


def parse_case_folding(path: pathlib.Path) -> dict[int, str]:
    """Simple case folds (status C and S) landing on a contraction letter."""
    folds: dict[int, str] = {}
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        cp_field, status, mapping, _ = (p.strip() for p in line.split(";"))
        if status not in ("C", "S"):
            continue
        mapped = [int(x, 16) for x in mapping.split()]
        if len(mapped) == 1 and chr(mapped[0]) in CONTRACTION_LETTERS:
            folds[int(cp_field, 16)] = chr(mapped[0])
    return folds


def extract_from_ucd(ucd_dir: pathlib.Path) -> dict:
    by_cat = parse_unicode_data(ucd_dir / "UnicodeData.txt")
    letters = [r for c in ("Lu", "Ll", "Lt", "Lm", "Lo") for r in by_cat.get(c, [])]
    numbers = [r for c in ("Nd", "Nl", "No") for r in by_cat.get(c, [])]
    whitespace = parse_prop_list(ucd_dir / "PropList.txt", "White_Space")

    folds: dict[int, str] = {ord(c): c for c in CONTRACTION_LETTERS}
    folding_file = ucd_dir / "CaseFolding.txt"
    if folding_file.exists():
        folds.update(parse_case_folding(folding_file))
    else:
        # Without CaseFolding.txt, fall back to the uppercase forms only.
        folds.update({ord(c.upper()): c for c in CONTRACTION_LETTERS})

    version = "unknown"
    readme = ucd_dir / "ReadMe.txt"
    if readme.exists():
        import re

        m = re.search(r"Version (\d+\.\d+\.\d+)", readme.read_text("utf-8"))
        if m:
            version = m.group(1)

    return {
        "unicode_version": version,
        "source": f"UCD files in {ucd_dir.name}",
        "letter_ranges": _coalesce(letters),
        "number_ranges": _coalesce(numbers),
        "whitespace_ranges": _coalesce(whitespace),
        "contraction_folds": sorted(folds.items()),
    }


def _check_invariants(tables: dict) -> None:
    def assert_coalesced(ranges, label):
        prev_hi = -2
        for lo, hi in ranges:
            if lo > hi or lo <= prev_hi + 1:
                raise ValueError(f"{label}: not sorted/coalesced at U+{lo:04X}")
            prev_hi = hi

    def contains(ranges, cp):
        return any(lo <= cp <= hi for lo, hi in ranges)

    letters = tables["letter_ranges"]
    numbers = tables["number_ranges"]
    ws = tables["whitespace_ranges"]
    for label, ranges in (("letters", letters), ("numbers", numbers), ("whitespace", ws)):
        assert_coalesced(ranges, label)

    for lo, hi in numbers:
        for cp in (lo, hi):
            if contains(letters, cp):
                raise ValueError(f"letter/number overlap at U+{cp:04X}")
    for lo, hi in ws:
        for cp in (lo, hi):
            if contains(letters, cp) or contains(numbers, cp):
                raise ValueError(f"whitespace overlaps letter/number at U+{cp:04X}")

    required_ws = (0x20, 0x09, 0x0A, 0x0D, 0xA0, 0x2028, 0x2029, 0x3000)
    for cp in required_ws:
        if not contains(ws, cp):
            raise ValueError(f"whitespace table is missing U+{cp:04X}")
    for cp, letter in tables["contraction_folds"]:
        if letter not in CONTRACTION_LETTERS:
            raise ValueError(f"unexpected fold target {letter!r}")
        if not contains(letters, cp):
            raise ValueError(f"fold source U+{cp:04X} is not a letter")


def _format_ranges(ranges: list[tuple[int, int]]) -> str:
    lines = []
    for i in range(0, len(ranges), 4):
        chunk = ", ".join(f"(0x{lo:04X}, 0x{hi:04X})" for lo, hi in ranges[i:i + 4])
        lines.append(f"    {chunk},")
    return "\n".join(lines)


def emit(tables: dict, table_path: pathlib.Path, manifest_path: pathlib.Path) -> None:
    _check_invariants(tables)
    folds = ", ".join(f"(0x{cp:04X}, {ch!r})" for cp, ch in tables["contraction_folds"])
    body = f'''"""Generated Unicode classification tables. Do not edit by hand.

Regenerate with:  python -m peek2.tools.gen_unicode_tables --from-engine
Source: {tables["source"]} (Unicode {tables["unicode_version"]})

Ranges are inclusive (lo, hi) pairs, sorted and fully coalesced.
CONTRACTION_FOLDS lists every scalar whose simple case fold is one of the
contraction letters s/d/m/t/l/v/r/e.
"""

UNICODE_VERSION = "{tables["unicode_version"]}"
SOURCE = "{tables["source"]}"

LETTER_RANGES = (
{_format_ranges(tables["letter_ranges"])}
)

NUMBER_RANGES = (
{_format_ranges(tables["number_ranges"])}
)

WHITESPACE_RANGES = (
{_format_ranges(tables["whitespace_ranges"])}
)

CONTRACTION_FOLDS = ({folds})
'''
    table_path.write_text(body, encoding="utf-8")
    manifest = {
        "unicode_version": tables["unicode_version"],
        "source": tables["source"],
        "files": {table_path.name: hashlib.sha256(body.encode()).hexdigest()},
        "counts": {
            "letter_ranges": len(tables["letter_ranges"]),
            "number_ranges": len(tables["number_ranges"]),
            "whitespace_ranges": len(tables["whitespace_ranges"]),
            "contraction_folds": len(tables["contraction_folds"]),
        },
    }
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")


def main(argv: list[str] | None = None) -> int:
    pkg_dir = pathlib.Path(__file__).resolve().parent.parent
    ap = argparse.ArgumentParser(description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    src = ap.add_mutually_exclusive_group()
    src.add_argument("--from-engine", action="store_true",
                     help="extract tables from the installed regex engine (default)")
    src.add_argument("--ucd", type=pathlib.Path, metavar="DIR",
                     help="parse UnicodeData.txt / PropList.txt from DIR")
    ap.add_argument("--out", type=pathlib.Path, default=pkg_dir / "_uni_tables.py")
    ap.add_argument("--manifest", type=pathlib.Path,
                    default=pkg_dir / "data" / "unicode_manifest.json")
    args = ap.parse_args(argv)

    tables = extract_from_ucd(args.ucd) if args.ucd else extract_from_engine()
    emit(tables, args.out, args.manifest)
    print(f"wrote {args.out} ({tables['unicode_version']}, "
          f"{len(tables['letter_ranges'])} letter ranges)")
    return 0


if __name__ == "__main__":
    sys.exit(main())
