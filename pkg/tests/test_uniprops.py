"""Scalar property lookups and the generated tables behind them."""

import hashlib
import json
import pathlib

import pytest

from peek2 import _uni_tables, uniprops
from peek2.tools import gen_unicode_tables as gen


def test_letter_examples():
    assert uniprops.is_letter(ord("A"))
    assert not uniprops.is_letter(ord("1"))
    assert uniprops.is_letter(0x4E2D)  # CJK ideograph


def test_number_examples():
    assert uniprops.is_number(ord("7"))
    assert not uniprops.is_number(ord("A"))
    assert uniprops.is_number(0x0663)  # Arabic-Indic three


def test_whitespace_examples():
    assert uniprops.is_whitespace(0x20)
    assert not uniprops.is_whitespace(0x200B)  # ZWSP lacks White_Space
    assert uniprops.is_whitespace(0x3000)      # ideographic space


def test_required_whitespace_members():
    for cp in (0x0020, 0x0009, 0x000A, 0x000D, 0x00A0, 0x2028, 0x2029, 0x3000):
        assert uniprops.is_whitespace(cp), hex(cp)


@pytest.mark.parametrize("cp", [0x20, 0x41, 0x37, 0x4E2D, 0x0663, 0x3000,
                                0xA0, 0x2019, 0x27, 0x0A, 0x10FFFF, 0x0])
def test_classes_mutually_exclusive(cp):
    hits = sum((uniprops.is_letter(cp), uniprops.is_number(cp),
                uniprops.is_whitespace(cp)))
    assert hits <= 1


def test_invalid_scalars_rejected():
    for bad in (-1, 0x110000, 0xD800, 0xDFFF):
        with pytest.raises(ValueError):
            uniprops.is_letter(bad)


def test_ranges_sorted_disjoint_coalesced():
    for ranges in (_uni_tables.LETTER_RANGES, _uni_tables.NUMBER_RANGES,
                   _uni_tables.WHITESPACE_RANGES):
        prev_hi = -2
        for lo, hi in ranges:
            assert lo <= hi
            assert lo > prev_hi + 1, "ranges must not touch or overlap"
            prev_hi = hi


def test_default_tables_object():
    t = uniprops.DEFAULT_TABLES
    assert t.unicode_version == uniprops.UNICODE_VERSION
    assert 0x20 in t.whitespace_set and 0x3000 in t.whitespace_set
    assert t.letter_ranges == _uni_tables.LETTER_RANGES


def test_contraction_fold_examples():
    assert uniprops.contraction_fold(ord("S")) == "s"
    assert uniprops.contraction_fold(0x017F) == "s"  # long s folds to s
    assert uniprops.contraction_fold(ord("L")) == "l"
    assert uniprops.contraction_fold(ord("x")) is None
    assert uniprops.contraction_fold(0x00DF) is None  # sharp s: full fold only


def test_regeneration_matches_checked_in_tables():
    """A fresh extraction from the engine must equal the committed tables."""
    fresh = gen.extract_from_engine()
    assert fresh["unicode_version"] == _uni_tables.UNICODE_VERSION
    assert tuple(fresh["letter_ranges"]) == _uni_tables.LETTER_RANGES
    assert tuple(fresh["number_ranges"]) == _uni_tables.NUMBER_RANGES
    assert tuple(fresh["whitespace_ranges"]) == _uni_tables.WHITESPACE_RANGES
    assert tuple(fresh["contraction_folds"]) == _uni_tables.CONTRACTION_FOLDS


def test_manifest_checksum_matches_table_file():
    pkg = pathlib.Path(uniprops.__file__).parent
    manifest = json.loads((pkg / "data" / "unicode_manifest.json").read_text())
    body = (pkg / "_uni_tables.py").read_bytes()
    assert manifest["files"]["_uni_tables.py"] == hashlib.sha256(body).hexdigest()
    assert manifest["unicode_version"] == uniprops.UNICODE_VERSION


# --- the UCD-file ingestion path of the generator tool ---

_MINI_UNICODE_DATA = """\
0041;LATIN CAPITAL LETTER A;Lu;0;L;;;;;N;;;;0061;
004C;LATIN CAPITAL LETTER L;Lu;0;L;;;;;N;;;;006C;
0053;LATIN CAPITAL LETTER S;Lu;0;L;;;;;N;;;;0073;
005A;LATIN CAPITAL LETTER Z;Lu;0;L;;;;;N;;;;007A;
0061;LATIN SMALL LETTER A;Ll;0;L;;;;;N;;0041;;0041
0064;LATIN SMALL LETTER D;Ll;0;L;;;;;N;;0044;;0044
0065;LATIN SMALL LETTER E;Ll;0;L;;;;;N;;0045;;0045
006C;LATIN SMALL LETTER L;Ll;0;L;;;;;N;;004C;;004C
006D;LATIN SMALL LETTER M;Ll;0;L;;;;;N;;004D;;004D
0072;LATIN SMALL LETTER R;Ll;0;L;;;;;N;;0052;;0052
0073;LATIN SMALL LETTER S;Ll;0;L;;;;;N;;0053;;0053
0074;LATIN SMALL LETTER T;Ll;0;L;;;;;N;;0054;;0054
0076;LATIN SMALL LETTER V;Ll;0;L;;;;;N;;0056;;0056
007A;LATIN SMALL LETTER Z;Ll;0;L;;;;;N;;005A;;005A
017F;LATIN SMALL LETTER LONG S;Ll;0;L;;;;;N;;0053;;0053
0030;DIGIT ZERO;Nd;0;EN;;0;0;0;N;;;;;
0039;DIGIT NINE;Nd;0;EN;;9;9;9;N;;;;;
0663;ARABIC-INDIC DIGIT THREE;Nd;0;AN;;3;3;3;N;;;;;
00BD;VULGAR FRACTION ONE HALF;No;0;ON;<fraction> 0031 2044 0032;;;1/2;N;FRACTION ONE HALF;;;;
4E00;<CJK Ideograph, First>;Lo;0;L;;;;;N;;;;;
9FFF;<CJK Ideograph, Last>;Lo;0;L;;;;;N;;;;;
0021;EXCLAMATION MARK;Po;0;ON;;;;;N;;;;;
"""

_MINI_PROP_LIST = """\
# White_Space property extract
0009..000D    ; White_Space # Cc   [5] <control-0009>..<control-000D>
0020          ; White_Space # Zs       SPACE
00A0          ; White_Space # Zs       NO-BREAK SPACE
2028          ; White_Space # Zl       LINE SEPARATOR
2029          ; White_Space # Zp       PARAGRAPH SEPARATOR
3000          ; White_Space # Zs       IDEOGRAPHIC SPACE
"""

_MINI_CASE_FOLDING = """\
0041; C; 0061; # LATIN CAPITAL LETTER A
0053; C; 0073; # LATIN CAPITAL LETTER S
004C; C; 006C; # LATIN CAPITAL LETTER L
017F; C; 0073; # LATIN SMALL LETTER LONG S
00DF; F; 0073 0073; # LATIN SMALL LETTER SHARP S (full fold: ignored)
1E9E; S; 00DF; # LATIN CAPITAL LETTER SHARP S (folds off-target: ignored)
"""


@pytest.fixture()
def mini_ucd(tmp_path):
    (tmp_path / "UnicodeData.txt").write_text(_MINI_UNICODE_DATA)
    (tmp_path / "PropList.txt").write_text(_MINI_PROP_LIST)
    (tmp_path / "CaseFolding.txt").write_text(_MINI_CASE_FOLDING)
    return tmp_path


def test_ucd_parsing(mini_ucd):
    tables = gen.extract_from_ucd(mini_ucd)
    letters = tables["letter_ranges"]
    assert (0x4E00, 0x9FFF) in letters          # First/Last block handled
    assert (0x017F, 0x017F) in letters
    assert (0x0030, 0x0030) in tables["number_ranges"]
    assert (0x00BD, 0x00BD) in tables["number_ranges"]
    assert (0x0009, 0x000D) in tables["whitespace_ranges"]
    folds = dict(tables["contraction_folds"])
    assert folds[0x0053] == "s" and folds[0x017F] == "s"
    assert 0x00DF not in folds and 0x1E9E not in folds


def test_ucd_emit_and_manifest(mini_ucd, tmp_path):
    tables = gen.extract_from_ucd(mini_ucd)
    out_py = tmp_path / "tables_out.py"
    out_manifest = tmp_path / "manifest.json"
    gen.emit(tables, out_py, out_manifest)
    manifest = json.loads(out_manifest.read_text())
    digest = hashlib.sha256(out_py.read_bytes()).hexdigest()
    assert manifest["files"]["tables_out.py"] == digest

    namespace: dict = {}
    exec(out_py.read_text(), namespace)
    assert namespace["LETTER_RANGES"] == tuple(tables["letter_ranges"])
    assert namespace["WHITESPACE_RANGES"] == tuple(tables["whitespace_ranges"])


def test_emit_rejects_overlapping_classes(tmp_path):
    broken = {
        "unicode_version": "0.0.0",
        "source": "synthetic",
        "letter_ranges": [(0x41, 0x5A)],
        "number_ranges": [(0x50, 0x52)],  # overlaps letters
        "whitespace_ranges": [(0x09, 0x0D), (0x20, 0x20), (0xA0, 0xA0),
                              (0x2028, 0x2029), (0x3000, 0x3000)],
        "contraction_folds": [],
    }
    with pytest.raises(ValueError, match="overlap"):
        gen.emit(broken, tmp_path / "t.py", tmp_path / "m.json")
