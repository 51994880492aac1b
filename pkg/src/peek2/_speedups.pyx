# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled segmentation kernel.

Mirrors peek2._pure exactly: same categories, same decision table, same
branch routines, one forward pass emitting byte-offset segments. The
Unicode range tables and the contraction fold set are loaded from the
generated _uni_tables module at import, so both engines always share one
table source.
"""

from cpython.unicode cimport (
    PyUnicode_DATA,
    PyUnicode_GET_LENGTH,
    PyUnicode_KIND,
    PyUnicode_READ,
)
from libc.stdint cimport int64_t, uint32_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy

import numpy as np

from .errors import InvalidUtf8
from . import _uni_tables
from .tables import DECISION_TABLE as _PY_TABLE

COMPILED = True

cdef uint32_t* L_LO = NULL
cdef uint32_t* L_HI = NULL
cdef Py_ssize_t N_L = 0
cdef uint32_t* N_LO = NULL
cdef uint32_t* N_HI = NULL
cdef Py_ssize_t N_N = 0
cdef uint32_t* W_LO = NULL
cdef uint32_t* W_HI = NULL
cdef Py_ssize_t N_W = 0
cdef uint32_t FOLD_CP[64]
cdef unsigned char FOLD_CH[64]
cdef int N_FOLD = 0
cdef unsigned char ASCII_CAT[128]
cdef unsigned char DEFAULT_TAB[56]


cdef inline bint _in_ranges(uint32_t cp, const uint32_t* lo, const uint32_t* hi,
                            Py_ssize_t n) noexcept:
    cdef Py_ssize_t a = 0, b = n - 1, m
    if n == 0 or cp < lo[0] or cp > hi[b]:
        return False
    while a <= b:
        m = (a + b) >> 1
        if cp < lo[m]:
            b = m - 1
        elif cp > hi[m]:
            a = m + 1
        else:
            return True
    return False


cdef inline bint _is_letter(uint32_t cp) noexcept:
    if cp < 128:
        return ASCII_CAT[cp] == 4
    return _in_ranges(cp, L_LO, L_HI, N_L)


cdef inline bint _is_number(uint32_t cp) noexcept:
    if cp < 128:
        return ASCII_CAT[cp] == 6
    return _in_ranges(cp, N_LO, N_HI, N_N)


cdef inline bint _is_ws(uint32_t cp) noexcept:
    # Full White_Space property, including space and CR/LF.
    if cp < 128:
        return cp == 0x20 or (0x09 <= cp <= 0x0D)
    return _in_ranges(cp, W_LO, W_HI, N_W)


cdef inline int _cat(uint32_t cp) noexcept:
    if cp < 128:
        return ASCII_CAT[cp]
    if _in_ranges(cp, L_LO, L_HI, N_L):
        return 4
    if _in_ranges(cp, W_LO, W_HI, N_W):
        return 5
    if _in_ranges(cp, N_LO, N_HI, N_N):
        return 6
    return 0


cdef inline int _fold(uint32_t cp) noexcept:
    # Simple case fold onto a contraction letter; 0 when there is none.
    cdef int a = 0, b = N_FOLD - 1, m
    if N_FOLD == 0 or cp < FOLD_CP[0] or cp > FOLD_CP[b]:
        return 0
    while a <= b:
        m = (a + b) >> 1
        if cp < FOLD_CP[m]:
            b = m - 1
        elif cp > FOLD_CP[m]:
            a = m + 1
        else:
            return FOLD_CH[m]
    return 0


cdef inline Py_ssize_t _word_end(int kind, void* data, Py_ssize_t n,
                                 Py_ssize_t i) noexcept:
    if not _is_letter(PyUnicode_READ(kind, data, i)):
        i += 1
    while i < n and _is_letter(PyUnicode_READ(kind, data, i)):
        i += 1
    return i


cdef inline Py_ssize_t _contraction_end(int kind, void* data, Py_ssize_t n,
                                        Py_ssize_t i) noexcept:
    cdef int f1, f2
    if i + 1 >= n:  # unreachable via the default table; injected tables only
        return _word_end(kind, data, n, i)
    f1 = _fold(PyUnicode_READ(kind, data, i + 1))
    if f1 == c's' or f1 == c'd' or f1 == c'm' or f1 == c't':
        return i + 2
    if f1 != 0 and i + 2 < n:
        f2 = _fold(PyUnicode_READ(kind, data, i + 2))
        if (f1 == c'l' and f2 == c'l') or \
           (f1 == c'v' and f2 == c'e') or \
           (f1 == c'r' and f2 == c'e'):
            return i + 3
    return _word_end(kind, data, n, i)


cdef inline Py_ssize_t _number_end(int kind, void* data, Py_ssize_t n,
                                   Py_ssize_t i) noexcept:
    cdef Py_ssize_t j = i + 1
    cdef Py_ssize_t stop = i + 3
    if stop > n:
        stop = n
    while j < stop and _is_number(PyUnicode_READ(kind, data, j)):
        j += 1
    return j


cdef inline Py_ssize_t _punct_end(int kind, void* data, Py_ssize_t n,
                                  Py_ssize_t i) noexcept:
    cdef Py_ssize_t start = i
    cdef uint32_t c
    if PyUnicode_READ(kind, data, i) == 0x20:
        i += 1
    while i < n:
        c = PyUnicode_READ(kind, data, i)
        if _is_ws(c) or _is_letter(c) or _is_number(c):
            break
        i += 1
    while i < n:
        c = PyUnicode_READ(kind, data, i)
        if c != 0x0D and c != 0x0A:
            break
        i += 1
    # The default table guarantees at least one scalar is consumed; keep
    # injected tables from stalling the cursor.
    return i if i > start else start + 1


cdef inline Py_ssize_t _ws_end(int kind, void* data, Py_ssize_t n,
                               Py_ssize_t i) noexcept:
    cdef Py_ssize_t j = i, last_fold = -1
    cdef uint32_t c
    while j < n:
        c = PyUnicode_READ(kind, data, j)
        if not _is_ws(c):
            break
        if c == 0x0D or c == 0x0A:
            last_fold = j
        j += 1
    if j == n:
        return j
    if last_fold >= 0:
        return last_fold + 1
    if j - i >= 2:
        return j - 1
    return i + 1


def split(text, table=None, bint char_offsets=False):
    """Segment ``text``; returns [start, end) offset tuples (UTF-8 bytes,
    or scalar indices when ``char_offsets`` is set)."""
    cdef unicode s = <unicode?>text
    cdef bytes tb = None
    cdef const unsigned char* tab
    if table is None:
        tab = DEFAULT_TAB
    else:
        tb = table
        if len(tb) != 56:
            raise ValueError("decision table must have 7*8 cells")
        tab = <const unsigned char*><const char*>tb

    cdef int kind = PyUnicode_KIND(s)
    cdef void* data = PyUnicode_DATA(s)
    cdef Py_ssize_t n = PyUnicode_GET_LENGTH(s)
    cdef Py_ssize_t i = 0, j, k
    cdef Py_ssize_t pos = 0, seg
    cdef uint32_t c
    cdef int cat0, cat1, br
    cdef list out = []
    while i < n:
        cat0 = _cat(PyUnicode_READ(kind, data, i))
        if i + 1 < n:
            cat1 = _cat(PyUnicode_READ(kind, data, i + 1))
        else:
            cat1 = 7
        br = tab[(cat0 << 3) + cat1]
        if br == 1:
            j = _word_end(kind, data, n, i)
        elif br == 4:
            j = _ws_end(kind, data, n, i)
        elif br == 3:
            j = _punct_end(kind, data, n, i)
        elif br == 2:
            j = _number_end(kind, data, n, i)
        else:
            j = _contraction_end(kind, data, n, i)
        seg = 0
        for k in range(i, j):
            c = PyUnicode_READ(kind, data, k)
            if 0xD800 <= c < 0xE000:
                raise InvalidUtf8(
                    f"lone surrogate U+{c:04X} at scalar offset {k}")
            seg += 1 + (c >= 0x80) + (c >= 0x800) + (c >= 0x10000)
        if char_offsets:
            out.append((i, j))
        else:
            out.append((pos, pos + seg))
            pos += seg
        i = j
    return out


def split_array(text, table=None, bint char_offsets=False):
    """Like ``split`` but returns a packed (N, 2) int64 offsets array.

    No per-segment Python objects are created, so this is the path for
    offset-hungry callers and for timing the raw segmentation pass.
    """
    cdef unicode s = <unicode?>text
    cdef bytes tb = None
    cdef const unsigned char* tab
    if table is None:
        tab = DEFAULT_TAB
    else:
        tb = table
        if len(tb) != 56:
            raise ValueError("decision table must have 7*8 cells")
        tab = <const unsigned char*><const char*>tb

    cdef int kind = PyUnicode_KIND(s)
    cdef void* data = PyUnicode_DATA(s)
    cdef Py_ssize_t n = PyUnicode_GET_LENGTH(s)
    cdef Py_ssize_t cap = 256 if n > 0 else 1
    cdef int64_t* buf = <int64_t*>malloc(cap * 2 * sizeof(int64_t))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t count = 0
    cdef Py_ssize_t i = 0, j, k
    cdef Py_ssize_t pos = 0, seg
    cdef uint32_t c
    cdef int cat0, cat1, br
    cdef int64_t* grown
    cdef int64_t[:, ::1] view
    try:
        while i < n:
            cat0 = _cat(PyUnicode_READ(kind, data, i))
            if i + 1 < n:
                cat1 = _cat(PyUnicode_READ(kind, data, i + 1))
            else:
                cat1 = 7
            br = tab[(cat0 << 3) + cat1]
            if br == 1:
                j = _word_end(kind, data, n, i)
            elif br == 4:
                j = _ws_end(kind, data, n, i)
            elif br == 3:
                j = _punct_end(kind, data, n, i)
            elif br == 2:
                j = _number_end(kind, data, n, i)
            else:
                j = _contraction_end(kind, data, n, i)
            seg = 0
            for k in range(i, j):
                c = PyUnicode_READ(kind, data, k)
                if 0xD800 <= c < 0xE000:
                    raise InvalidUtf8(
                        f"lone surrogate U+{c:04X} at scalar offset {k}")
                seg += 1 + (c >= 0x80) + (c >= 0x800) + (c >= 0x10000)
            if count == cap:
                cap += cap
                grown = <int64_t*>realloc(buf, cap * 2 * sizeof(int64_t))
                if grown == NULL:
                    raise MemoryError()
                buf = grown
            if char_offsets:
                buf[2 * count] = i
                buf[2 * count + 1] = j
            else:
                buf[2 * count] = pos
                buf[2 * count + 1] = pos + seg
                pos += seg
            count += 1
            i = j
        arr = np.empty((count, 2), dtype=np.int64)
        if count:
            view = arr
            memcpy(<void*>&view[0, 0], buf, count * 2 * sizeof(int64_t))
        return arr
    finally:
        free(buf)


def categorize(int scalar):
    """Peek category of one scalar (parity hook for the pure engine)."""
    if not 0 <= scalar <= 0x10FFFF or 0xD800 <= scalar <= 0xDFFF:
        raise ValueError(f"not a Unicode scalar value: {scalar:#x}")
    return _cat(<uint32_t>scalar)


cdef uint32_t* _alloc_u32(values) except NULL:
    cdef Py_ssize_t n = len(values)
    cdef uint32_t* arr = <uint32_t*>malloc(n * sizeof(uint32_t))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = values[i]
    return arr


def _load_tables():
    global L_LO, L_HI, N_L, N_LO, N_HI, N_N, W_LO, W_HI, N_W, N_FOLD
    ranges = _uni_tables.LETTER_RANGES
    L_LO = _alloc_u32([lo for lo, _ in ranges])
    L_HI = _alloc_u32([hi for _, hi in ranges])
    N_L = len(ranges)
    ranges = _uni_tables.NUMBER_RANGES
    N_LO = _alloc_u32([lo for lo, _ in ranges])
    N_HI = _alloc_u32([hi for _, hi in ranges])
    N_N = len(ranges)
    ranges = _uni_tables.WHITESPACE_RANGES
    W_LO = _alloc_u32([lo for lo, _ in ranges])
    W_HI = _alloc_u32([hi for _, hi in ranges])
    N_W = len(ranges)

    folds = _uni_tables.CONTRACTION_FOLDS
    if len(folds) > 64:
        raise RuntimeError("contraction fold table larger than expected")
    cdef int i
    for i in range(len(folds)):
        FOLD_CP[i] = folds[i][0]
        FOLD_CH[i] = ord(folds[i][1])
    N_FOLD = len(folds)

    cdef int c
    for c in range(128):
        if c == 0x20:
            ASCII_CAT[c] = 1
        elif c == 0x27:
            ASCII_CAT[c] = 2
        elif c == 0x0D or c == 0x0A:
            ASCII_CAT[c] = 3
        elif 0x41 <= c <= 0x5A or 0x61 <= c <= 0x7A:
            ASCII_CAT[c] = 4
        elif c == 0x09 or c == 0x0B or c == 0x0C:
            ASCII_CAT[c] = 5
        elif 0x30 <= c <= 0x39:
            ASCII_CAT[c] = 6
        else:
            ASCII_CAT[c] = 0

    for i in range(56):
        DEFAULT_TAB[i] = _PY_TABLE[i]


_load_tables()
