"""Bit-exact PGM encoding and decoding (binary P5 and ASCII P2, maxval 255).

The binary writer emits ``P5\\n<width> <height>\\n255\\n`` followed by the
raw row-major pixel bytes; the ASCII writer emits the P2 equivalent with
one image row per line. '#' comments are accepted anywhere in the header
after the magic, and between samples of ASCII files.
"""

from __future__ import annotations

import numpy as np

from .image import GrayImage

_WHITESPACE = b" \t\r\n\v\f"


class PgmError(ValueError):
    """Malformed, truncated or unsupported PGM data."""


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Return the next whitespace-delimited header token, skipping comments."""
    n = len(data)
    while pos < n:
        c = data[pos : pos + 1]
        if c == b"#":
            eol = data.find(b"\n", pos)
            pos = n if eol < 0 else eol + 1
        elif c in _WHITESPACE:
            pos += 1
        else:
            break
    if pos >= n:
        raise PgmError("truncated PGM header")
    start = pos
    while pos < n and data[pos : pos + 1] not in _WHITESPACE and data[pos : pos + 1] != b"#":
        pos += 1
    return data[start:pos], pos


def _parse_positive_int(token: bytes, what: str) -> int:
    if not token.isdigit():
        raise PgmError(f"bad PGM {what}: {token!r}")
    value = int(token)
    if value < 1:
        raise PgmError(f"bad PGM {what}: {value}")
    return value


def read_pgm(data: bytes) -> GrayImage:
    """Decode a P5 or P2 PGM byte string into an image.

    Only maxval 255 is supported; anything else raises PgmError.
    """
    magic, pos = _next_token(bytes(data), 0)
    if magic not in (b"P5", b"P2"):
        raise PgmError(f"not a PGM file (magic {magic!r}, expected P5 or P2)")
    width_tok, pos = _next_token(data, pos)
    width = _parse_positive_int(width_tok, "width")
    height_tok, pos = _next_token(data, pos)
    height = _parse_positive_int(height_tok, "height")
    maxval_tok, pos = _next_token(data, pos)
    if not maxval_tok.isdigit():
        raise PgmError(f"bad PGM maxval: {maxval_tok!r}")
    maxval = int(maxval_tok)
    if maxval != 255:
        raise PgmError(f"unsupported PGM depth: maxval {maxval}, only 255 is supported")

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the payload
        if pos >= len(data) or data[pos : pos + 1] not in _WHITESPACE:
            raise PgmError("missing separator before P5 pixel data")
        pos += 1
        payload = data[pos : pos + count]
        if len(payload) < count:
            raise PgmError(f"truncated P5 payload: expected {count} bytes, got {len(payload)}")
        arr = np.frombuffer(payload, dtype=np.uint8).reshape(height, width)
    else:
        values = np.empty(count, dtype=np.uint8)
        for idx in range(count):
            try:
                token, pos = _next_token(data, pos)
            except PgmError:
                raise PgmError(f"truncated P2 payload: expected {count} samples, got {idx}") from None
            if not token.isdigit():
                raise PgmError(f"bad P2 sample: {token!r}")
            sample = int(token)
            if sample > 255:
                raise PgmError(f"P2 sample {sample} exceeds maxval 255")
            values[idx] = sample
        arr = values.reshape(height, width)
    return GrayImage(arr)


def write_pgm(img: GrayImage, ascii: bool = False) -> bytes:
    """Encode an image as PGM bytes: binary P5, or P2 with one row per line."""
    if ascii:
        lines = [f"P2\n{img.width} {img.height}\n255\n"]
        for row in img.pixels:
            lines.append(" ".join(str(v) for v in row) + "\n")
        return "".join(lines).encode("ascii")
    header = f"P5\n{img.width} {img.height}\n255\n".encode("ascii")
    return header + img.pixels.tobytes()


def load_pgm(path) -> GrayImage:
    """Read a PGM file from disk."""
    with open(path, "rb") as fh:
        return read_pgm(fh.read())


def save_pgm(path, img: GrayImage, ascii: bool = False) -> None:
    """Write an image to disk as PGM."""
    with open(path, "wb") as fh:
        fh.write(write_pgm(img, ascii=ascii))
