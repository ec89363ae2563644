"""Reading and writing 8-bit PNG and binary PPM (P6) images.

PNG decoding and encoding go through Pillow; PPM is parsed and written here
so that byte-exact fixtures can be written by hand.
"""
from __future__ import annotations

import io
import os

import numpy as np
from PIL import Image

__all__ = [
    "ImageError",
    "ImageNotFoundError",
    "UnsupportedFormatError",
    "CorruptImageError",
    "load_image",
    "save_image",
    "encode_png",
    "encode_ppm",
    "decode_ppm",
]

_PNG_SIGNATURE = b"\x89PNG\r\n\x1a\n"


class ImageError(Exception):
    """Base class for image I/O failures."""


class ImageNotFoundError(ImageError, FileNotFoundError):
    pass


class UnsupportedFormatError(ImageError):
    pass


class CorruptImageError(ImageError):
    pass


def load_image(path) -> np.ndarray:
    """Decode an 8-bit PNG or a P6 PPM into a ``(M, N, 3)`` uint8 array.

    Alpha channels are dropped and grayscale or palette PNGs are expanded to
    RGB. Raises :class:`ImageNotFoundError`, :class:`UnsupportedFormatError`
    (unknown container, 16-bit samples) or :class:`CorruptImageError`.
    """
    path = os.fspath(path)
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except FileNotFoundError:
        raise ImageNotFoundError(f"no such image file: {path}") from None
    except IsADirectoryError:
        raise ImageNotFoundError(f"not a file: {path}") from None

    if data.startswith(_PNG_SIGNATURE):
        return _decode_png(data, path)
    if data[:2] == b"P6":
        return decode_ppm(data, path)
    if data[:2] in (b"P1", b"P2", b"P3", b"P4", b"P5"):
        raise UnsupportedFormatError(f"{path}: only binary RGB PPM (P6) is supported")
    raise UnsupportedFormatError(f"{path}: not a PNG or PPM file")


def _decode_png(data: bytes, path: str) -> np.ndarray:
    if len(data) < 33 or data[12:16] != b"IHDR":
        raise CorruptImageError(f"{path}: truncated PNG header")
    bit_depth = data[24]
    if bit_depth != 8:
        raise UnsupportedFormatError(f"{path}: {bit_depth}-bit PNG, only 8-bit is supported")
    try:
        with Image.open(io.BytesIO(data)) as im:
            im.load()
            rgb = im.convert("RGB")
    except (OSError, SyntaxError, ValueError) as exc:
        raise CorruptImageError(f"{path}: {exc}") from exc
    return np.array(rgb, dtype=np.uint8)


def _ppm_tokens(data: bytes, count: int, path: str) -> tuple[list[int], int]:
    """Read ``count`` integer header fields after the magic number."""
    pos = 2
    values = []
    while len(values) < count:
        while pos < len(data) and (data[pos:pos + 1].isspace() or data[pos:pos + 1] == b"#"):
            if data[pos:pos + 1] == b"#":
                end = data.find(b"\n", pos)
                pos = len(data) if end < 0 else end + 1
            else:
                pos += 1
        start = pos
        while pos < len(data) and data[pos:pos + 1].isdigit():
            pos += 1
        if start == pos:
            raise CorruptImageError(f"{path}: malformed PPM header")
        values.append(int(data[start:pos]))
    if pos >= len(data) or not data[pos:pos + 1].isspace():
        raise CorruptImageError(f"{path}: malformed PPM header")
    return values, pos + 1


def decode_ppm(data: bytes, path: str = "<bytes>") -> np.ndarray:
    if data[:2] != b"P6":
        raise UnsupportedFormatError(f"{path}: not a P6 PPM")
    (width, height, maxval), offset = _ppm_tokens(data, 3, path)
    if width < 1 or height < 1 or not 0 < maxval < 65536:
        raise CorruptImageError(f"{path}: invalid PPM dimensions or maxval")
    if maxval > 255:
        raise UnsupportedFormatError(f"{path}: 16-bit PPM, only 8-bit is supported")
    n = width * height * 3
    raster = data[offset:offset + n]
    if len(raster) < n:
        raise CorruptImageError(f"{path}: PPM raster truncated ({len(raster)} of {n} bytes)")
    img = np.frombuffer(raster, dtype=np.uint8).reshape(height, width, 3)
    if maxval != 255:
        img = np.round(img.astype(np.float64) * (255.0 / maxval)).astype(np.uint8)
    return img.copy()


def _as_uint8_image(img) -> np.ndarray:
    a = np.asarray(img)
    if a.dtype == bool:
        return np.where(a, 255, 0).astype(np.uint8)
    if a.ndim not in (2, 3) or (a.ndim == 3 and a.shape[2] != 3):
        raise ValueError(f"expected (M, N) or (M, N, 3) image, got shape {a.shape}")
    if a.dtype != np.uint8:
        if a.size and (a.min() < 0 or a.max() > 255):
            raise ValueError("image values must lie in [0, 255]")
        a = np.round(a).astype(np.uint8)
    return a


def encode_png(img) -> bytes:
    a = _as_uint8_image(img)
    buf = io.BytesIO()
    Image.fromarray(a).save(buf, format="PNG")
    return buf.getvalue()


def encode_ppm(img) -> bytes:
    a = _as_uint8_image(img)
    if a.ndim == 2:
        a = np.repeat(a[..., None], 3, axis=2)
    header = b"P6\n%d %d\n255\n" % (a.shape[1], a.shape[0])
    return header + np.ascontiguousarray(a).tobytes()


def save_image(img, path) -> None:
    """Write an RGB image or boolean edge map.

    Edge maps become 8-bit grayscale PNGs (edges 255, background 0). The
    format follows the extension: ``.ppm`` writes P6, anything else PNG.
    """
    path = os.fspath(path)
    data = encode_ppm(img) if path.lower().endswith(".ppm") else encode_png(img)
    with open(path, "wb") as fh:
        fh.write(data)

