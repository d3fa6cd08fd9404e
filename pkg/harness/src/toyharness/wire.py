"""Minimal reader/writer for the WGT1 tensor container.

Independent of the rescaling library on purpose: the two components
exchange files, not code.  Handles the subset the harness needs
(float32/float64, rank 1..3, canonical name order, 8-byte alignment).
"""

import struct

import numpy as np

MAGIC = b"WGT1"
DTYPES = {0: "<f4", 1: "<f8"}
CODES = {np.dtype(np.float32): 0, np.dtype(np.float64): 1}


def write(tensors, path):
    """tensors: dict name -> ndarray.  Writes the canonical byte layout."""
    items = sorted(tensors.items(), key=lambda kv: kv[0].encode("utf-8"))
    index_len = sum(4 + len(n.encode("utf-8")) + 2 + 8 * a.ndim + 16
                    for n, a in items)
    offset = (12 + index_len + 7) & ~7
    index = bytearray()
    payload = bytearray()
    for name, arr in items:
        raw = np.ascontiguousarray(arr, dtype=arr.dtype).tobytes()
        nb = name.encode("utf-8")
        index += struct.pack("<I", len(nb)) + nb
        index += struct.pack("<BB", CODES[arr.dtype], arr.ndim)
        index += b"".join(struct.pack("<Q", d) for d in arr.shape)
        index += struct.pack("<QQ", offset, len(raw))
        payload += raw
        pad = -len(raw) % 8
        payload += b"\0" * pad
        offset += len(raw) + pad
    head = MAGIC + struct.pack("<II", 1, len(items))
    blob = head + bytes(index)
    blob += b"\0" * (-len(blob) % 8) + bytes(payload)
    with open(path, "wb") as f:
        f.write(blob)


def read(path):
    with open(path, "rb") as f:
        data = f.read()
    if data[:4] != MAGIC or struct.unpack("<I", data[4:8])[0] != 1:
        raise ValueError(f"{path}: not a WGT1 v1 container")
    count = struct.unpack("<I", data[8:12])[0]
    pos, out = 12, {}
    for _ in range(count):
        (nlen,) = struct.unpack_from("<I", data, pos)
        name = data[pos + 4:pos + 4 + nlen].decode("utf-8")
        pos += 4 + nlen
        code, rank = struct.unpack_from("<BB", data, pos)
        dims = struct.unpack_from(f"<{rank}Q", data, pos + 2)
        off, length = struct.unpack_from("<QQ", data, pos + 2 + 8 * rank)
        pos += 2 + 8 * rank + 16
        arr = np.frombuffer(data[off:off + length], dtype=DTYPES[code])
        out[name] = arr.reshape(dims).copy()
    return out
