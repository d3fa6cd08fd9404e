"""Minimal binary tensor container, the wire format between all components.

Layout (all integers little-endian):

    "WGT1" | version u32 = 1 | tensor_count u32
    per tensor, back to back:
        name_len u32 | name UTF-8 | dtype u8 | rank u8 |
        dims rank x u64 | data_offset u64 | data_len u64
    zero padding to the first 8-aligned offset
    payloads, each 8-aligned, in index order

dtype codes: 0 = float32, 1 = float64.  Ranks 1..3.  Names are unique and
sorted ascending by their UTF-8 bytes; data offsets are absolute, strictly
increasing, and every data_len equals prod(dims) times the element size.

The writer is canonical: the same checkpoint always produces the same
bytes.  The reader trusts nothing; every declared length and offset is
bounds-checked against the actual buffer before any array is built.
"""

import io

import numpy as np

from .consolidate import Checkpoint
from .errors import (
    BadMagic,
    DuplicateName,
    IoFailure,
    MalformedContainer,
    NameOrderViolation,
    OverlappingSegments,
    TruncatedFile,
    UnsupportedVersion,
)

MAGIC = b"WGT1"
VERSION = 1

_DTYPE_CODE = {np.dtype(np.float32): 0, np.dtype(np.float64): 1}
_CODE_DTYPE = {0: np.dtype("<f4"), 1: np.dtype("<f8")}


def _align8(n):
    return (n + 7) & ~7


def _u32(v):
    return int(v).to_bytes(4, "little")


def _u64(v):
    return int(v).to_bytes(8, "little")


def write_container(ckpt, destination):
    """Serialize a checkpoint; returns the number of bytes written."""
    blobs = []
    index_len = 0
    for name, arr in ckpt.entries:
        code = _DTYPE_CODE.get(arr.dtype)
        if code is None:
            raise IoFailure(f"tensor {name!r} has unsupported dtype {arr.dtype}")
        name_b = name.encode("utf-8")
        payload = np.ascontiguousarray(arr, dtype=_CODE_DTYPE[code]).tobytes()
        blobs.append((name_b, code, arr.shape, payload))
        index_len += 4 + len(name_b) + 1 + 1 + 8 * arr.ndim + 8 + 8

    out = bytearray()
    out += MAGIC
    out += _u32(VERSION)
    out += _u32(len(blobs))
    offset = _align8(12 + index_len)
    for name_b, code, shape, payload in blobs:
        out += _u32(len(name_b))
        out += name_b
        out.append(code)
        out.append(len(shape))
        for d in shape:
            out += _u64(d)
        out += _u64(offset)
        out += _u64(len(payload))
        offset = _align8(offset + len(payload))
    for _, _, _, payload in blobs:
        out += b"\0" * (_align8(len(out)) - len(out))
        out += payload

    data = bytes(out)
    try:
        if hasattr(destination, "write"):
            destination.write(data)
        else:
            with open(destination, "wb") as f:
                f.write(data)
    except OSError as e:
        raise IoFailure(f"cannot write container: {e}") from e
    return len(data)


class _Cursor:
    """Sequential reader that refuses to step past the buffer."""

    def __init__(self, data):
        self.data = data
        self.pos = 0

    def take(self, n):
        end = self.pos + n
        if end > len(self.data):
            raise TruncatedFile(
                f"need {n} bytes at offset {self.pos}, file has {len(self.data)}"
            )
        chunk = self.data[self.pos:end]
        self.pos = end
        return chunk

    def u8(self):
        return self.take(1)[0]

    def u32(self):
        return int.from_bytes(self.take(4), "little")

    def u64(self):
        return int.from_bytes(self.take(8), "little")


def read_container(source):
    """Parse container bytes into a Checkpoint; rejects anything malformed."""
    if isinstance(source, (bytes, bytearray, memoryview)):
        data = bytes(source)
    elif hasattr(source, "read"):
        data = source.read()
    else:
        try:
            with open(source, "rb") as f:
                data = f.read()
        except OSError as e:
            raise IoFailure(f"cannot read container: {e}") from e

    cur = _Cursor(data)
    magic = cur.take(4)
    if magic != MAGIC:
        raise BadMagic(f"magic {magic!r} != {MAGIC!r}")
    version = cur.u32()
    if version != VERSION:
        raise UnsupportedVersion(f"version {version}, reader supports {VERSION}")
    count = cur.u32()
    # smallest possible index entry is 30 bytes; bounds the parse loop
    if count * 30 > len(data) - cur.pos:
        raise TruncatedFile(f"count {count} cannot fit in {len(data)} bytes")

    entries = []
    prev_name = None
    for _ in range(count):
        name_len = cur.u32()
        name_b = cur.take(name_len)
        try:
            name = name_b.decode("utf-8")
        except UnicodeDecodeError:
            raise MalformedContainer(f"tensor name is not UTF-8: {name_b[:40]!r}")
        code = cur.u8()
        if code not in _CODE_DTYPE:
            raise MalformedContainer(f"tensor {name!r}: unknown dtype code {code}")
        rank = cur.u8()
        if rank not in (1, 2, 3):
            raise MalformedContainer(f"tensor {name!r}: rank {rank} outside 1..3")
        dims = tuple(cur.u64() for _ in range(rank))
        if any(d == 0 for d in dims):
            raise MalformedContainer(f"tensor {name!r}: zero-sized dim in {dims}")
        data_offset = cur.u64()
        data_len = cur.u64()
        n_elem = 1
        for d in dims:
            n_elem *= d  # Python ints, no overflow
        if data_len != n_elem * _CODE_DTYPE[code].itemsize:
            raise MalformedContainer(
                f"tensor {name!r}: data_len {data_len} != "
                f"{n_elem} x {_CODE_DTYPE[code].itemsize}"
            )
        if prev_name is not None:
            if name_b == prev_name:
                raise DuplicateName(f"tensor name {name!r} repeated")
            if name_b < prev_name:
                raise NameOrderViolation(
                    f"tensor {name!r} breaks ascending name order"
                )
        prev_name = name_b
        entries.append((name, code, dims, data_offset, data_len))

    data_start = _align8(cur.pos)
    prev_end = data_start
    for name, code, dims, data_offset, data_len in entries:
        if data_offset % 8:
            raise MalformedContainer(
                f"tensor {name!r}: data offset {data_offset} not 8-aligned"
            )
        if data_offset < prev_end:
            raise OverlappingSegments(
                f"tensor {name!r}: offset {data_offset} overlaps bytes "
                f"before {prev_end}"
            )
        if data_offset + data_len > len(data):
            raise TruncatedFile(
                f"tensor {name!r}: payload [{data_offset}, "
                f"{data_offset + data_len}) past end of file ({len(data)})"
            )
        prev_end = data_offset + data_len

    out = []
    for name, code, dims, data_offset, data_len in entries:
        dt = _CODE_DTYPE[code]
        flat = np.frombuffer(data, dtype=dt, count=data_len // dt.itemsize,
                             offset=data_offset)
        arr = flat.reshape(dims).astype(dt.newbyteorder("="), copy=True)
        out.append((name, arr))
    return Checkpoint(out)


def read_container_file(path):
    """Convenience wrapper reading from a filesystem path."""
    return read_container(path)


def container_bytes(ckpt):
    """Serialize to an in-memory byte string."""
    buf = io.BytesIO()
    write_container(ckpt, buf)
    return buf.getvalue()
