import io
import struct

import numpy as np
import pytest

from wavescale import Checkpoint, container_bytes, read_container, write_container
from wavescale.errors import (
    BadMagic,
    DuplicateName,
    IoFailure,
    MalformedContainer,
    NameOrderViolation,
    OverlappingSegments,
    TruncatedFile,
    UnsupportedVersion,
    WavescaleError,
)


def entry(name, dtype_code, dims, offset, length):
    blob = struct.pack("<I", len(name)) + name
    blob += struct.pack("<BB", dtype_code, len(dims))
    for d in dims:
        blob += struct.pack("<Q", d)
    blob += struct.pack("<QQ", offset, length)
    return blob


def build(entries, payload=b"", count=None, version=1):
    head = b"WGT1" + struct.pack("<II", version, count if count is not None else len(entries))
    body = b"".join(entries)
    data_start = (len(head) + len(body) + 7) & ~7
    blob = head + body
    blob += b"\0" * (data_start - len(blob))
    return blob + payload, data_start


def test_empty_container_is_twelve_bytes():
    blob = container_bytes(Checkpoint([]))
    assert blob == b"WGT1" + struct.pack("<II", 1, 0)
    assert len(blob) == 12
    assert len(read_container(blob)) == 0


def test_single_scalar_tensor_layout():
    ck = Checkpoint([("a", np.array([1.0], dtype=np.float32))])
    blob = container_bytes(ck)
    # 12 header + (4+1+1+1+8+8+8)=31 index -> data at 48, 4 payload, pad to 52
    assert len(blob) == 52
    assert blob[12:16] == struct.pack("<I", 1)
    assert blob[16:17] == b"a"
    assert blob[17] == 0  # f32
    assert blob[18] == 1  # rank
    assert struct.unpack("<Q", blob[19:27])[0] == 1
    assert struct.unpack("<QQ", blob[27:43]) == (48, 4)
    assert blob[48:52] == bytes.fromhex("0000803f")


def test_round_trip_preserves_everything():
    rng = np.random.default_rng(31)
    ck = Checkpoint([
        ("m/ones", np.ones((3, 2), dtype=np.float64)),
        ("m/rand", rng.standard_normal((2, 3, 4)).astype(np.float32)),
        ("v", rng.standard_normal(5)),
    ])
    back = read_container(container_bytes(ck))
    assert back.names() == ck.names()
    for (n, a), (_, b) in zip(ck.entries, back.entries):
        assert a.dtype == b.dtype, n
        assert a.shape == b.shape, n
        assert np.array_equal(a, b), n


def test_write_read_write_is_idempotent():
    rng = np.random.default_rng(32)
    ck = Checkpoint([
        ("z.w", rng.standard_normal((4, 4)).astype(np.float32)),
        ("a.b", rng.standard_normal(9)),
    ])
    blob = container_bytes(ck)
    assert container_bytes(read_container(blob)) == blob


def test_file_round_trip(tmp_path):
    path = tmp_path / "model.wgt"
    ck = Checkpoint([("t", np.arange(6, dtype=np.float32).reshape(2, 3))])
    n = write_container(ck, path)
    assert path.stat().st_size == n
    back = read_container(path)
    assert np.array_equal(dict(back.entries)["t"], dict(ck.entries)["t"])
    # file-like objects work on both ends
    buf = io.BytesIO()
    write_container(ck, buf)
    assert buf.getvalue() == path.read_bytes()
    buf.seek(0)
    assert read_container(buf).names() == ("t",)


def test_bad_magic():
    with pytest.raises(BadMagic):
        read_container(b"NOPE" + bytes(8))


def test_unsupported_version():
    blob, _ = build([], version=7)
    with pytest.raises(UnsupportedVersion):
        read_container(blob)


def test_truncated_header():
    with pytest.raises(TruncatedFile):
        read_container(b"WGT1\x01\x00")


def test_count_larger_than_file():
    blob = b"WGT1" + struct.pack("<II", 1, 1000)
    with pytest.raises(TruncatedFile):
        read_container(blob)


def test_truncated_index():
    good = container_bytes(Checkpoint([("a", np.zeros(2, dtype=np.float32))]))
    with pytest.raises(TruncatedFile):
        read_container(good[:20])


def test_truncated_payload():
    good = container_bytes(Checkpoint([("a", np.zeros(2, dtype=np.float32))]))
    with pytest.raises(TruncatedFile):
        read_container(good[:-4])


def test_bad_name_bytes():
    blob, _ = build([entry(b"\xff\xfe", 0, (1,), 48, 4)], b"\0" * 8)
    with pytest.raises(MalformedContainer):
        read_container(blob)


def test_bad_dtype_code():
    blob, start = build([entry(b"a", 7, (1,), 48, 4)], b"\0" * 8)
    with pytest.raises(MalformedContainer):
        read_container(blob)


def test_bad_rank():
    raw = entry(b"a", 0, (1,), 0, 0)
    raw = raw[:18] + b"\x04" + raw[19:]  # rank byte -> 4, dims payload now lies
    blob, _ = build([raw], b"\0" * 32)
    with pytest.raises((MalformedContainer, TruncatedFile)):
        read_container(blob)
    raw0 = entry(b"a", 0, (), 48, 4)
    blob0, _ = build([raw0], b"\0" * 8)
    with pytest.raises((MalformedContainer, TruncatedFile)):
        read_container(blob0)


def test_zero_dimension():
    blob, start = build([entry(b"a", 0, (0,), 40, 0)], b"")
    with pytest.raises(MalformedContainer):
        read_container(blob)


def test_length_product_mismatch():
    blob, start = build([entry(b"a", 0, (3,), 40, 8)], b"\0" * 16)
    with pytest.raises(MalformedContainer):
        read_container(blob)


def test_misaligned_offset():
    _, start = build([entry(b"ab", 0, (1,), 0, 4)], b"\0" * 16)
    blob, _ = build([entry(b"ab", 0, (1,), start + 4, 4)], b"\0" * 16)
    with pytest.raises(MalformedContainer):
        read_container(blob)


def test_huge_dims_do_not_overflow():
    big = 2**62
    blob, _ = build([entry(b"a", 0, (big, big, big), 48, 4)], b"\0" * 8)
    with pytest.raises(MalformedContainer):
        read_container(blob)


def test_payload_past_eof():
    blob, start = build([entry(b"a", 0, (2,), 10**9, 8)], b"\0" * 8)
    with pytest.raises(TruncatedFile):
        read_container(blob)


def test_overlapping_segments():
    e1 = entry(b"a", 0, (4,), 80, 16)
    e2 = entry(b"b", 0, (2,), 88, 8)  # overlaps a's [80, 96)
    blob, start = build([e1, e2], b"\0" * 64)
    assert start == 80
    with pytest.raises(OverlappingSegments):
        read_container(blob)


def test_name_order_violation():
    e1 = entry(b"b", 0, (1,), 72, 4)
    e2 = entry(b"a", 0, (1,), 80, 4)
    blob, start = build([e1, e2], b"\0" * 32)
    with pytest.raises(NameOrderViolation):
        read_container(blob)


def test_duplicate_name():
    e1 = entry(b"a", 0, (1,), 72, 4)
    e2 = entry(b"a", 0, (1,), 80, 4)
    blob, start = build([e1, e2], b"\0" * 32)
    with pytest.raises(DuplicateName):
        read_container(blob)


def test_missing_file_is_io_failure(tmp_path):
    with pytest.raises(IoFailure):
        read_container(tmp_path / "no-such-file.wgt")


def test_unsupported_write_dtype():
    # Checkpoint casts on construction, so sneak an int array past it
    ck = Checkpoint([("a", np.zeros(2, dtype=np.float32))])
    ck.entries = (("a", np.zeros(2, dtype=np.int32)),)
    with pytest.raises(IoFailure):
        container_bytes(ck)


def test_fuzz_small_streams_never_crash():
    rng = np.random.default_rng(33)
    good = container_bytes(Checkpoint([
        ("w", rng.standard_normal((2, 3)).astype(np.float32)),
        ("x", rng.standard_normal(4)),
    ]))
    for i in range(500):
        if i % 3 == 0:
            blob = bytes(rng.integers(0, 256, rng.integers(0, 128), dtype=np.uint8))
        else:
            mutated = bytearray(good)
            for _ in range(rng.integers(1, 4)):
                mutated[rng.integers(0, len(mutated))] = rng.integers(0, 256)
            blob = bytes(mutated)
        try:
            read_container(blob)
        except WavescaleError:
            pass
