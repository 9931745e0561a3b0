#!/usr/bin/env python3
"""Smoke test for the kalgo_py extension module.

Builds nothing itself: compile the extension first with

    cargo build -p kalgo-py --release

then run `python3 python/smoke_test.py`. The script locates the compiled
cdylib under target/, exposes it as an importable module, and exercises
the main types and operations end to end.
"""

import math
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]


def locate_extension() -> Path:
    names = ["libkalgo_py.so", "libkalgo_py.dylib", "kalgo_py.dll"]
    candidates = [
        ROOT / "target" / profile / name
        for profile in ("release", "debug")
        for name in names
    ]
    found = [p for p in candidates if p.exists()]
    if not found:
        sys.exit(
            "kalgo_py extension not found; build it first with "
            "`cargo build -p kalgo-py --release`"
        )
    # prefer the most recently built artifact
    return max(found, key=lambda p: p.stat().st_mtime)


def import_extension():
    lib = locate_extension()
    staging = Path(tempfile.mkdtemp(prefix="kalgo-py-"))
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    shutil.copy2(lib, staging / f"kalgo_py{suffix}")
    sys.path.insert(0, str(staging))
    import kalgo_py

    return kalgo_py


def main() -> None:
    k = import_extension()
    print(f"imported kalgo_py {k.__version__} from {k.__file__}")

    # containers and accessors
    img = k.GrayImage(2, 2, [1, 2, 3, 4])
    assert (img.width, img.height) == (2, 2)
    assert img.get_pixel(1, 0) == 2 and img.get_pixel(0, 1) == 3
    try:
        img.get_pixel(5, 0)
    except IndexError:
        pass
    else:
        raise AssertionError("out-of-bounds access must raise IndexError")

    # PGM round trip, both encodings
    for fmt in ("ascii", "binary"):
        assert k.GrayImage.from_pgm(img.to_pgm(fmt)) == img, fmt
    assert k.GrayImage.from_pgm(b"P2 1 1 3 3").pixels() == b"\xff"

    # median filter erases a thin stroke, the conditional filter keeps it
    field = bytearray([255] * 81)
    for x in range(2, 7):
        field[4 * 9 + x] = 0
    stroke = k.GrayImage(9, 9, list(field))
    assert k.median_filter(stroke).pixels() == b"\xff" * 81
    assert k.k_filter(stroke) == stroke
    assert k.k_filter(stroke, mode="paper-literal") == stroke

    # the full pipeline removes an isolated dot entirely
    dotted = k.GrayImage.filled(7, 7, 255)
    pixels = bytearray(dotted.pixels())
    pixels[3 * 7 + 3] = 0
    dotted = k.GrayImage(7, 7, list(pixels))
    assert k.k_algorithm(dotted).bits() == b"\x00" * 49
    assert k.binarize(dotted).ink_count() == 1

    # thresholding and rendering
    two = k.GrayImage(2, 1, [100, 200])
    assert k.mean_intensity(two) == 150.0
    binary = k.binarize(two)
    assert binary.bits() == b"\x01\x00"
    assert binary.render().pixels() == b"\x00\xff"

    # seeded noise is deterministic and parameter-checked
    base = k.GrayImage.filled(32, 32, 128)
    noisy1 = k.add_salt_pepper(base, 0.1, seed=42)
    noisy2 = k.add_salt_pepper(base, 0.1, seed=42)
    assert noisy1 == noisy2
    assert noisy1 != k.add_salt_pepper(base, 0.1, seed=43)
    try:
        k.add_salt_pepper(base, 1.5)
    except ValueError:
        pass
    else:
        raise AssertionError("density > 1 must raise ValueError")

    # metrics
    assert k.mse(base, base) == 0.0
    assert math.isinf(k.psnr(base, base))
    assert k.psnr(base, noisy1) > 0.0
    assert k.changed_pixels(base, noisy1) > 0
    denoised = k.k_filter(noisy1)
    assert k.psnr(denoised, base) > k.psnr(noisy1, base)

    stats = k.binary_confusion(binary, binary)
    assert stats["fp"] == 0 and stats["fn"] == 0 and stats["f1"] == 1.0

    print("smoke test passed")


if __name__ == "__main__":
    main()
