"""Smoke test for the leafpower extension module.

Build and install it first:

    pip install ./crates/py --no-build-isolation    # or: maturin develop -m crates/py/Cargo.toml
    python python/smoke_test.py
"""

import json

import leafpower

SUN = "x y\ny z\nx z\na x\na y\nb y\nb z\nc x\nc z\n"
C4 = "a b\nb c\nc d\nd a\n"
P5 = "a b\nb c\nc d\nd e\n"


def main():
    assert leafpower.is_chordal(P5)
    assert not leafpower.is_chordal(C4)

    star = leafpower.recognize_star(P5)
    assert star["code"] == 0 and star["status"] == "accept", star
    model = json.dumps(star["certificates"]["star-nes"])
    assert leafpower.verify(P5, model, kind="star-nes")["code"] == 0

    nes = leafpower.convert(model, "nes-model")
    assert nes["kind"] == "nes-model"
    assert leafpower.verify(P5, json.dumps(nes))["code"] == 0

    sun = leafpower.recognize_star(SUN)
    assert sun["code"] == 1 and sun["stage"] == "no-good-partition", sun
    assert leafpower.recognize_linear(SUN)["code"] == 1
    assert leafpower.recognize_linear(C4)["stage"] == "not-chordal"

    gen = leafpower.generate("linear-leafroot", seed=4, size=15)
    graph = json.dumps(gen["graph"])
    root = json.dumps(gen["certificate"])
    assert leafpower.recognize_linear(graph)["code"] == 3
    linear = leafpower.recognize_linear(graph, model=root)
    assert linear["code"] == 0, linear
    bluered = json.dumps(linear["certificates"]["bluered"])
    assert leafpower.verify(graph, bluered, kind="bluered")["code"] == 0

    assert leafpower.to_dot(P5).startswith("graph G {")
    assert leafpower.to_dot(root).startswith("graph caterpillar {")

    for bad in (lambda: leafpower.is_chordal("a b c"), lambda: leafpower.convert(root, "star-nes")):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print("leafpower smoke test passed")


if __name__ == "__main__":
    main()
