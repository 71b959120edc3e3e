"""Smoke test for the extqsym extension module.

Build with `maturin develop` (or copy the cdylib to extqsym.so on PYTHONPATH),
then run `python python/smoke_test.py`.
"""

import json

import extqsym


def main():
    assert extqsym.hilbert_series(8) == [1, 7, 20, 28, 14]
    assert extqsym.product_coefficient(1, 1) == 0
    assert extqsym.product_coefficient(60, 40) == extqsym.product_coefficient(40, 60)
    assert extqsym.product_coefficient_bruteforce(4, 4) == extqsym.product_coefficient(4, 4) == 6

    g = extqsym.g_poly("001100")
    assert str(g) == "t3*t4 + t3*t5 + t3*t6 + t4*t5 + t4*t6 + t5*t6", g
    assert extqsym.pairing_from_ballot("0010001101") == [(2, 3), (6, 7), (5, 8), (9, 10)]

    t1 = extqsym.Polynomial(2, "t1")
    nf, decomposition = extqsym.normal_form(t1)
    assert str(nf) == "-t2"
    assert decomposition == [("10", "1")]
    assert not extqsym.in_ideal(t1)

    moved = extqsym.pi(1, extqsym.Polynomial.var(4, 2) * extqsym.fundamental(4, 1))
    assert moved == extqsym.Polynomial(4, "-t1*t2 + t1*t3 + t1*t4")
    assert not extqsym.in_ideal(moved)

    d = extqsym.delta([(1, 2), (3, 4)], 4)
    assert extqsym.is_harmonic(d)
    assert not extqsym.is_harmonic(extqsym.Polynomial(4, "t3 - t1") * extqsym.Polynomial(4, "t4 - t2"))
    assert len(extqsym.harmonic_kernel(6, 2)) == 9

    p = extqsym.Polynomial(4, "3/2*t1*t3 - t2 + 5")
    assert extqsym.Polynomial.from_json(p.to_json()) == p
    assert json.loads(p.to_json())["n"] == 4

    assert extqsym.check_freeness(5)
    assert extqsym.reduce_mod_j(extqsym.fundamental(5, 1)).is_zero()

    assert all(passed for _, passed, _ in extqsym.verify_suite(5))
    status, out, _ = extqsym.run_cli(["hilbert", "--n", "9"])
    assert (status, out.strip()) == (0, "1 8 27 48 42")

    try:
        extqsym.Polynomial(2, "t3")
    except extqsym.ExtqsymError:
        pass
    else:
        raise AssertionError("expected ExtqsymError")
    try:
        extqsym.hilbert_series(100)
    except extqsym.CapExceededError:
        pass
    else:
        raise AssertionError("expected CapExceededError")

    print("python smoke test: ok")


if __name__ == "__main__":
    main()
