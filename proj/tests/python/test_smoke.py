import json
import math

import cfrag


def test_fragment_identity_and_small_mode():
    cover = cfrag.CoverConfig.default()
    ident = cfrag.CircleDiffeo.identity(4096)
    r = cfrag.fragment(ident, cover)
    assert r.reconstruction_error < 1e-12
    g = cfrag.CircleDiffeo.from_fourier([(1, 0.0, 0.005)], 4096)
    r = cfrag.fragment(g, cover)
    assert r.reconstruction_error < 1e-7
    back = cfrag.compose(r.xi1, cfrag.compose(r.xi2, r.xi3))
    assert cfrag.distance(back, g) < 1e-7


def test_periodic_function_and_errors():
    f = cfrag.PeriodicFunction([math.sin(2 * math.pi * k / 64) for k in range(64)])
    assert abs(f(math.pi / 2) - 1.0) < 1e-12
    assert abs(f.integrate(0, math.pi) - 2.0) < 1e-10
    try:
        cfrag.CoverConfig.parse('{"I": [1,2')
    except cfrag.GeometryError:
        pass
    else:
        raise AssertionError("malformed cover accepted")


def test_loops_and_cocycles():
    xi = cfrag.LoopAlgebraElement.parse("x*fourier:[(1,0.02,0)]+z*const:0.01", 2048)
    g = cfrag.exp_loop(xi)
    r = cfrag.fragment_loop(g, cfrag.CoverConfig.default())
    assert r.reconstruction_error < 1e-9
    assert cfrag.loop_distance(cfrag.exp_loop(cfrag.log_loop(g)), g) < 1e-12
    assert abs(cfrag.vect_cocycle("mono:2", "mono:-2", 256) + 6) < 1e-9
    r1, r2 = cfrag.CircleDiffeo.rotation(0.3, 256), cfrag.CircleDiffeo.rotation(1.0, 256)
    assert abs(cfrag.bott(r1, r2)) < 1e-12


def test_verma_exact():
    v = cfrag.VermaModule("1", "1")
    assert v.gram_determinant(2) == "18"
    assert v.gram_matrix(1) == [["2"]]
    assert v.commutator_check(2, -2, [1, 1])


def test_verify_and_cli():
    a = cfrag.verify("cocycle", seed=3, trials=2)
    b = cfrag.verify("cocycle", seed=3, trials=2, threads=2)
    assert a == b
    assert json.loads(a)["pass"]
    code, out, _ = cfrag.run_cli(["verma", "--c", "1/2", "--h", "1/16"])
    assert code == 0 and json.loads(out)["determinant"] == "0"


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print("ok", name)
