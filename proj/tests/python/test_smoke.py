import json
from fractions import Fraction

import pytest

import sdmaps


def naive_sd_powers(p):
    """Exponents k whose power map on F_p satisfies the SD equation, checked pair by pair."""
    good = []
    for k in range(1, p):
        f = [pow(x, k, p) for x in range(p)]
        ok = len(set(f)) == p
        for x in range(p):
            for y in range(p):
                if not ok or x == y:
                    continue
                lhs = f[(x + y) * pow(x - y, -1, p) % p]
                rhs = (f[x] + f[y]) * pow(f[x] - f[y], -1, p) % p
                ok = lhs == rhs
        if ok:
            good.append(k)
    return good


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_classify_matches_naive_search(p):
    result = sdmaps.classify(p)
    assert result["p"] == p
    ks = sorted(m["k"] for m in result["maps"])
    assert ks == naive_sd_powers(p)


def test_classify_rejects_composite():
    with pytest.raises(sdmaps.NotPrime):
        sdmaps.classify(9)
    assert issubclass(sdmaps.NotPrime, sdmaps.SdError)


def test_power_map_verdict():
    assert sdmaps.is_sd_power_map(7, 1)
    assert not sdmaps.is_sd_power_map(7, 5)


def recurrence(u, n):
    f = [Fraction(0), Fraction(1), Fraction(u)]
    while len(f) <= n:
        k = len(f) - 1
        f.append(f[k - 1] * (f[k] + 1) / (f[k] - 1))
    return f


def test_symbolic_sequence_agrees_with_recurrence_at_u3():
    entries = sdmaps.symbolic_sequence(8)
    assert len(entries) == 9
    assert entries == sdmaps.published_symbolic_values()
    # f(5) = (u^2+1)/(u-1)^2 at u = 3 is 10/4.
    assert recurrence(3, 8)[5] == Fraction(5, 2)


def test_u_constraint_leaves_two():
    assert sdmaps.u_constraint_survivors() == ["2"]


def test_integer_induction_passes():
    assert sdmaps.integer_induction(20)["status"] == "pass"


@pytest.mark.parametrize("d", ["2", "-1", "5"])
@pytest.mark.parametrize("which", ["identity", "conjugation"])
def test_quadratic_automorphisms(d, which):
    report = sdmaps.verify_automorphism_sd(d, which, samples=50, seed=7)
    assert report["status"] == "pass"


def test_square_d_rejected():
    with pytest.raises(sdmaps.PreconditionError):
        sdmaps.verify_automorphism_sd("4", "identity")


@pytest.mark.parametrize("branch", ["plus", "minus"])
def test_sign_contradiction(branch):
    assert sdmaps.sign_contradiction("2", branch)["confirmed"]


def test_lattice_orders_agree():
    row = sdmaps.lattice_fix("3", "conjugation", 3, 2, "row-major")
    col = sdmaps.lattice_fix("3", "conjugation", 3, 2, "column-major")
    values = lambda lf: {(pt["m"], pt["n"]): pt["value"] for pt in lf["points"]}
    assert values(row) == values(col)
    assert len(values(row)) == 7 * 5 - 1


def test_complex_suite():
    assert sdmaps.verify_complex(samples=100, seed=3)["passed"]


def test_run_cli_json_and_exit_codes():
    code, out, _ = sdmaps.run_cli("classify", "--primes", "7", "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "pass"
    code, _, _ = sdmaps.run_cli("no-such-command")
    assert code == 1
