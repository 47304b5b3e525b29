import json
import os
import subprocess

import pytest

import bigrass


def test_permutation_basics():
    w = bigrass.Permutation.parse("s3 s4 s1 s2 s3 s2 s1", 5)
    assert w.one_line() == [5, 2, 4, 1, 3]
    assert str(w) == "5,2,4,1,3"
    assert bigrass.length(w) == 7
    assert bigrass.descents(w) == [1, 3]
    assert bigrass.descents(w, "left") == [1, 3, 4]
    assert bigrass.Permutation.from_word(5, bigrass.reduced_word(w)) == w
    assert w * w.inverse() == bigrass.Permutation.identity(5)
    assert w(1) == 5


def test_bruhat_and_bigrassmannian():
    assert bigrass.bruhat_leq([1, 3, 2], [3, 2, 1])
    assert not bigrass.bruhat_leq([2, 1, 3], [1, 3, 2])
    assert [len(bigrass.enumerate_bigrassmannian(n)) for n in range(2, 7)] == [1, 4, 10, 20, 35]
    b = bigrass.b_element(4, 2, 2, 1)
    assert b.one_line() == [3, 4, 1, 2]
    assert bigrass.triple_of(b) == (2, 2, 1)
    assert bigrass.is_bigrassmannian(b)


def test_essential_set_and_socle():
    assert bigrass.essential_set("5,2,4,1,3") == [(1, 4, 1), (3, 1, 1), (3, 3, 2)]
    assert sorted(bigrass.socle_graded("5,2,4,1,3")) == [(1, 3, 8), (3, 3, 8), (4, 1, 9)]
    assert bigrass.socle_graded([1, 2, 3]) == []
    assert sorted(bigrass.socle_graded("5,2,4,1,3", v="e")) == sorted(bigrass.socle_graded("5,2,4,1,3"))


def test_kl_against_closed_form():
    e = bigrass.Permutation.identity(4)
    for c in bigrass.penultimate_cell(4):
        assert bigrass.kl_polynomial(e, c["perm"]) == bigrass.closed_form_p(4, c["i"], c["j"])
    assert bigrass.closed_form_p(4, 2, 2) == "v^5 + v^3"
    assert bigrass.mu([1, 2, 3], [2, 1, 3]) == 1


def test_ext():
    w0 = bigrass.Permutation.longest(4)
    s2 = bigrass.Permutation.from_word(4, [2])
    assert bigrass.ext1_dimension(s2 * w0, s2) == 1
    assert bigrass.ext1_dimension(bigrass.Permutation.longest(3), [1, 2, 3]) == 2
    assert bigrass.ext1_dimension(w0, s2, walls=[1, 2, 3]) == 0


def test_tetrahedron():
    t = json.loads(bigrass.tetrahedron_json(3))
    assert len(t["points"]) == 4
    assert len(t["edges"]) == 4


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        bigrass.Permutation([1, 1, 2])
    with pytest.raises(ValueError):
        bigrass.b_element(4, 1, 1, 1)


@pytest.mark.skipif("BIGRASS_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_exit_codes_and_json():
    cli = os.environ["BIGRASS_CLI"]
    out = subprocess.run([cli, "socle", "5,2,4,1,3", "--format", "json"], capture_output=True, text=True)
    assert out.returncode == 0
    data = json.loads(out.stdout)
    assert data["socle"] == [{"i": 4, "j": 1, "shift": 9}, {"i": 1, "j": 3, "shift": 8}, {"i": 3, "j": 3, "shift": 8}]
    assert subprocess.run([cli, "verify", "oracle", "--n", "7"], capture_output=True).returncode == 2
    assert subprocess.run([cli, "nonsense"], capture_output=True).returncode == 2
    first = subprocess.run([cli, "tetrahedron", "--n", "5", "--format", "svg"], capture_output=True).stdout
    second = subprocess.run([cli, "tetrahedron", "--n", "5", "--format", "svg"], capture_output=True).stdout
    assert first == second and first.startswith(b"<svg")
