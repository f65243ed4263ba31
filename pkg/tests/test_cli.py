from __future__ import annotations

import json
import subprocess
import sys

import pytest

from skewbrace import serialize as io
from skewbrace.brace import almost_trivial_brace, trivial_brace
from skewbrace.cli import BAD_INPUT, GUARD, NEGATIVE, OK, main, run
from skewbrace.enumeration import pq_catalog, pq_group
from skewbrace.groups import (
    automorphisms,
    cyclic_group,
    homomorphisms,
    relabel,
    rho_perms,
    semidirect_product_group,
)
from skewbrace.hgs import coset_space, psi
from skewbrace.perms import generate
from skewbrace.sdp import ACTS, COMMUTES, TWISTED, is_admissible, make_spec
from skewbrace.stock import (
    abelian_group,
    dihedral_group,
    example_A_brace,
    example_B_brace,
    example_phi,
    example_spec,
)

S3 = dihedral_group(3)


def write(path, obj):
    io.write_json(path, obj)
    return str(path)


def test_verify(tmp_path):
    assert run(["verify", write(tmp_path / "t.json", io.brace_to_json(trivial_brace(S3)))]).code == OK
    assert run(["verify", write(tmp_path / "c.json", {"n": 2, "dot": [[0, 1], [1, 1]], "circ": [[0, 1], [1, 0]]})]).code == BAD_INPUT
    bad = {
        "n": 4,
        "dot": [list(r) for r in relabel(cyclic_group(4), (0, 2, 1, 3)).table],
        "circ": [list(r) for r in cyclic_group(4).table],
    }
    r = run(["verify", write(tmp_path / "x.json", bad)])
    assert r.code == NEGATIVE and "x=" in r.report and "z=" in r.report


def test_gamma(tmp_path):
    r = run(["gamma", write(tmp_path / "t.json", io.brace_to_json(trivial_brace(S3)))])
    assert r.code == OK and r.output["gamma"] == [list(range(6))] * 6
    r = run(["gamma", write(tmp_path / "b.json", io.brace_to_json(example_B_brace()))])
    assert r.output["gamma"] == [[(2 * i + 1) * j % 4 for j in range(4)] for i in range(4)]
    assert run(["gamma", str(tmp_path / "missing.json")]).code == BAD_INPUT


def test_ideals(tmp_path):
    r = run(["ideals", write(tmp_path / "t.json", io.brace_to_json(trivial_brace(S3)))])
    assert sum(row["ideal"] for row in r.output["subgroups"]) == 3
    r = run(["ideals", write(tmp_path / "a.json", io.brace_to_json(almost_trivial_brace(S3)))])
    assert sum(row["left_ideal"] for row in r.output["subgroups"]) == 3
    b = pq_catalog(7, 3, "metacyclic").entries[1].brace
    r = run(["ideals", write(tmp_path / "p.json", io.brace_to_json(b))])
    sizes = [len(row["subset"]) for row in r.output["subgroups"] if row["ideal"]]
    assert 7 in sizes


def test_opposite(tmp_path):
    r = run(["opposite", write(tmp_path / "t.json", io.brace_to_json(trivial_brace(S3)))])
    assert r.code == OK and r.output["dot"] == [list(x) for x in almost_trivial_brace(S3).dot.table]


def test_sdp(tmp_path):
    spec = io.spec_to_json(example_spec())
    r = run(["sdp", write(tmp_path / "s.json", spec)])
    assert r.code == OK and r.output["n"] == 32
    assert run(["sdp", "--check-only", str(tmp_path / "s.json")]).output is None
    A, B = example_A_brace(), example_B_brace()
    thetas = homomorphisms(B.dot, automorphisms(A.dot))
    bad = next(t for t in thetas if not is_admissible(make_spec(A, B, example_phi(), t)))
    r = run(["sdp", write(tmp_path / "neg.json", dict(spec, theta=[list(p) for p in bad.image]))])
    assert r.code == NEGATIVE and "not admissible" in r.report
    assert any(c in r.report for c in (ACTS, COMMUTES, TWISTED))
    r = run(["sdp", write(tmp_path / "m.json", dict(spec, phi=[[0, 0, 1, 2, 3, 4, 5, 6]] * 4))])
    assert r.code == BAD_INPUT


def test_enumerate(tmp_path):
    out = tmp_path / "c6.json"
    r = run(["enumerate", write(tmp_path / "g.json", io.group_to_json(pq_group(3, 2, "cyclic"))), "-o", str(out)])
    assert r.code == OK and len(json.loads(out.read_text())["entries"]) == 3
    r = run(["enumerate", write(tmp_path / "c3.json", io.group_to_json(cyclic_group(3)))])
    assert len(r.output["entries"]) == 1
    g16 = write(tmp_path / "g16.json", io.group_to_json(abelian_group([4, 4])))
    no_file = tmp_path / "never.json"
    assert run(["enumerate", g16, "-o", str(no_file)]).code == GUARD
    assert not no_file.exists()


def test_pq():
    r = run(["pq", "7", "3", "--which", "metacyclic"])
    assert r.code == OK and len(r.output["entries"]) == 23
    assert len(run(["pq", "7", "3", "--which", "cyclic"]).output["entries"]) == 5
    assert run(["pq", "5", "3"]).code == BAD_INPUT


def induce_files(tmp_path, M_kind="rho"):
    A_br, B_br = example_A_brace(), example_B_brace()
    G = semidirect_product_group(A_br.circ, B_br.circ, example_phi())
    A, B = list(range(0, 32, 4)), list(range(4))
    X = coset_space(G, B)
    M = psi(X, A).preimage(rho_perms(A_br.dot)) if M_kind == "rho" else generate([(1, 0, 2, 3, 4, 5, 6, 7)], 8)
    return [
        write(tmp_path / "M.json", io.permset_to_json(M)),
        write(tmp_path / "N.json", io.permset_to_json(rho_perms(B_br.dot))),
        write(tmp_path / "G.json", io.group_to_json(G)),
        "0,1,2,3",
        "--A",
        ",".join(map(str, A)),
    ]


def test_induce(tmp_path):
    r = run(["induce"] + induce_files(tmp_path))
    assert r.code == OK and "equals the semidirect product" in r.report
    assert r.output["n"] == 32
    assert run(["induce"] + induce_files(tmp_path, "bad")).code == NEGATIVE


def test_induce_classical_on_c6(tmp_path):
    C6 = pq_group(3, 2, "cyclic")
    X = coset_space(C6, [0, 1])
    M = psi(X, [0, 2, 4]).preimage(rho_perms(cyclic_group(3)))
    args = [
        write(tmp_path / "M.json", io.permset_to_json(M)),
        write(tmp_path / "N.json", io.permset_to_json(rho_perms(cyclic_group(2)))),
        write(tmp_path / "G.json", io.group_to_json(C6)),
        "[0,1]",
    ]
    r = run(["induce"] + args)
    assert r.code == OK and r.output["dot"] == r.output["circ"]


def test_isomorphic(tmp_path):
    a = write(tmp_path / "a.json", io.group_to_json(cyclic_group(4)))
    b = write(tmp_path / "b.json", io.group_to_json(abelian_group([2, 2])))
    assert run(["isomorphic", a, b]).code == NEGATIVE
    assert run(["isomorphic", a, a]).code == OK
    s = write(tmp_path / "s.json", io.brace_to_json(almost_trivial_brace(S3)))
    assert run(["isomorphic", s, s]).output["witness"] == list(range(6))


def test_bad_arguments():
    assert run(["pq", "seven", "3"]).code == BAD_INPUT
    assert run([]).code == BAD_INPUT


def test_main_streams(capsys):
    assert main(["pq", "3", "2", "--which", "cyclic"]) == OK
    out, err = capsys.readouterr()
    assert "3 skew braces" in out and not err
    assert main(["pq", "5", "3"]) == BAD_INPUT
    out, err = capsys.readouterr()
    assert not out and "BadPrimes" in err


def test_module_entry_point(tmp_path):
    out = tmp_path / "c.json"
    proc = subprocess.run(
        [sys.executable, "-m", "skewbrace", "pq", "3", "2", "-o", str(out)], capture_output=True, text=True
    )
    assert proc.returncode == 0 and out.exists()


@pytest.mark.parametrize("argv", [["pq", "7", "3"], ["pq", "7", "3", "--which", "cyclic"]])
def test_pq_output_is_byte_identical(tmp_path, argv):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(argv + ["-o", str(a)]).code == OK
    assert run(argv + ["-o", str(b)]).code == OK
    assert a.read_bytes() == b.read_bytes()
