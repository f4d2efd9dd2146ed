"""``matorbit`` command line: one binary, JSON out.

    matorbit kclass --uniform 2 4
    matorbit tensor --mu 2,1,1 --beta 1,1,1,1
    matorbit member --v v.json --w w.json
    matorbit verify --level fast --seed 0

Matrices are read as ``{"rows", "cols", "entries"}`` with rational strings
(a bare list of rows also works); matroids as ``{"n", "rank", "bases"}``.
Exit codes: 0 ok, 1 error or failed verification, 2 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass, fields
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Sequence

from . import acceptance
from .cohomology import (
    codim_matrix_orbit, degree_from_class, degree_uniform, localize_grassmannian,
    localize_orbit_via_permutations, multidegree, random_point, uniform_class,
    uniform_class_grassmannian, uniform_class_ut,
)
from .kclass import (
    Rank2Config, dep_polynomial_as_printed, discrepancy_report, engine_for, hilbert_coefficient,
    hook_discrepancy_report, hook_enumerator_fakedep, hook_theorem_as_printed, hooks_from_enumerator,
    k_class, k_rank2, k_rank2_closed_form_as_printed, k_uniform_rank2,
)
from .linalg import RationalMatrix
from .matroid import Matroid, face_matroid, nbc_bases_of_truncation, tutte
from .oracle import (
    DEFAULT_CAP, ResourceLimit, buchberger, dimension_of_quotient, degree_of_quotient,
    idoubleprime_generators, iprime_generators, is_radical_case, is_squarefree_initial,
    k_polynomial_of_quotient, membership_test,
)
from .symfunc import SchurExpansion
from .tensor import (
    char_rank2, char_uniform_rank2, character_dimension, gl_dimension, schur_weyl_module,
    sn_multiplicities,
)

SUBCOMMANDS = ("kclass", "cohom", "tensor", "matroid", "hooks", "ideal", "member", "verify")


class CliError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class JobSpec:
    subcommand: str
    uniform: tuple | None = None
    mu: tuple | None = None
    matrix: RationalMatrix | None = None
    matroid: Matroid | None = None
    v: RationalMatrix | None = None
    w: RationalMatrix | None = None
    r: int | None = None
    n: int | None = None
    beta: tuple | None = None
    k: int | None = None
    flag: list | None = None
    seed: int = 0
    level: str = "full"
    cap_steps: int = DEFAULT_CAP
    as_printed: bool = False
    double: bool = False

    def validate(self):
        if self.subcommand not in SUBCOMMANDS:
            raise CliError("bad_subcommand", f"unknown subcommand {self.subcommand!r}")
        inputs = [x for x in ("uniform", "mu", "matrix", "matroid") if getattr(self, x) is not None]
        if self.subcommand == "member":
            if self.v is None or self.w is None:
                raise CliError("bad_input", "member needs --v and --w")
            if inputs:
                raise CliError("bad_input", "member takes only --v and --w")
        elif self.subcommand == "verify":
            if inputs:
                raise CliError("bad_input", "verify takes no input object")
            if self.level not in ("fast", "full"):
                raise CliError("bad_option", "level must be fast or full")
        elif len(inputs) != 1:
            raise CliError("bad_input", f"exactly one input object required, got {inputs or 'none'}")
        if self.uniform is not None:
            R, N = self.uniform
            if not 0 <= R <= N:
                raise CliError("bad_input", f"uniform matroid needs 0 <= R <= N, got {R} {N}")
        if self.cap_steps is not None and self.cap_steps <= 0:
            raise CliError("bad_option", "cap-steps must be positive")


# -- input helpers --------------------------------------------------------------------------


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise CliError("io_error", str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise CliError("bad_json", f"{path}: {exc}") from exc


def _matrix_from(data) -> RationalMatrix:
    if isinstance(data, dict):
        return RationalMatrix.from_json(data)
    return RationalMatrix(data)


def _ints(text: str) -> tuple:
    try:
        return tuple(int(x) for x in str(text).split(",") if x.strip() != "")
    except ValueError as exc:
        raise CliError("bad_option", f"expected comma-separated integers, got {text!r}") from exc


def _flag(text: str) -> list:
    return [list(_ints(part)) for part in str(text).split(";") if part.strip()]


def generic_matrix(r: int, n: int) -> RationalMatrix:
    """A realization of ``U_{r,n}``: columns ``(1, j, j^2, ...)``."""
    return RationalMatrix([[j ** i for j in range(1, n + 1)] for i in range(r)], r, n)


def rank2_realization(mu: Sequence[int]) -> RationalMatrix:
    return RationalMatrix(acceptance.realization(mu, range(2, 2 + len(mu))))


def _matroid(job: JobSpec) -> Matroid:
    if job.uniform is not None:
        return Matroid.uniform(*job.uniform)
    if job.mu is not None:
        return Rank2Config.from_mu(job.mu).matroid()
    if job.matrix is not None:
        return Matroid.from_matrix(job.matrix)
    return job.matroid


def _matrix(job: JobSpec) -> RationalMatrix | None:
    if job.matrix is not None:
        return job.matrix
    if job.uniform is not None:
        return generic_matrix(*job.uniform)
    if job.mu is not None:
        return rank2_realization(job.mu)
    return None


def _character_json(E: SchurExpansion) -> list:
    rows = sorted(((lam, c) for (lam, _), c in E.items()), reverse=True)
    return [{"lambda": list(lam), "coeff": str(c)} for lam, c in rows]


def _mults_json(m: dict) -> list:
    return [{"lambda": list(lam), "mult": c} for lam, c in sorted(m.items(), reverse=True)]


# -- subcommands ----------------------------------------------------------------------------


def _cmd_kclass(job: JobSpec) -> dict:
    out: dict = {}
    if job.uniform is not None and job.uniform[0] == 2 and job.r in (None, 2):
        E = k_uniform_rank2(job.uniform[1])
        engine = "closed-form-uniform-rank2"
    elif job.mu is not None:
        cfg = Rank2Config.from_mu(job.mu)
        E = k_rank2(cfg)
        engine = "demazure-rank2"
        if job.as_printed:
            printed = k_rank2_closed_form_as_printed(cfg)
            out["as_printed"] = printed.to_json()
            out["discrepancies"] = discrepancy_report(printed, E)
        if job.r not in (None, 2):
            E = k_class(cfg.matroid(), job.r)
    else:
        M = _matroid(job)
        engine = engine_for(M)
        if engine == "oracle":
            v = _matrix(job)
            if v is None:
                raise CliError("needs_matrix", "a component of rank > 2 needs a matrix for the Groebner oracle")
            if job.r not in (None, v.rows):
                raise CliError("bad_option", "--r must equal the matrix row count for the oracle")
            E = k_polynomial_of_quotient(iprime_generators(v), job.cap_steps)
            out["provenance"] = (
                "K-polynomial of R/I'_v; that I'_v = I_v here is conjectural"
                if not is_radical_case(v) else "K-polynomial of R/I'_v (I'_v = I_v known here)"
            )
        else:
            E = k_class(M, job.r)
    out.update({"r": E.r, "n": E.n, "engine": engine, "terms": E.to_json()})
    return out


def _cmd_cohom(job: JobSpec) -> dict:
    out: dict = {}
    if job.uniform is not None and job.uniform[0] >= 2 and job.uniform[1] > job.uniform[0]:
        r, n = job.uniform
        C = uniform_class_ut(r, n) if job.as_printed else uniform_class(r, n)
        out["grassmannian"] = [{"lambda": list(a), "lambda_tilde": list(b)} for a, b in uniform_class_grassmannian(r, n)]
        out["degree"] = degree_from_class(uniform_class(r, n))
        out["degree_as_printed"] = degree_uniform(r, n)
        if out["degree"] != out["degree_as_printed"]:
            out["deviation"] = "displayed (u, t) sum has terms with lambda_1 > n - r; reported class is its reduction"
        pt = random_point(n, random.Random(job.seed))
        out["point"] = [str(x) for x in pt]
        out["localizations"] = [
            {"B": list(B), "value": str(localize_grassmannian(r, n, B, pt, as_printed=job.as_printed))}
            for B in combinations(range(1, n + 1), r)
        ]
        if job.as_printed:
            out["convention"] = "displayed (u, t) sum; Q factor restricted without transpose (as printed)"
    else:
        M = _matroid(job)
        r = job.r if job.r is not None else M.rank
        if r != M.rank:
            raise CliError("bad_option", "the multidegree here needs r equal to the matroid rank")
        E = k_class(M, r)
        codim = codim_matrix_orbit(M, r)
        C = multidegree(E, codim)
        out["codim"] = codim
        out["degree"] = degree_from_class(C)
        if not M.loops():
            pt = random_point(M.n, random.Random(job.seed))
            out["point"] = [str(x) for x in pt]
            out["torus_orbit_localizations"] = [
                {"B": list(B), "value": str(localize_orbit_via_permutations(M, B, pt))}
                for B in M.bases_list()
            ]
    out.update({"r": C.r, "n": C.n, "terms": C.to_json()})
    return out


def _cmd_tensor(job: JobSpec) -> dict:
    M = _matroid(job)
    n = M.n
    beta = job.beta if job.beta is not None else (1,) * n
    if len(beta) != n:
        raise CliError("bad_option", f"beta has length {len(beta)}, expected {n}")
    out: dict = {"n": n, "beta": list(beta)}
    E = None
    if job.uniform is not None and job.uniform[0] == 2:
        E = k_uniform_rank2(n)
        if all(b == 1 for b in beta):
            out["formula"] = _character_json(char_uniform_rank2(n))
    elif M.rank <= 2 and engine_for(M) != "oracle" and (job.r in (None, 2)):
        E = k_class(M, 2)
        if job.mu is not None and all(b == 1 for b in beta):
            out["formula"] = _character_json(char_rank2(job.mu))
    if E is not None:
        H = hilbert_coefficient(E, beta)
        out["character"] = _character_json(H)
        out["dim"] = character_dimension(H)
    v = _matrix(job)
    if v is not None and all(b == 1 for b in beta) and n <= 7:
        mults = sn_multiplicities(schur_weyl_module(v))
        oracle = {"sn_multiplicities": _mults_json(mults), "gl_dim": gl_dimension(mults, v.rows)}
        if E is not None:
            oracle["agrees"] = {lam: c for (lam, _), c in hilbert_coefficient(E, beta).items()} == mults
        out["oracle"] = oracle
        if E is None:
            out["character"] = [{"lambda": x["lambda"], "coeff": str(x["mult"])}
                                for x in _mults_json(mults) if len(x["lambda"]) <= v.rows]
            out["dim"] = oracle["gl_dim"]
    if "character" not in out:
        raise CliError("unsupported", "no engine for this input: give a matrix with n <= 7")
    return out


def _cmd_matroid(job: JobSpec) -> dict:
    M = _matroid(job)
    T = tutte(M)
    out = {
        "matroid": M.to_json(),
        "tutte": str(T),
        "tutte_terms": [{"x": a, "y": b, "coeff": str(c)} for (a, b), c in sorted(T.terms.items(), reverse=True)],
        "nbc": [{"k": k, "count": nbc_bases_of_truncation(M, k)} for k in range(M.rank + 1)],
        "rank_partition": list(M.rank_partition()),
        "components": [list(c) for c in M.connected_components()],
        "loops": list(M.loops()),
        "coloops": list(M.coloops()),
    }
    if M.rank == 2 and not M.loops():
        out["parallelism_partition"] = list(M.parallelism_partition())
    if job.flag is not None:
        out["face"] = face_matroid(M, job.flag).to_json()
    return out


def _hooks_json(hooks: dict, job: JobSpec) -> list:
    rows = []
    for (beta, k), c in sorted(hooks.items()):
        if job.k is not None and k != job.k:
            continue
        if job.beta is not None and tuple(beta) != tuple(job.beta):
            continue
        rows.append({"beta": list(beta), "k": k, "coeff": str(c)})
    return rows


def _cmd_hooks(job: JobSpec) -> dict:
    M = _matroid(job)
    P = hook_enumerator_fakedep(M)
    out = {"fakedep": P.to_json(), "fakedep_text": str(P), "hooks": _hooks_json(hooks_from_enumerator(P, M.n), job)}
    if job.as_printed:
        D = dep_polynomial_as_printed(M)
        out["dep_as_printed"] = D.to_json()
        out["dep_as_printed_text"] = str(D)
        out["discrepancies"] = hook_discrepancy_report(M)
        printed = []
        for bits in range(1, 1 << M.n):
            beta = tuple((bits >> j) & 1 for j in range(M.n))
            for k in range(1, M.n + 1):
                c = hook_theorem_as_printed(M, k, beta)
                if c:
                    printed.append({"beta": list(beta), "k": k, "coeff": str(c)})
        out["hook_theorem_as_printed"] = printed
    return out


def _cmd_ideal(job: JobSpec) -> dict:
    v = _matrix(job)
    if v is None:
        raise CliError("needs_matrix", "ideal needs --matrix, --uniform or --mu")
    I = idoubleprime_generators(v) if job.double else iprime_generators(v)
    G = buchberger(I, job.cap_steps)
    K = k_polynomial_of_quotient(I, job.cap_steps)
    dim = dimension_of_quotient(I, job.cap_steps)
    return {
        "ideal": I.to_json(),
        "groebner_basis_size": len(G),
        "k_polynomial": K.to_json(),
        "dimension": dim,
        "codim": v.rows * v.cols - dim,
        "degree": degree_of_quotient(I, job.cap_steps),
        "squarefree_initial": is_squarefree_initial(I, job.cap_steps),
        "radicality_proven": is_radical_case(v),
    }


def _cmd_member(job: JobSpec) -> dict:
    return {"member": membership_test(job.w, job.v)}


def _cmd_verify(job: JobSpec) -> dict:
    return acceptance.run_all(job.seed, job.level)


def run(job: JobSpec) -> dict:
    job.validate()
    handler = {
        "kclass": _cmd_kclass, "cohom": _cmd_cohom, "tensor": _cmd_tensor, "matroid": _cmd_matroid,
        "hooks": _cmd_hooks, "ideal": _cmd_ideal, "member": _cmd_member, "verify": _cmd_verify,
    }[job.subcommand]
    return {"subcommand": job.subcommand, **handler(job)}


# -- argument parsing --------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliError("usage", message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matorbit", description="K-classes, cohomology classes and tensor characters of matrix orbit closures.")
    p.add_argument("subcommand", nargs="?", choices=SUBCOMMANDS)
    p.add_argument("--json-job", metavar="FILE", help="read the job from a JSON file")
    p.add_argument("--uniform", nargs=2, type=int, metavar=("R", "N"))
    p.add_argument("--mu", help="parallelism partition, e.g. 2,1,1")
    p.add_argument("--matrix", metavar="FILE")
    p.add_argument("--matroid", metavar="FILE")
    p.add_argument("--v", metavar="FILE")
    p.add_argument("--w", metavar="FILE")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--beta")
    p.add_argument("--k", type=int)
    p.add_argument("--flag", help="nested sets, e.g. '1,2;1,2,3'")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--level", default="full", choices=("fast", "full"))
    p.add_argument("--cap-steps", type=int, default=DEFAULT_CAP)
    p.add_argument("--as-printed", action="store_true")
    p.add_argument("--double", action="store_true", help="ideal: use I''_v instead of I'_v")
    return p


def job_from_dict(data: dict) -> JobSpec:
    known = {f.name for f in fields(JobSpec)}
    data = {k.replace("-", "_"): v for k, v in data.items()}
    extras = {k: v for k, v in data.items() if k not in known}
    if extras:
        raise CliError("bad_job", f"unknown job keys {sorted(extras)}")
    if "subcommand" not in data:
        raise CliError("bad_job", "job needs a subcommand")
    conv = dict(data)
    for key in ("uniform", "mu", "beta"):
        if conv.get(key) is not None:
            val = conv[key]
            conv[key] = _ints(val) if isinstance(val, str) else tuple(int(x) for x in val)
    for key in ("matrix", "v", "w"):
        if conv.get(key) is not None:
            val = conv[key]
            conv[key] = _matrix_from(_load_json(val) if isinstance(val, str) else val)
    if conv.get("matroid") is not None:
        val = conv["matroid"]
        conv["matroid"] = Matroid.from_json(_load_json(val) if isinstance(val, str) else val)
    if conv.get("flag") is not None and isinstance(conv["flag"], str):
        conv["flag"] = _flag(conv["flag"])
    return JobSpec(**conv)


def job_from_args(ns: argparse.Namespace) -> JobSpec:
    if ns.json_job:
        data = _load_json(ns.json_job)
        if not isinstance(data, dict):
            raise CliError("bad_job", "job file must hold a JSON object")
        if ns.subcommand and data.setdefault("subcommand", ns.subcommand) != ns.subcommand:
            raise CliError("bad_job", "subcommand on the command line disagrees with the job file")
        return job_from_dict(data)
    if not ns.subcommand:
        raise CliError("usage", "a subcommand is required")
    return job_from_dict({
        "subcommand": ns.subcommand,
        "uniform": ns.uniform, "mu": ns.mu, "matrix": ns.matrix, "matroid": ns.matroid,
        "v": ns.v, "w": ns.w, "r": ns.r, "n": ns.n, "beta": ns.beta, "k": ns.k, "flag": ns.flag,
        "seed": ns.seed, "level": ns.level, "cap_steps": ns.cap_steps,
        "as_printed": ns.as_printed, "double": ns.double,
    })


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if isinstance(o, (set, frozenset, tuple)):
        return list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        job = job_from_args(build_parser().parse_args(argv))
        doc = run(job)
    except ResourceLimit as exc:
        print(json.dumps({"code": "resource_limit", "message": str(exc)}))
        return 2
    except CliError as exc:
        print(json.dumps({"code": exc.code, "message": str(exc)}))
        return 1
    except (ValueError, NotImplementedError, ArithmeticError, KeyError, TypeError) as exc:
        print(json.dumps({"code": type(exc).__name__, "message": str(exc)}))
        return 1
    print(json.dumps(doc, default=_default))
    if job.subcommand == "verify" and not doc["passed"]:
        return 1
    return 0


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
