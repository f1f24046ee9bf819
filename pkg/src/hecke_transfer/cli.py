"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 failed check, 3 cost guard.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Sequence

from . import checks
from . import kottwitz as kt
from . import lefschetz as lf
from . import spectral as sp
from . import transfer as tr
from . import weights as wt
from .cyclotomic import TorusPointFiniteOrder
from .errors import CostGuardError
from .root_datum import (
    BasedRootDatum,
    DiagramAutomorphism,
    automorphism_from_permutation,
    from_cartan,
    preset,
    trivial_automorphism,
    weyl_group,
)

EXIT_OK, EXIT_USAGE, EXIT_CHECK, EXIT_GUARD = 0, 1, 2, 3


@dataclass
class GroupSpec:
    datum: BasedRootDatum
    theta: DiagramAutomorphism
    tori: dict[str, tr.TorusType]

    @classmethod
    def from_dict(cls, spec: dict) -> GroupSpec:
        if "cartan" in spec:
            D = from_cartan(spec["cartan"], spec.get("lattice", "sc"), spec.get("name", ""))
        elif "family" in spec:
            D = preset(spec["family"], int(spec["rank"]))
        elif "type" in spec:
            D = preset(spec["type"], int(spec["rank"]), spec.get("lattice", "sc"))
        else:
            raise ValueError("group spec needs 'family', 'type' or 'cartan'")
        if "automorphism" in spec:
            theta = automorphism_from_permutation(D, spec["automorphism"], spec.get("central"))
        else:
            theta = trivial_automorphism(D)
        tori = {}
        for word in spec.get("tori", []):
            t = tr.torus_type(D, tr.parse_weyl_word(word), theta, name=word)
            tori[t.name] = t
        return cls(D, theta, tori)

    @classmethod
    def load(cls, ref: str) -> GroupSpec:
        """A path, an inline JSON object, or the name of a bundled file."""
        ref = ref.strip()
        if ref.startswith("{"):
            return cls.from_dict(json.loads(ref))
        path = Path(ref)
        if path.exists():
            return cls.from_dict(json.loads(path.read_text()))
        name = ref if ref.endswith(".json") else f"{ref}.json"
        bundled = resources.files("hecke_transfer") / "data" / Path(name).name
        if bundled.is_file():
            return cls.from_dict(json.loads(bundled.read_text()))
        raise ValueError(f"cannot find group spec {ref!r}")

    def torus(self, word: str) -> tr.TorusType:
        if word in self.tori:
            return self.tori[word]
        return tr.torus_type(self.datum, tr.parse_weyl_word(word), self.theta, name=word)


def _vec(text: str, rational: bool = False) -> tuple:
    try:
        data = json.loads(text)
    except json.JSONDecodeError:
        data = [x for x in text.strip("[] ").split(",") if x.strip()]
    if not isinstance(data, list):
        raise ValueError(f"expected a JSON array, got {text!r}")
    if rational:
        return tuple(Fraction(str(x)) for x in data)
    return tuple(int(x) for x in data)


def _json_arg(text: str):
    path = Path(text)
    if not text.lstrip().startswith(("{", "[")) and path.exists():
        return json.loads(path.read_text())
    return json.loads(text)


def _q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# Commands; each returns (payload, tsv rows or None, exit code)


def cmd_describe(g: GroupSpec, args):
    D = g.datum
    grp, _ = kt.pi1(D)
    out = {
        "name": D.name,
        "rank": D.rank,
        "basis": list(D.cochar_basis_labels),
        "simple_roots": [list(a) for a in D.simple_roots],
        "simple_coroots": [list(a) for a in D.simple_coroots],
        "cartan": [list(r) for r in D.cartan],
        "positive_coroots": [list(a) for a in D.positive_coroots],
        "two_rho": list(D.two_rho),
        "two_rho_check": list(D.two_rho_check),
        "pi1": grp.to_json(),
        "pi1_coinvariants": kt.pi1_coinvariants(D, g.theta).target.to_json(),
        "automorphism": list(g.theta.perm),
    }
    try:
        out["weyl_order"] = len(weyl_group(D))
    except CostGuardError:
        out["weyl_order"] = None
    out["tori"] = {name: {"elliptic": tr.is_elliptic(D, t), "coinvariants": t.coinvariant_group.to_json()}
                   for name, t in sorted(g.tori.items())}
    return out, None, EXIT_OK


def cmd_weights(g, args):
    m = wt.weight_multiplicities(g.datum, _vec(args.mu))
    rows = [[json.dumps(list(k)), str(v)] for k, v in m.items()]
    return {"mu": list(_vec(args.mu)), "weights": m.to_json(), "mass": m.mass}, rows, EXIT_OK


def cmd_dim(g, args):
    d = wt.weyl_dim(g.datum, _vec(args.mu))
    return {"mu": list(_vec(args.mu)), "dim": d}, [[str(d)]], EXIT_OK


def cmd_classify(g, args):
    c = wt.classify_minimal(g.datum, _vec(args.mu))
    out = {"mu": list(_vec(args.mu)), "kind": c.kind, "gamma": list(c.gamma) if c.gamma else None}
    return out, [[c.kind, json.dumps(out["gamma"])]], EXIT_OK


def cmd_tensor(g, args):
    dec = wt.tensor_decompose(g.datum, _vec(args.mu), _vec(args.nu))
    items = [{"highest_weight": list(k), "mult": v, "dim": wt.weyl_dim(g.datum, k)} for k, v in sorted(dec.items())]
    rows = [[json.dumps(r["highest_weight"]), str(r["mult"]), str(r["dim"])] for r in items]
    return {"mu": list(_vec(args.mu)), "nu": list(_vec(args.nu)), "summands": items}, rows, EXIT_OK


def cmd_char(g, args):
    s = TorusPointFiniteOrder(args.order, _vec(args.point, rational=True))
    val = wt.character_eval(g.datum, _vec(args.mu), s)
    out = {"mu": list(_vec(args.mu)), "value": val.to_json()}
    if args.oracle:
        out["oracle"] = wt.weyl_character_oracle(g.datum, _vec(args.mu), s).to_json()
    return out, [[str(val)]], EXIT_OK


def cmd_pi1(g, args):
    grp, _ = kt.pi1(g.datum)
    co = kt.pi1_coinvariants(g.datum, g.theta).target
    return {"pi1": grp.to_json(), "pi1_coinvariants": co.to_json()}, [[str(grp), str(co)]], EXIT_OK


def cmd_kappa(g, args):
    mu = _vec(args.mu)
    c = kt.basic_class_of(g.datum, g.theta, mu)
    out = {"mu": list(mu), "basic_class": c.to_json()}
    if args.lam:
        out["modified"] = list(kt.kappa_modification(g.datum, g.theta, c.value, _vec(args.lam)))
    return out, [[json.dumps(list(c.value))]], EXIT_OK


def cmd_sign(g, args):
    if args.nu:
        e = kt.kottwitz_sign(g.datum, _vec(args.nu, rational=True))
        return {"nu": [_q(x) for x in _vec(args.nu, rational=True)], "sign": e}, [[str(e)]], EXIT_OK
    lhs, rhs = kt.sign_identity(g.datum, _vec(args.mu, rational=True))
    out = {"mu": [_q(x) for x in _vec(args.mu, rational=True)], "lhs": lhs, "rhs": rhs, "ok": lhs == rhs}
    return out, [[str(lhs), str(rhs)]], EXIT_OK


def cmd_dimension(g, args):
    d = kt.shtuka_dimension(g.datum, _vec(args.mu))
    return {"mu": list(_vec(args.mu)), "dimension": d}, [[str(d)]], EXIT_OK


def cmd_kernel(g, args):
    t = g.torus(args.torus)
    c = _vec(args.kappa) if args.kappa else None
    k = tr.transfer_kernel(g.datum, g.theta, _vec(args.mu), t, c if c is not None else kt.basic_class_of(g.datum, g.theta, _vec(args.mu)))
    out = k.to_json()
    out.update({"mu": list(_vec(args.mu)), "elliptic": tr.is_elliptic(g.datum, t), "mass": k.mass})
    rows = [[json.dumps(list(nu)), str(m)] for nu, m in k.values]
    return out, rows, EXIT_OK


def cmd_transfer(g, args):
    tori = dict(g.tori)
    f = tr.ClassFunction.from_json(_json_arg(args.fn), "G" if args.direction == "GtoJ" else "J")
    for pt in f:
        if pt.torus not in tori:
            tori[pt.torus] = g.torus(pt.torus)
    model = tr.HeckeTransfer(g.datum, g.theta, _vec(args.mu), tori, elliptic_only=args.elliptic_only)
    res = model.G_to_J(f) if args.direction == "GtoJ" else model.J_to_G(f)
    rows = [[r["torus"], r["label"], json.dumps(r.get("nu")), r["value"]] for r in res.to_json()]
    return {"direction": args.direction, "result": res.to_json()}, rows, EXIT_OK


def cmd_euler(g, args):
    nodes = [int(x) - 1 for x in args.parabolic.split(",") if x.strip()] if args.parabolic else []
    chi = lf.flag_euler_characteristic(g.datum, lf.ParabolicType(nodes))
    return {"parabolic": [i + 1 for i in nodes], "euler_characteristic": chi}, [[str(chi)]], EXIT_OK


def cmd_lefschetz(g, args):
    rep = lf.lefschetz_global_check(g.datum, _vec(args.mu))
    rows = [[json.dumps(list(lam)), str(t)] for lam, t in rep.terms]
    return rep.to_json(), rows, EXIT_OK if rep.ok else EXIT_CHECK


def cmd_convolve_fp(g, args):
    rep = lf.convolution_fixed_points(g.datum, _vec(args.mu1), _vec(args.mu2))
    rows = [[json.dumps(list(lam)), str(t)] for lam, t in rep.terms]
    return rep.to_json(), rows, EXIT_OK if rep.ok else EXIT_CHECK


def cmd_hom(g, args):
    S = sp.AbelianCentralizer.from_json(_json_arg(args.centralizer))
    delta = _vec(args.delta)
    h = sp.hom_multiplicity(g.datum, _vec(args.mu), S, delta)
    out = {"mu": list(_vec(args.mu)), "delta": list(delta), "hom": h}
    if args.average:
        out["averaged"] = _q(sp.averaging_multiplicity(g.datum, _vec(args.mu), S, delta))
    return out, [[str(h)]], EXIT_OK


def cmd_rhs(g, args):
    S = sp.AbelianCentralizer.from_json(_json_arg(args.centralizer))
    packet = sp.PacketDatum.from_json(_json_arg(args.packet))
    vals = sp.kottwitz_rhs(g.datum, _vec(args.mu), S, packet, _vec(args.delta_rho))
    return {"mu": list(_vec(args.mu)), "rhs": vals}, [[k, str(v)] for k, v in vals.items()], EXIT_OK


def cmd_check(g, args):
    report = checks.run_suite(args.suite, args.seed)
    rows = [[r.id, "pass" if r.passed else "fail"] for r in report.results]
    return report.to_json(), rows, EXIT_OK if report.passed else EXIT_CHECK


COMMANDS = {
    "describe": cmd_describe, "weights": cmd_weights, "dim": cmd_dim, "classify": cmd_classify,
    "tensor": cmd_tensor, "char": cmd_char, "pi1": cmd_pi1, "kappa": cmd_kappa, "sign": cmd_sign,
    "dimension": cmd_dimension, "kernel": cmd_kernel, "transfer": cmd_transfer, "euler": cmd_euler,
    "lefschetz": cmd_lefschetz, "convolve-fp": cmd_convolve_fp, "hom": cmd_hom, "rhs": cmd_rhs,
    "check": cmd_check,
    "check-spectral": cmd_check,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="group spec: path, inline JSON or bundled name (gl2, gl3, sl2, sp4, g2, a2sc, a1, u3)")
    common.add_argument("--format", choices=["json", "tsv"], default="json")
    common.add_argument("--seed", type=int, default=0)

    parser = _Parser(prog="hecke-transfer", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_, *opts):
        p = sub.add_parser(name, parents=[common], help=help_)
        for flag, kw in opts:
            p.add_argument(flag, **kw)
        return p

    mu = ("--mu", {"required": True, "help": "cocharacter as a JSON array"})
    add("describe", "summarize the root datum")
    add("weights", "weight multiplicities of r_mu", mu)
    add("dim", "dimension of r_mu", mu)
    add("classify", "minuscule / quasi-minuscule test", mu)
    add("tensor", "decompose r_mu (x) r_nu", mu, ("--nu", {"required": True}))
    add("char", "tr r_mu(s) at a finite-order point", mu, ("--order", {"type": int, "required": True}),
        ("--point", {"required": True, "help": "rational exponents, e.g. '[\"1/2\", 0]'"}),
        ("--oracle", {"action": "store_true", "help": "also evaluate the Weyl character formula"}))
    add("pi1", "pi_1(G) and its coinvariants")
    add("kappa", "kappa of the basic class in B(G, mu)", mu, ("--lam", {"help": "modify by this cocharacter"}))
    add("sign", "Kottwitz sign of a lift, or the sign identity for mu",
        ("--nu", {"help": "lift in X_* (x) Q"}), ("--mu", {"help": "cocharacter for the sign identity"}))
    add("dimension", "<2 rho, mu>", mu)
    add("kernel", "transfer kernel of a torus type", mu, ("--torus", {"required": True, "help": "Weyl word, e.g. s1s2"}),
        ("--kappa", {"help": "kappa(b) in pi_1(G)_Gamma; default the basic class of mu"}))
    add("transfer", "apply T_{b,mu}", mu, ("--direction", {"choices": ["GtoJ", "JtoG"], "required": True}),
        ("--fn", {"required": True, "help": "class function JSON (file or inline)"}),
        ("--elliptic-only", {"action": "store_true"}))
    add("euler", "Euler characteristic of G/P", ("--parabolic", {"default": "", "help": "Levi nodes, 1-indexed, e.g. 1,3"}))
    add("lefschetz", "fixed points and local terms on Gr_{<=mu}", mu)
    add("convolve-fp", "fixed points of a convolution", ("--mu1", {"required": True}), ("--mu2", {"required": True}))
    add("hom", "dim Hom_S(delta, r_mu)", mu, ("--centralizer", {"required": True}), ("--delta", {"required": True}),
        ("--average", {"action": "store_true", "help": "also compute by character averaging"}))
    add("rhs", "signed multiplicities (-1)^d dim Hom(delta_{pi,rho}, r_mu)", mu, ("--centralizer", {"required": True}),
        ("--packet", {"required": True}), ("--delta-rho", {"required": True}))
    add("check", "run identity suites", ("--suite", {"default": "all", "choices": ["all", *checks.SUITES]}))
    add("check-spectral", "run the spectral suite").set_defaults(suite="spectral")
    return parser


def _emit(payload, rows, fmt: str, out):
    if fmt == "tsv" and rows is not None:
        for row in rows:
            out.write("\t".join(row) + "\n")
    else:
        out.write(json.dumps(payload, sort_keys=True, indent=2, default=_default) + "\n")


def _default(x):
    if isinstance(x, Fraction):
        return _q(x)
    if isinstance(x, tuple):
        return list(x)
    if isinstance(x, (set, frozenset)):
        return sorted(x)
    raise TypeError(f"not serializable: {x!r}")


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "sign" and not (args.nu or args.mu):
            parser.error("sign needs --nu or --mu")
        group = GroupSpec.load(args.group) if args.group else None
        if group is None and args.command != "check":
            parser.error(f"{args.command} needs --group")
        payload, rows, code = COMMANDS[args.command](group, args)
    except CostGuardError as exc:
        print(f"cost guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ValueError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(payload, rows, args.format, out)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
