"""Batch command line front end.

Every subcommand reads QMAT files, runs one library operation and writes
QMAT text to stdout or ``-o PATH``. Exit status: 0 success, 1 invalid input
or usage, 2 numerical failure (singular matrix, no convergence, ...).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import adjoint as adj
from . import qdft as qft
from . import spectral, subspaces, tensor, widely_linear
from .errors import NumericalError, ParseError, QuaternionError
from .io import format_complex_qmat, format_qmat, parse_qmat
from .qmat import ProductOrder, QuatMatrix, TripleOrder, mul, triple_product
from .quaternion import (I, J, PureUnitQuaternion, format_float, modulus, orthogonal_complement,
                         parse_quaternion)

AXIS_SNAP = 1e-6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def parse_axis(text: str) -> PureUnitQuaternion:
    q = parse_quaternion(text)
    if q.w != 0.0:
        raise ParseError(f"axis {text!r} must be a pure quaternion")
    r = modulus(q)
    if abs(r - 1.0) >= AXIS_SNAP:
        raise ParseError(f"axis {text!r} has modulus {r:.9g}, expected 1")
    if r != 1.0:
        print(f"warning: axis {text} renormalised (modulus {r:.17g})", file=sys.stderr)
    return PureUnitQuaternion.from_quaternion(q)


def _axis_arg(text: str) -> PureUnitQuaternion:
    try:
        return parse_axis(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load(path: str) -> QuatMatrix:
    p = Path(path)
    try:
        if p.suffix == ".npy":
            return QuatMatrix(np.load(p))
        text = p.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    try:
        return parse_qmat(text)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _axes(args):
    mu = args.mu if args.mu is not None else I
    mu_perp = args.mu_perp if args.mu_perp is not None else orthogonal_complement(mu)
    return mu, mu_perp


# -- subcommands -------------------------------------------------------------


def _cmd_mul(args):
    return format_qmat(mul(_load(args.a), _load(args.b), ProductOrder(args.order)))


def _cmd_triple(args):
    return format_qmat(triple_product(_load(args.a), _load(args.b), _load(args.c), TripleOrder(args.order)))


def _cmd_inv(args):
    mu, mu_perp = _axes(args)
    f = adj.inv_left if args.side == "left" else adj.inv_right
    return format_qmat(f(_load(args.a), mu, mu_perp))


def _cmd_adjoint(args):
    mu, mu_perp = _axes(args)
    chi = adj.adjoint(_load(args.a), adj.AdjointSide(args.side), mu, mu_perp)
    return format_complex_qmat(chi)


def _cmd_subspace(args):
    mu, mu_perp = _axes(args)
    b = subspaces.basis(_load(args.a), subspaces.SubspaceKind(args.kind), args.tol, mu, mu_perp)
    header = f"{b.kind.value} dimension {b.dimension}\nclosed under {b.scalar_side.value} scalars"
    if b.dimension == 0:
        return "".join(f"# {line}\n" for line in header.splitlines())
    return format_qmat(b.matrix(), header)


def _cmd_rank(args):
    f = subspaces.rank_left if args.side == "left" else subspaces.rank_right
    return f"{f(_load(args.a), args.tol)}\n"


def _cmd_kron(args):
    return format_qmat(tensor.kron(_load(args.a), _load(args.b), ProductOrder(args.side)))


def _cmd_khatri_rao(args):
    return format_qmat(tensor.khatri_rao(_load(args.a), _load(args.b), ProductOrder(args.side)))


VEC_IDENTITIES = [f"{fam}-{form.value}" for fam in ("kron", "kr") for form in tensor.VecForm]


def _cmd_vec_check(args):
    family, form = args.identity.split("-", 1)
    a, b, c = _load(args.a), _load(args.b), _load(args.c)
    f = tensor.vec_identity_kron if family == "kron" else tensor.vec_identity_kr
    lhs, rhs = f(a, b, c, tensor.VecForm(form))
    return f"residual {format_float((lhs - rhs).norm())}\n"


def _cmd_widely_linear(args):
    mu = args.mu if args.mu is not None else I
    system = widely_linear.WidelyLinearSystem(_load(args.a), _load(args.b), _load(args.c), mu)
    return format_qmat(widely_linear.solve(system, args.mu_perp))


def _cmd_eig(args):
    if args.side != "right":
        raise ParseError("only right eigendecompositions can be computed; use eig-verify for left pairs")
    d = spectral.right_eig(_load(args.a))
    values = QuatMatrix.from_rows([[lam] for lam in d.eigenvalues])
    return format_qmat(values, "standard eigenvalues") + format_qmat(d.q, "right eigenvectors (columns)")


def _cmd_eig_verify(args):
    a, q = _load(args.a), _load(args.q)
    lam = parse_quaternion(args.lam)
    f = spectral.verify_right_pair if args.side == "right" else spectral.verify_left_pair
    ok = f(a, q, lam, args.tol if args.tol is not None else 1e-8)
    return f"{'true' if ok else 'false'}\n"


def _cmd_qdft(args, inverse=False):
    f = qft.idqft if inverse else qft.dqft
    mu1 = args.mu1 if args.mu1 is not None else I
    mu2 = args.mu2 if args.mu2 is not None else J
    return format_qmat(f(_load(args.a), qft.QdftKind(args.kind), mu1, mu2))


def _cmd_convert(args):
    a = _load(args.a)
    if args.output and Path(args.output).suffix == ".npy":
        np.save(args.output, a.data)
        return None
    return format_qmat(a)


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qlinalg", description="Quaternion linear algebra batch tool")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, inputs, help_text):
        p = sub.add_parser(name, help=help_text)
        for n in inputs:
            p.add_argument(n, metavar=n.upper() + ".qm")
        p.add_argument("-o", "--output", metavar="PATH")
        p.set_defaults(func=func)
        return p

    def axes(p):
        p.add_argument("--mu", type=_axis_arg)
        p.add_argument("--mu-perp", type=_axis_arg)

    sides = ["left", "right"]
    command("mul", _cmd_mul, ["a", "b"], "ordered product A ·L B or A ·R B") \
        .add_argument("--order", choices=sides, required=True)
    command("triple", _cmd_triple, ["a", "b", "c"], "three-matrix product") \
        .add_argument("--order", choices=[o.value for o in TripleOrder], required=True)
    p = command("inv", _cmd_inv, ["a"], "left or right inverse")
    p.add_argument("--side", choices=sides, required=True)
    axes(p)
    p = command("adjoint", _cmd_adjoint, ["a"], "complex adjoint matrix")
    p.add_argument("--side", choices=sides, required=True)
    axes(p)
    p = command("subspace", _cmd_subspace, ["a"], "basis of a fundamental subspace")
    p.add_argument("--kind", choices=[k.value for k in subspaces.SubspaceKind], required=True)
    p.add_argument("--tol", type=float)
    axes(p)
    p = command("rank", _cmd_rank, ["a"], "left or right rank")
    p.add_argument("--side", choices=sides, required=True)
    p.add_argument("--tol", type=float)
    command("kron", _cmd_kron, ["a", "b"], "Kronecker product") \
        .add_argument("--side", choices=sides, required=True)
    command("khatri-rao", _cmd_khatri_rao, ["a", "b"], "Khatri-Rao product") \
        .add_argument("--side", choices=sides, required=True)
    command("vec-check", _cmd_vec_check, ["a", "b", "c"], "residual of a vec identity") \
        .add_argument("--identity", choices=VEC_IDENTITIES, required=True)
    p = command("solve-widely-linear", _cmd_widely_linear, ["a", "b", "c"],
                "solve A X + B conj(X) = C")
    axes(p)
    command("eig", _cmd_eig, ["a"], "right eigendecomposition") \
        .add_argument("--side", choices=sides, default="right")
    p = command("eig-verify", _cmd_eig_verify, ["a", "q"], "check an eigenpair")
    p.add_argument("--side", choices=sides, required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--tol", type=float)
    for name, inverse in (("qdft", False), ("iqdft", True)):
        p = command(name, lambda args, inv=inverse: _cmd_qdft(args, inv), ["a"],
                    ("inverse " if inverse else "") + "quaternion Fourier transform")
        p.add_argument("--kind", type=int, choices=[1, 2, 3], default=1)
        p.add_argument("--mu1", type=_axis_arg)
        p.add_argument("--mu2", type=_axis_arg)
    command("convert", _cmd_convert, ["a"], "rewrite a matrix as QMAT (or .npy with -o x.npy)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text = args.func(args)
        if text is not None:
            if args.output:
                Path(args.output).write_text(text, encoding="utf-8")
            else:
                sys.stdout.write(text)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 2
    except (QuaternionError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
