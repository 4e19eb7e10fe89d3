import argparse

from ..models import TransformConvention


def add_convention_args(parser: argparse.ArgumentParser) -> None:
    """Flags --a/--b da convenção (padrão a=0, b=-1)"""
    parser.add_argument("--a", type=float, default=0.0, help="expoente da convenção (padrão 0)")
    parser.add_argument("--b", type=float, default=-1.0, help="fator de frequência, != 0 (padrão -1)")


def convention_from_args(args: argparse.Namespace) -> TransformConvention:
    return TransformConvention(a=args.a, b=args.b)
