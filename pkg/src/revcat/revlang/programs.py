"""Bundled example programs."""
from __future__ import annotations

from .parser import parse_program
from .syntax import Program

SWAP = """\
fun swap (a, b) = (b, a)
"""

ADD = """\
-- (x, y) to (x, x + y)
fun add (Z, y) = (Z, y)
fun add (S x, y) = let (x2, y2) = add (x, y) in (S x2, S y2)
"""

MAP = """\
fun inc x = S x
fun map<g> Nil = Nil
fun map<g> (Cons x xs) = let y = g x in let ys = map<g> xs in Cons y ys
"""

BUNDLED = {"swap": SWAP, "add": ADD, "map": MAP}


def bundled_source(name: str) -> str:
    return BUNDLED[name]


def bundled_program(name: str) -> Program:
    return parse_program(BUNDLED[name])
