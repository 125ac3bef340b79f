"""End-to-end torsion pipeline: validation, det of the Fox matrix, the
evaluation-identity and augmentation/order checks, and presentation moves.

The determinant is computed unconditionally; its interpretation as the
torsion invariant relies on irreducibility and connectedness hypotheses the
user asserts via the claimed_irreducible flag.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Sequence, Tuple

from . import words as W
from .abelian import (
    AbElement,
    AbelianGroup,
    Cokernel,
    INFINITE,
    Projection,
    abelianize,
    order,
    quotient,
    word_image,
)
from .fox import fox_matrix
from .groupring import (
    GroupRingElement,
    augmentation,
    map_terms,
    normalize,
    push_forward,
    sim_equal,
    sum_of_all_elements,
)
from . import groupring as GR
from .words import Generator, Word


@dataclass(frozen=True)
class SuturedInput:
    alphabet: Tuple[Generator, ...]
    relators: Tuple[Word, ...]
    rminus: Tuple[Word, ...]
    name: Optional[str] = None
    notes: Optional[str] = None
    claimed_irreducible: bool = True


@dataclass(frozen=True)
class Diagnostic:
    code: str
    message: str
    blocking: bool
    repaired: Optional["SuturedInput"] = None


class ValidationError(ValueError):
    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(f"{d.code}: {d.message}" for d in diagnostics))


def validate(inp: SuturedInput) -> List[Diagnostic]:
    out: List[Diagnostic] = []
    names = [g.name for g in inp.alphabet]
    if len(set(names)) != len(names):
        out.append(Diagnostic("DUPLICATE_GENERATOR", "generator names are not distinct", True))
    if not inp.rminus:
        out.append(Diagnostic("EMPTY_RMINUS", "rminus word list is empty", True))
    m, n, l = len(inp.alphabet), len(inp.relators), len(inp.rminus)
    if m != n + l:
        out.append(Diagnostic(
            "SQUARENESS",
            f"matrix is not square: {m} generators != {n} relators + {l} rminus words",
            True,
        ))
    unreduced = [
        w for w in list(inp.relators) + list(inp.rminus) if not W.is_reduced(w.letters)
    ]
    if unreduced:
        repaired = replace(
            inp,
            relators=tuple(W.free_reduce(w.letters) for w in inp.relators),
            rminus=tuple(W.free_reduce(w.letters) for w in inp.rminus),
        )
        out.append(Diagnostic(
            "REDUCTION",
            f"{len(unreduced)} word(s) are not freely reduced",
            False,
            repaired,
        ))
    return out


@dataclass(frozen=True)
class TorsionResult:
    H: AbelianGroup
    gen_map: Tuple[AbElement, ...]
    tau: GroupRingElement
    raw_det: GroupRingElement
    abelianization: Cokernel
    input: SuturedInput


def torsion(inp: SuturedInput) -> TorsionResult:
    diags = validate(inp)
    blocking = [d for d in diags if d.blocking]
    if blocking:
        raise ValidationError(blocking)
    for d in diags:
        if d.code == "REDUCTION" and d.repaired is not None:
            inp = d.repaired
    ab = abelianize(inp.alphabet, inp.relators)
    A = fox_matrix(inp.alphabet, list(inp.relators) + list(inp.rminus), ab)
    raw = GR.determinant(A)
    return TorsionResult(ab.group, ab.gen_images, normalize(raw), raw, ab, inp)


@dataclass(frozen=True)
class EvalCheck:
    G: AbelianGroup
    lhs: GroupRingElement
    rhs: GroupRingElement
    passed: bool


def rminus_quotient(result: TorsionResult) -> Projection:
    images = [word_image(result.abelianization, w) for w in result.input.rminus]
    return quotient(result.H, images)


def evaluation_check(inp: SuturedInput, result: TorsionResult) -> EvalCheck:
    """p_*(tau) must equal +-I_G for G = H_1(M, R_-)."""
    proj = rminus_quotient(result)
    lhs = push_forward(result.raw_det, proj)
    rhs = sum_of_all_elements(proj.target)
    return EvalCheck(proj.target, lhs, rhs, sim_equal(lhs, rhs))


@dataclass(frozen=True)
class AugOrderCheck:
    aug: int
    ord: object  # int or INFINITE
    passed: bool


def augmentation_order_check(inp: SuturedInput, result: TorsionResult) -> AugOrderCheck:
    """|eps(tau)| must equal |G|, with |G| = 0 read as INFINITE."""
    proj = rminus_quotient(result)
    aug = abs(augmentation(result.raw_det))
    o = order(proj.target)
    passed = (aug == 0) if o is INFINITE else (aug == o)
    return AugOrderCheck(aug, o, passed)


def nielsen_invert(inp: SuturedInput, k: int) -> SuturedInput:
    rm = list(inp.rminus)
    rm[k] = W.invert(rm[k])
    return replace(inp, rminus=tuple(rm))


def nielsen_multiply(inp: SuturedInput, k: int, k2: int) -> SuturedInput:
    if k == k2:
        raise ValueError("multiply move needs distinct indices")
    rm = list(inp.rminus)
    rm[k] = W.concat(rm[k], rm[k2])
    return replace(inp, rminus=tuple(rm))


def nielsen_move(inp: SuturedInput, move: Tuple) -> SuturedInput:
    """move = ("invert", k) or ("multiply", k, k2); indices are 0-based."""
    kind = move[0]
    if kind == "invert":
        return nielsen_invert(inp, move[1])
    if kind == "multiply":
        return nielsen_multiply(inp, move[1], move[2])
    raise ValueError(f"unknown Nielsen move {kind!r}")


def tietze_add_generator(inp: SuturedInput, w: Word, name: Optional[str] = None) -> SuturedInput:
    """Append a fresh generator g and the relator g * w^-1."""
    existing = {g.name for g in inp.alphabet}
    if name is None:
        base = "g"
        name = base
        i = 1
        while name in existing:
            i += 1
            name = f"{base}{i}"
    elif name in existing:
        raise ValueError(f"generator name {name!r} already in use")
    new_idx = len(inp.alphabet)
    alphabet = inp.alphabet + (Generator(name, new_idx),)
    relator = W.concat(W.Word(((new_idx, 1),)), W.invert(w))
    return replace(inp, alphabet=alphabet, relators=inp.relators + (relator,))


def induced_hom(old: TorsionResult, new: TorsionResult) -> Callable[[AbElement], AbElement]:
    """The canonical map H_old -> H_new for presentations sharing their first
    generators (e.g. after a Tietze extension): lift to exponent vectors over
    the old generators, then map through the new abelianization."""
    old_ab, new_ab = old.abelianization, new.abelianization

    def hom(x: AbElement) -> AbElement:
        v = old_ab.lift(x)
        return new_ab.from_vector(v + (0,) * (len(new_ab.gen_images) - len(v)))

    return hom


def transport_tau(old: TorsionResult, new: TorsionResult) -> GroupRingElement:
    """old raw determinant pushed into the new H via the canonical map."""
    return map_terms(old.raw_det, induced_hom(old, new), new.H)


# ---------------------------------------------------------------------------
# JSON interface

def input_to_dict(inp: SuturedInput) -> dict:
    d = {
        "generators": [g.name for g in inp.alphabet],
        "relators": [W.render(w, inp.alphabet) for w in inp.relators],
        "rminus": [W.render(w, inp.alphabet) for w in inp.rminus],
    }
    if inp.name is not None:
        d["name"] = inp.name
    if inp.notes is not None:
        d["notes"] = inp.notes
    d["claimed_irreducible"] = inp.claimed_irreducible
    return d


def input_from_dict(d: dict) -> SuturedInput:
    alphabet = W.make_alphabet(d["generators"])
    return SuturedInput(
        alphabet=alphabet,
        relators=tuple(W.parse_word(s, alphabet) for s in d.get("relators", [])),
        rminus=tuple(W.parse_word(s, alphabet) for s in d.get("rminus", [])),
        name=d.get("name"),
        notes=d.get("notes"),
        claimed_irreducible=bool(d.get("claimed_irreducible", True)),
    )


def load_input(path: str) -> SuturedInput:
    with open(path, "r", encoding="utf-8") as fh:
        return input_from_dict(json.load(fh))


def dump_input(inp: SuturedInput, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(input_to_dict(inp), fh, indent=2, sort_keys=True)
        fh.write("\n")
