"""
Macro apply_theorem : applique un théorème A1 --> ... --> An --> C aux
prémisses ⊢ B1, ..., ⊢ Bk (k <= n) en filtrant Ai contre Bi.
"""
from typing import Any, Sequence, Tuple

from kernel.hol_type import TypeInstantiation
from kernel.matcher import first_order_match_list
from kernel.rules import ArgKind, TheoryEnv
from kernel.sequent import Sequent
from kernel.subst import InstantiationPair, subst_norm
from kernel.term import Term, TermInstantiation, list_implies, strip_implies

from .base import MacroError, ProofMacro


def _split_args(args: Any) -> Tuple[str, TypeInstantiation, TermInstantiation]:
    """Accepte « nom » ou (nom, (tyinst, inst))."""
    if isinstance(args, str):
        return args, {}, {}
    name, (tyinst, inst) = args
    return name, dict(tyinst), dict(inst)


class ApplyTheoremMacro(ProofMacro):
    """Applique un théorème aux prémisses par filtrage de ses hypothèses."""

    name = "apply_theorem"
    level = 1
    arg_kind = ArgKind.NAME_INST

    def _instantiate(self, thy: TheoryEnv, args: Any, props: Sequence[Term]) -> Tuple[Sequent, InstantiationPair]:
        name, tyinst, inst = _split_args(args)
        th = thy.get_theorem(name, schematic=True)
        assums, concl = strip_implies(th.prop)
        if len(props) > len(assums):
            raise MacroError(
                f"apply_theorem: {name} a {len(assums)} hypothèse(s), {len(props)} prémisse(s) fournie(s)"
            )
        instsp = first_order_match_list(assums[:len(props)], list(props), (tyinst, inst))
        return th, instsp

    def eval(self, thy, args, prevs):
        th, instsp = self._instantiate(thy, args, [p.prop for p in prevs])
        assums, concl = strip_implies(th.prop)
        k = len(prevs)
        for assum, prev in zip(assums, prevs):
            if subst_norm(assum, instsp) != prev.prop:
                raise MacroError("apply_theorem: hypothèse instanciée différente de la prémisse")
        hyps = set()
        for prev in prevs:
            hyps |= prev.hyps
        hyps |= {subst_norm(h, instsp) for h in th.hyps}
        return Sequent(frozenset(hyps), subst_norm(list_implies(assums[k:], concl), instsp))

    def get_proof_term(self, thy, args, prevs):
        from proof import proofterm as pt_

        name, _, _ = _split_args(args)
        _, (tyinst, inst) = self._instantiate(thy, args, [p.th.prop for p in prevs])
        pt = pt_.theorem(thy, name)
        pt = pt_.subst_type(tyinst, pt)
        pt = pt_.substitution(inst, pt)
        for prev in prevs:
            pt = pt_.implies_elim(pt, prev)
        return pt
