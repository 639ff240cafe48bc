"""
Tests des conversions et de leurs combinateurs.
"""
import pytest

from config import Config, CheckerConfig, set_config
from conv import (
    BudgetExceeded, ConversionError, NotAnEquation, ShapeMismatch, abs_conv, all_conv, arg_conv,
    beta_conv, binop_conv, every_conv, first_conv, fun_conv, repeat_conv, rewr_conv, rhs_of, sub_conv,
    then_conv, top_conv, try_conv,
)
from kernel.errors import MatchFailure
from kernel.hol_type import NatType
from kernel.term import Abs, Bound, Var
from macros.base import TrustPolicy
from macros.numerals import mk_plus
from proof import check_proof_term


def check(thy, root):
    """La preuve produite par une conversion se vérifie et prouve le même séquent."""
    assert check_proof_term(root, thy, TrustPolicy(0)).conclusion == root.th
    return root.th


class TestBasicConversions:
    def test_all_conv(self, nat_thy, term, seq):
        assert all_conv().eval(nat_thy, term("x + 0")) == seq("|- x + 0 = x + 0")

    def test_beta_conv(self, nat_thy, term, seq):
        assert beta_conv().eval(nat_thy, term("(%n::nat. n + 1) x")) == seq("|- (%n::nat. n + 1) x = x + 1")

    def test_beta_conv_shape(self, nat_thy, term):
        with pytest.raises(ShapeMismatch):
            beta_conv()(nat_thy, term("x"))

    def test_rewr_conv(self, nat_thy, term, seq):
        root = rewr_conv("add_0_right")(nat_thy, term("x + 0"))
        assert check(nat_thy, root) == seq("|- x + 0 = x")

    def test_rewr_conv_sym(self, nat_thy, term, seq):
        root = rewr_conv("add_0_right", sym=True)(nat_thy, term("x"))
        assert check(nat_thy, root) == seq("|- x = x + 0")

    def test_rewr_conv_no_match(self, nat_thy, term):
        with pytest.raises(MatchFailure):
            rewr_conv("add_0_right")(nat_thy, term("x + 1"))

    def test_rewr_conv_not_an_equation(self, nat_thy, term):
        with pytest.raises(NotAnEquation):
            rewr_conv("conjI")(nat_thy, term("A"))

    def test_rhs_of(self, nat_thy, term):
        assert rhs_of(rewr_conv("add_comm")(nat_thy, term("x + y"))) == term("y + x")


class TestCombinators:
    def test_then_conv(self, nat_thy, term, seq):
        cv = then_conv(rewr_conv("add_comm"), rewr_conv("add_0_left"))
        assert check(nat_thy, cv(nat_thy, term("x + 0"))) == seq("|- x + 0 = x")

    def test_then_conv_failure(self, nat_thy, term):
        with pytest.raises(MatchFailure):
            then_conv(rewr_conv("add_0_right"), rewr_conv("mult_1_left"))(nat_thy, term("x + 0"))

    def test_every_conv(self, nat_thy, term, seq):
        cv = every_conv(rewr_conv("mult_comm"), rewr_conv("mult_1_left"))
        assert check(nat_thy, cv(nat_thy, term("x * 1"))) == seq("|- x * 1 = x")

    def test_first_conv(self, nat_thy, term, seq):
        cv = first_conv(rewr_conv("add_0_left"), rewr_conv("add_0_right"))
        assert cv.eval(nat_thy, term("x + 0")) == seq("|- x + 0 = x")

    def test_first_conv_none_applies(self, nat_thy, term):
        with pytest.raises(ConversionError):
            first_conv(rewr_conv("add_0_left"), rewr_conv("add_0_right"))(nat_thy, term("x * y"))

    def test_try_conv(self, nat_thy, term, seq):
        assert try_conv(rewr_conv("add_0_right")).eval(nat_thy, term("x * y")) == seq("|- x * y = x * y")

    def test_arg_conv(self, nat_thy, term, seq):
        root = arg_conv(rewr_conv("add_0_right"))(nat_thy, term("Suc (x + 0)"))
        assert check(nat_thy, root) == seq("|- Suc (x + 0) = Suc x")

    def test_fun_conv(self, nat_thy, term, seq):
        root = fun_conv(arg_conv(rewr_conv("add_0_right")))(nat_thy, term("(x + 0) * y"))
        assert check(nat_thy, root) == seq("|- (x + 0) * y = x * y")

    def test_binop_conv(self, nat_thy, term, seq):
        root = binop_conv(try_conv(rewr_conv("add_0_right")))(nat_thy, term("(x + 0) * (y + 0)"))
        assert check(nat_thy, root) == seq("|- (x + 0) * (y + 0) = x * y")

    def test_binop_conv_shape(self, nat_thy, term):
        with pytest.raises(ShapeMismatch):
            binop_conv(all_conv())(nat_thy, term("Suc x"))

    def test_congruence_shape(self, nat_thy, term):
        with pytest.raises(ShapeMismatch):
            arg_conv(all_conv())(nat_thy, term("x"))
        with pytest.raises(ShapeMismatch):
            fun_conv(all_conv())(nat_thy, term("x"))
        with pytest.raises(ShapeMismatch):
            abs_conv(all_conv())(nat_thy, term("x"))

    def test_abs_conv(self, nat_thy, term, seq):
        root = abs_conv(rewr_conv("add_0_right"))(nat_thy, term("%n::nat. n + 0"))
        assert check(nat_thy, root) == seq("|- (%n::nat. n + 0) = (%n::nat. n)")

    def test_abs_conv_avoids_free_variable(self, nat_thy, term, seq):
        # la variable liée porte le nom de la variable libre x du corps
        lam = Abs("x", NatType, mk_plus(Bound(0), Var("x", NatType)))
        root = abs_conv(rewr_conv("add_comm"))(nat_thy, lam)
        assert check(nat_thy, root) == seq("|- (%n::nat. n + x) = (%n::nat. x + n)")

    def test_sub_conv(self, nat_thy, term, seq):
        root = sub_conv(try_conv(rewr_conv("add_0_right")))(nat_thy, term("Suc (x + 0)"))
        assert check(nat_thy, root) == seq("|- Suc (x + 0) = Suc x")


class TestRepeatedConversions:
    def test_repeat_conv(self, nat_thy, term, seq):
        root = repeat_conv(rewr_conv("add_assoc"))(nat_thy, term("x + y + z + x"))
        assert check(nat_thy, root) == seq("|- x + y + z + x = x + (y + (z + x))")

    def test_repeat_conv_no_step(self, nat_thy, term):
        assert repeat_conv(rewr_conv("add_0_right"))(nat_thy, term("x")).rule == "reflexive"

    def test_top_conv(self, nat_thy, term, seq):
        root = top_conv(rewr_conv("add_0_right"))(nat_thy, term("Suc (x + 0) * (y + 0 + 0)"))
        assert check(nat_thy, root) == seq("|- Suc (x + 0) * (y + 0 + 0) = Suc x * y")

    def test_top_conv_under_binder(self, nat_thy, term, seq):
        root = top_conv(rewr_conv("mult_1_right"))(nat_thy, term("!n::nat. n * 1 = x * 1"))
        assert check(nat_thy, root) == seq("|- (!n::nat. n * 1 = x * 1) = (!n::nat. n = x)")

    def test_top_conv_beta(self, nat_thy, term, seq):
        root = top_conv(beta_conv())(nat_thy, term("(%n::nat. (%m::nat. m + n) x) y"))
        assert root.th == seq("|- (%n::nat. (%m::nat. m + n) x) y = x + y")

    def test_repeat_all_conv_stops(self, nat_thy, term):
        root = repeat_conv(all_conv(), budget=5)(nat_thy, term("(x + 0) + (y + 0)"))
        assert root.rule == "reflexive"

    def test_top_conv_all_conv_stops(self, nat_thy, term, seq):
        root = top_conv(all_conv(), budget=5)(nat_thy, term("(x + 0) + (y + 0)"))
        assert root.th == seq("|- (x + 0) + (y + 0) = (x + 0) + (y + 0)")

    def test_top_conv_try_rewrite(self, nat_thy, term, seq):
        root = top_conv(try_conv(rewr_conv("add_0_right")), budget=1000)(nat_thy, term("(x + 0) + (y + 0)"))
        assert check(nat_thy, root) == seq("|- (x + 0) + (y + 0) = x + y")

    def test_repeat_try_rewrite(self, nat_thy, term, seq):
        root = repeat_conv(try_conv(rewr_conv("add_0_right")), budget=5)(nat_thy, term("x + 0 + 0"))
        assert check(nat_thy, root) == seq("|- x + 0 + 0 = x")

    def test_budget_exceeded(self, nat_thy, term):
        with pytest.raises(BudgetExceeded) as excinfo:
            repeat_conv(rewr_conv("add_comm"), budget=50)(nat_thy, term("x + y"))
        assert excinfo.value.limit == 50

    def test_top_conv_budget(self, nat_thy, term):
        with pytest.raises(BudgetExceeded):
            top_conv(rewr_conv("mult_comm"), budget=10)(nat_thy, term("x * y + z"))

    def test_budget_not_recovered(self, nat_thy, term):
        with pytest.raises(BudgetExceeded):
            try_conv(repeat_conv(rewr_conv("add_comm"), budget=5))(nat_thy, term("x + y"))
        with pytest.raises(BudgetExceeded):
            first_conv(top_conv(rewr_conv("mult_comm"), budget=5), all_conv())(nat_thy, term("x * y"))

    def test_default_budget_from_config(self, nat_thy, term):
        set_config(Config(checker=CheckerConfig(step_budget=7)))
        with pytest.raises(BudgetExceeded) as excinfo:
            repeat_conv(rewr_conv("add_comm"))(nat_thy, term("x + y"))
        assert excinfo.value.limit == 7
