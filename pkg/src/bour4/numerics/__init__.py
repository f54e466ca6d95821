"""Differentiation, quadrature, cumulative integrals, an ODE oracle, and the
profile-expression parser."""
from .expr import ExprAst, evaluate, expr_scalarfn, parse_expr, pretty
from .jets import Jet2
from .ode import OdeSolution, solve_ode
from .quadrature import CumulativeFn, cumulative, integrate
from .scalarfn import ScalarFn, derivative

__all__ = [
    "CumulativeFn", "ExprAst", "Jet2", "OdeSolution", "ScalarFn",
    "cumulative", "derivative", "evaluate", "expr_scalarfn", "integrate",
    "parse_expr", "pretty", "solve_ode",
]
