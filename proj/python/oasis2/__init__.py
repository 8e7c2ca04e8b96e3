from ._oasis2 import (
    Graph,
    Oasis2Error,
    TurtleSyntaxError,
    build_behaviour,
    build_plan,
    build_template,
    discover,
    parse,
    run_demo,
    serialize,
    to_dot,
    trace,
    validate,
)

__all__ = [
    "Graph",
    "Oasis2Error",
    "TurtleSyntaxError",
    "build_behaviour",
    "build_plan",
    "build_template",
    "discover",
    "parse",
    "run_demo",
    "serialize",
    "to_dot",
    "trace",
    "validate",
]
