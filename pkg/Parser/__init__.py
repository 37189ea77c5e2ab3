"""
┏━━━━━━━━━━━━━━━━━━━━━━━━━━┓
┃ Signumcalc Radial Engine ┃
┗━━━━━━━━━━━━━━━━━━━━━━━━━━┛
Parser
"""

from .tokens import (
    TokenKind,
    Token,
    TokenStream,
    tokenize
)

from .models import (
    Operator,
    POWERABLE,
    Delta,
    Pow,
    OpApply,
    Scale,
    Sum,
    Neg,
    Expr
)

from .parse import (
    ExpressionParser,
    parse
)

from .evaluate import (
    evaluate,
    normalize,
    print_canonical
)
