"""
Prefatores escalares das transformadas direta e inversa para a convenção (a, b).

    direta:  √(|b| / (2π)^(1−a))
    inversa: √(|b| / (2π)^(1+a))
"""
import math

from .models import TransformConvention

TWO_PI = 2 * math.pi

# Convenção padrão da CLI e das demonstrações (a=0, b=−1)
DEFAULT_CONVENTION = TransformConvention(a=0.0, b=-1.0)


def forward_prefactor(conv: TransformConvention) -> float:
    return math.sqrt(abs(conv.b) / TWO_PI ** (1 - conv.a))


def inverse_prefactor(conv: TransformConvention) -> float:
    return math.sqrt(abs(conv.b) / TWO_PI ** (1 + conv.a))
