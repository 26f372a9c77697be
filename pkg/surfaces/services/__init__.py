from .numerics import make_surface, riemann_roch_line, intersect, inequality_value

__all__ = [
    'make_surface', 'riemann_roch_line', 'intersect', 'inequality_value',
]
