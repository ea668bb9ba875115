"""Homology and cup products of 3D binary pictures."""

from ._core import (
    IntegrityError,
    ParseError,
    Picture,
    PreconditionError,
    UsageError,
    analyze,
    betti_oracle,
    complement,
    foreground_components,
    parse_picture,
    serialize_picture,
    shapes,
)


def load_picture(path):
    with open(path, encoding="ascii", newline="") as f:
        return parse_picture(f.read())


__all__ = [
    "IntegrityError",
    "ParseError",
    "Picture",
    "PreconditionError",
    "UsageError",
    "analyze",
    "betti_oracle",
    "complement",
    "foreground_components",
    "load_picture",
    "parse_picture",
    "serialize_picture",
    "shapes",
]
