"""Colored fans of rank-one horospherical homogeneous spaces.

Only what the Picard-number-one classification needs is modelled: the
rank-one lattice ``N = Z`` with its two rays ``+1`` and ``-1``, the images of
the colors in ``N``, and the Picard-number formula

    rho = (#rays - rank) + #colors - #colors attached to cones.

At higher rank only the smoothness test for the complete Picard-one fan is
provided (rays ``e_1..e_n`` plus ``-(e_1 + ... + e_n)``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .rootsys import RootSystem, pairing

__all__ = [
    "NotProjectiveError",
    "Color",
    "ColoredFanRank1",
    "color_images",
    "picard_number",
    "enumerate_rank1_embeddings",
    "is_smooth_picard1_config",
]

RAYS = (1, -1)


class NotProjectiveError(ValueError):
    """The fan is not complete, so the embedding is not projective."""


@dataclass(frozen=True)
class Color:
    name: str
    image: int
    attached: bool = False


@dataclass(frozen=True)
class ColoredFanRank1:
    rays: tuple[int, ...]
    colors: tuple[Color, ...]

    def __post_init__(self):
        if not self.rays or len(set(self.rays)) != len(self.rays):
            raise ValueError("rays must be a nonempty set of distinct generators")
        if not set(self.rays) <= set(RAYS):
            raise ValueError("rank-one rays are +1 and -1")
        for c in self.colors:
            if c.attached and (c.image == 0 or c.image not in self.rays):
                raise ValueError(f"color {c.name} cannot be attached: image {c.image}")

    @property
    def attached(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.colors if c.attached)

    @property
    def complete(self) -> bool:
        return set(self.rays) == set(RAYS)

    def to_json(self) -> dict:
        return {
            "rays": list(self.rays),
            "colors": [{"name": c.name, "image": c.image, "attached": c.attached} for c in self.colors],
        }


def color_images(rs: RootSystem, generator: Sequence[int], colors: Sequence[int]) -> dict[int, int]:
    """Image of each color (simple root index) on the rank-one lattice.

    ``generator`` is the weight spanning M; the image of a color is the
    pairing of the generator with its coroot.
    """
    return {c: pairing(generator, rs.simple_coroot(c)) for c in colors}


def picard_number(f: ColoredFanRank1, total_colors: int | None = None) -> int:
    if not f.complete:
        raise NotProjectiveError("fan does not cover N_R")
    if total_colors is None:
        total_colors = len(f.colors)
    return (len(f.rays) - 1) + total_colors - len(f.attached)


def enumerate_rank1_embeddings(images: dict[str, int]) -> list[ColoredFanRank1]:
    """The projective embeddings: both rays, every admissible subset of colors.

    With two colors mapping to the two opposite rays this gives the four
    embeddings (no color, each color alone, both colors).
    """
    names = sorted(images)
    usable = [n for n in names if images[n] != 0]
    fans = []
    for mask in range(1 << len(usable)):
        chosen = {usable[k] for k in range(len(usable)) if mask >> k & 1}
        fans.append(ColoredFanRank1(RAYS, tuple(Color(n, images[n], n in chosen) for n in names)))
    fans.sort(key=lambda f: (len(f.attached), f.attached))
    return fans


def _det(rows: list[list[int]]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            for k in range(col, n):
                m[r][k] -= f * m[col][k]
    return det


def is_smooth_picard1_config(
    n: int,
    color_images: Sequence[Sequence[int]],
    rays: Sequence[Sequence[int]] | None = None,
) -> bool:
    """Smoothness of the complete Picard-one fan with the given color images.

    ``rays`` defaults to the standard basis plus minus its sum; when given,
    the first ``n`` rays must be a lattice basis and the last one minus
    their sum.
    """
    if rays is None:
        rays = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        rays.append(tuple(-1 for _ in range(n)))
    rays = [tuple(r) for r in rays]
    if len(rays) != n + 1 or any(len(r) != n for r in rays):
        return False
    if abs(_det([list(r) for r in rays[:n]])) != 1:
        return False
    if tuple(-sum(r[k] for r in rays[:n]) for k in range(n)) != rays[n]:
        return False
    imgs = [tuple(c) for c in color_images]
    return len(set(imgs)) == len(imgs) and set(imgs) <= set(rays)
