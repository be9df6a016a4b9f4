"""Algebra maps between Heisenberg algebras with different parameters."""

from __future__ import annotations

from dataclasses import dataclass

from ..params import Scalar
from .algebra import HeisenbergAlgebra, PBWElement
from .identities import theta


@dataclass(frozen=True)
class AlgebraMorphism:
    """Map ``H_{p,q} -> H_{p',q'}`` fixed by the images of ``x, y, z``."""

    source: HeisenbergAlgebra
    target: HeisenbergAlgebra
    images: dict

    def __post_init__(self):
        for name in "xyz":
            img = self.images.get(name)
            if not isinstance(img, PBWElement) or img.algebra != self.target:
                raise ValueError(f"image of {name} must be an element of the target algebra")

    def apply(self, f: PBWElement) -> PBWElement:
        if f.algebra != self.source:
            raise ValueError("element is not in the source algebra")
        X, Y, Z = (self.images[n] for n in "xyz")
        powers = {n: [self.target.one] for n in "xyz"}

        def power(name, e):
            cache = powers[name]
            while len(cache) <= e:
                cache.append(cache[-1] * self.images[name])
            return cache[e]

        out = self.target.element()
        for (i, j, k), c in f.terms.items():
            out = out + c * (power("x", i) * power("y", j) * power("z", k))
        return out

    __call__ = apply

    def relation_images(self) -> dict:
        """Images of the three defining relations of the source."""
        p, q = self.source.p, self.source.q
        X, Y, Z = (self.images[n] for n in "xyz")
        return {
            "zx - p^-1 xz": Z * X - p.inverse() * (X * Z),
            "zy - p yz": Z * Y - p * (Y * Z),
            "yx - q xy - z": Y * X - q * (X * Y) - Z,
        }

    def then(self, other: "AlgebraMorphism") -> "AlgebraMorphism":
        """``other`` after ``self``."""
        if other.source != self.target:
            raise ValueError("morphisms are not composable")
        return AlgebraMorphism(self.source, other.target, {n: other.apply(img) for n, img in self.images.items()})

    def is_identity(self) -> bool:
        return self.source == self.target and all(
            self.images[n] == g for n, g in self.source.gens().items()
        )


def verify_morphism(phi: AlgebraMorphism) -> bool:
    return not any(phi.relation_images().values())


def identity_morphism(alg: HeisenbergAlgebra) -> AlgebraMorphism:
    return AlgebraMorphism(alg, alg, alg.gens())


def inverse_parameter_map(source: HeisenbergAlgebra | None = None) -> AlgebraMorphism:
    """``H_{p,q} -> H_{p^-1,q^-1}``: ``x -> y``, ``y -> x``, ``z -> -q z``."""
    source = HeisenbergAlgebra() if source is None else source
    target = HeisenbergAlgebra(source.p.inverse(), source.q.inverse())
    return AlgebraMorphism(source, target, {"x": target.y, "y": target.x, "z": -source.q * target.z})


def swap_parameter_map(source: HeisenbergAlgebra | None = None) -> AlgebraMorphism:
    """``H_{p,q} -> H_{q,p}``: ``x -> i p^(1/2) y``, ``y -> i p^(1/2) x``, ``z -> -theta``."""
    source = HeisenbergAlgebra() if source is None else source
    target = HeisenbergAlgebra(source.q, source.p)
    c = Scalar.i() * source.p.sqrt()
    return AlgebraMorphism(source, target, {"x": c * target.y, "y": c * target.x, "z": -theta(target)})


def equal_parameter_involution(q=None) -> AlgebraMorphism:
    """On ``H_{q,q}``: ``x -> q^(1/2) y``, ``y -> q^(1/2) x``, ``z -> theta``."""
    q = Scalar.q() if q is None else Scalar.coerce(q)
    alg = HeisenbergAlgebra(q, q)
    c = q.sqrt()
    return AlgebraMorphism(alg, alg, {"x": c * alg.y, "y": c * alg.x, "z": theta(alg)})
