"""Exact computational topology of link diagrams and simplicial objects.

The package has two halves that meet in the middle:

* a knot-theoretic pipeline: planar diagram codes -> Kauffman bracket state
  sum -> bigraded integer complex of enhanced states -> homology, Poincare
  polynomial and Jones invariants, all in exact big-integer arithmetic;
* a simplicial half: finitely presented simplicial sets and modules, Moore
  complexes, nerves of small categories, barycentric subdivision, and a
  desk-scale Dold-Kan correspondence, which re-derives the same link
  homology through the nerve of the simplex category.

Everything is deterministic and immutable after construction.
"""

__all__ = ["__version__"]

__version__ = "0.1.0"
