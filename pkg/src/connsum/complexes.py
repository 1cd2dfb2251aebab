"""Simplicial complexes on a fixed vertex set, with connected sums.

A complex lives on the vertex set {1, ..., m} and is stored as a
frozenset of faces, each face being an int bitmask (vertex i is bit
i - 1).  The empty face is always a member, and vertices that appear in
no face at all ("ghost" vertices) are allowed; they matter for the
face-ring constructions, where a ghost vertex kills a polynomial
generator.

The connected sum K1 #_Z K2 is the deletion of Z from K1 | K2.  It is
"strong" when K1, K2 and W = K1 & K2 are pure of one common dimension
and Z is exactly the part of W that the closure of either complement
misses; see :func:`seam` and :func:`is_strong_connected_sum`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Iterator, Tuple, Union

FaceLike = Union[int, Iterable[int]]


def face_of(vertices: Iterable[int]) -> int:
    """Bitmask of a face given by its vertex labels (1-based)."""
    mask = 0
    for v in vertices:
        if v < 1:
            raise ValueError(f"vertex labels are 1-based, got {v}")
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> Tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def face_str(mask: int) -> str:
    return "{" + ",".join(map(str, vertices_of(mask))) + "}"


def _as_mask(face: FaceLike) -> int:
    return face if isinstance(face, int) else face_of(face)


def _subsets(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


class SimplicialComplex:
    """Downward-closed family of faces on {1, ..., m}."""

    __slots__ = ("m", "faces")

    def __init__(self, m: int, faces: Iterable[int]):
        if m < 0:
            raise ValueError("vertex count must be nonnegative")
        fs = frozenset(int(f) for f in faces)
        if 0 not in fs:
            raise ValueError("a complex always contains the empty face")
        limit = 1 << m
        for f in fs:
            if not 0 <= f < limit:
                raise ValueError(f"face {face_str(f)} outside vertex range 1..{m}")
            # removing any single vertex must land back in the family
            v = f
            while v:
                bit = v & -v
                if (f ^ bit) not in fs:
                    raise ValueError(
                        f"not downward closed: {face_str(f)} present but "
                        f"{face_str(f ^ bit)} missing")
                v ^= bit
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "faces", fs)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("SimplicialComplex is immutable")

    @classmethod
    def from_facets(cls, m: int, facets: Iterable[FaceLike]) -> "SimplicialComplex":
        """Complex generated by the given faces.

        >>> K = SimplicialComplex.from_facets(3, [{1, 2}, {3}])
        >>> [vertices_of(f) for f in K]
        [(), (1,), (2,), (1, 2), (3,)]
        """
        faces = {0}
        for f in facets:
            faces.update(_subsets(_as_mask(f)))
        return cls(m, faces)

    @classmethod
    def irrelevant(cls, m: int) -> "SimplicialComplex":
        """The complex {∅} on m (all ghost) vertices."""
        return cls(m, [0])

    @classmethod
    def full_simplex(cls, m: int) -> "SimplicialComplex":
        return cls(m, range(1 << m))

    # -- basic queries -------------------------------------------------

    def __contains__(self, face: FaceLike) -> bool:
        return _as_mask(face) in self.faces

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.faces))

    def __len__(self) -> int:
        return len(self.faces)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.m == other.m and self.faces == other.faces)

    def __hash__(self):
        return hash((self.m, self.faces))

    def __repr__(self):
        facets = " ".join(face_str(f) for f in sorted(self.facets()))
        return f"SimplicialComplex(m={self.m}, facets=[{facets}])"

    def facets(self) -> FrozenSet[int]:
        """Maximal faces.  For the complex {∅} this is just {∅}."""
        fs = self.faces
        return frozenset(f for f in fs
                         if not any(g != f and f & g == f for g in fs))

    def dim(self) -> int:
        return max(bin(f).count("1") for f in self.faces) - 1

    def is_pure(self) -> bool:
        dims = {bin(f).count("1") for f in self.facets()}
        return len(dims) == 1

    def vertices(self) -> Tuple[int, ...]:
        """Vertices that are actually faces (ghosts excluded)."""
        return tuple(v for v in range(1, self.m + 1)
                     if (1 << (v - 1)) in self.faces)

    def ghost_vertices(self) -> Tuple[int, ...]:
        return tuple(v for v in range(1, self.m + 1)
                     if (1 << (v - 1)) not in self.faces)

    def face_sets(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(vertices_of(f) for f in sorted(self.faces))

    def subset(self, faces: Iterable[FaceLike]) -> "FaceSubset":
        return FaceSubset(self, faces)

    def is_subcomplex_of(self, other: "SimplicialComplex") -> bool:
        return self.m == other.m and self.faces <= other.faces

    # -- derived complexes ---------------------------------------------

    def link(self, face: FaceLike) -> "SimplicialComplex":
        """Link of a face, on the same labeled vertex set.

        Vertices of the face itself become ghosts of the result; labels
        are never renumbered.
        """
        f = _as_mask(face)
        if f not in self.faces:
            raise ValueError(f"{face_str(f)} is not a face")
        return SimplicialComplex(
            self.m, (t for t in self.faces if t & f == 0 and (t | f) in self.faces))

    def restrict(self, vertex_set: FaceLike) -> "SimplicialComplex":
        """Full subcomplex on the given vertices (others become ghosts)."""
        keep = _as_mask(vertex_set)
        return SimplicialComplex(self.m, (f for f in self.faces if f & ~keep == 0))


class FaceSubset:
    """A set of nonempty faces of a fixed parent complex.

    This is the Z of deletions and connected sums: not necessarily
    closed in either direction, but always a subset of the parent's
    faces with ∅ excluded.
    """

    __slots__ = ("parent", "members")

    def __init__(self, parent: SimplicialComplex, members: Iterable[FaceLike]):
        ms = frozenset(_as_mask(f) for f in members)
        if 0 in ms:
            raise ValueError("the empty face cannot belong to a face subset")
        stray = ms - parent.faces
        if stray:
            raise ValueError(
                f"{face_str(min(stray))} is not a face of the parent complex")
        object.__setattr__(self, "parent", parent)
        object.__setattr__(self, "members", ms)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("FaceSubset is immutable")

    def __contains__(self, face: FaceLike) -> bool:
        return _as_mask(face) in self.members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FaceSubset)
                and self.parent == other.parent and self.members == other.members)

    def __hash__(self):
        return hash((self.parent, self.members))

    def __repr__(self):
        inner = " ".join(face_str(f) for f in sorted(self.members))
        return f"FaceSubset([{inner}] of m={self.parent.m})"

    def face_sets(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(vertices_of(f) for f in sorted(self.members))


class ConnectedSumError(ValueError):
    """Raised when the connected-sum hypothesis fails.

    `witness` is a face of the open neighborhood of Z that escapes
    K1 & K2, which is exactly what the hypothesis forbids.
    """

    def __init__(self, message: str, witness: int):
        super().__init__(message)
        self.witness = witness


def closure(z: FaceSubset) -> SimplicialComplex:
    """Smallest subcomplex of the parent containing all members of Z."""
    faces = {0}
    for f in z.members:
        faces.update(_subsets(f))
    return SimplicialComplex(z.parent.m, faces)


def open_neighborhood(k: SimplicialComplex, z: FaceSubset) -> FaceSubset:
    """O_K(Z): the faces of K containing some member of Z.

    Z must consist of faces of K.  The result is an up-set in K but
    usually not a subcomplex.
    """
    if not z.members <= k.faces:
        raise ValueError("Z is not a subset of K")
    zs = z.members
    hit = [f for f in k.faces if f and any(t & f == t for t in zs)]
    return FaceSubset(k, hit)


def star(k: SimplicialComplex, z: FaceSubset) -> SimplicialComplex:
    """Closed star: the closure of the open neighborhood of Z in K."""
    return closure(open_neighborhood(k, z))


def deletion(k: SimplicialComplex, z: FaceSubset) -> SimplicialComplex:
    """K minus the open neighborhood of Z; always a subcomplex of K."""
    gone = open_neighborhood(k, z).members
    return SimplicialComplex(k.m, k.faces - gone)


def union(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    if k1.m != k2.m:
        raise ValueError("union needs a common vertex count")
    return SimplicialComplex(k1.m, k1.faces | k2.faces)


def intersection(k1: SimplicialComplex, k2: SimplicialComplex) -> SimplicialComplex:
    if k1.m != k2.m:
        raise ValueError("intersection needs a common vertex count")
    return SimplicialComplex(k1.m, k1.faces & k2.faces)


def _member_masks(z) -> FrozenSet[int]:
    if isinstance(z, FaceSubset):
        return z.members
    return frozenset(_as_mask(f) for f in z)


def connected_sum(k1: SimplicialComplex, k2: SimplicialComplex,
                  z: Union[FaceSubset, Iterable[FaceLike]]) -> SimplicialComplex:
    """K1 #_Z K2 = deletion of Z from K1 | K2.

    Z must consist of nonempty faces of K1 & K2, and its open
    neighborhood in K1 | K2 must stay inside K1 & K2; otherwise a
    :class:`ConnectedSumError` carrying a witnessing face is raised.
    """
    big = union(k1, k2)
    common = k1.faces & k2.faces
    zm = _member_masks(z)
    if 0 in zm:
        raise ConnectedSumError("the empty face cannot belong to Z", 0)
    for t in zm:
        if t not in common:
            raise ConnectedSumError(
                f"Z member {face_str(t)} is not a common face", t)
    zsub = FaceSubset(big, zm)
    for f in open_neighborhood(big, zsub).members:
        if f not in common:
            raise ConnectedSumError(
                f"open neighborhood of Z leaks outside the intersection "
                f"at {face_str(f)}", f)
    return deletion(big, zsub)


def seam(k: SimplicialComplex, w: SimplicialComplex) -> FaceSubset:
    """The canonical deleted set of a strong sum along W inside K.

    Computes Z = W minus the closure of K \\ W and checks it against the
    annihilation characterization: a nonempty face τ lies in Z iff
    τ ∪ σ is a non-face for every σ in K \\ W.  (For W = K the second
    description is vacuous; ∅ is excluded by convention either way.)
    """
    if not w.is_subcomplex_of(k):
        raise ValueError("W must be a subcomplex of K")
    outside = k.faces - w.faces
    cl = {0}
    for f in outside:
        cl.update(_subsets(f))
    z1 = w.faces - cl
    z2 = {t for t in k.faces if t
          and all((t | s) not in k.faces for s in outside)}
    assert z1 == z2, "the two seam characterizations disagree"
    return FaceSubset(k, z1)


@dataclass(frozen=True)
class StrongSumCertificate:
    """Outcome of the strong connected-sum test, clause by clause."""

    k1_pure: bool
    k2_pure: bool
    w_pure: bool
    dims_equal: bool
    z_matches_k1_side: bool
    z_matches_k2_side: bool

    def __bool__(self) -> bool:
        return (self.k1_pure and self.k2_pure and self.w_pure
                and self.dims_equal and self.z_matches_k1_side
                and self.z_matches_k2_side)

    def failures(self) -> Tuple[str, ...]:
        return tuple(name for name, ok in self.__dict__.items() if not ok)


def is_strong_connected_sum(k1: SimplicialComplex, k2: SimplicialComplex,
                            z: Union[FaceSubset, Iterable[FaceLike]]
                            ) -> StrongSumCertificate:
    """Check the strength clauses for K1 #_Z K2 with W = K1 & K2.

    The connected-sum hypothesis itself must hold (it is re-validated
    and raises on violation).  Strength additionally asks that K1, K2
    and W are pure of one common dimension and that Z agrees with the
    seam of W inside each summand.
    """
    connected_sum(k1, k2, z)  # hypothesis check, result unused
    w = intersection(k1, k2)
    zm = _member_masks(z)
    z_from_k1 = seam(k1, w).members
    z_from_k2 = seam(k2, w).members
    d = k1.dim()
    return StrongSumCertificate(
        k1_pure=k1.is_pure(),
        k2_pure=k2.is_pure(),
        w_pure=w.is_pure(),
        dims_equal=(k2.dim() == d and w.dim() == d),
        z_matches_k1_side=(zm == z_from_k1),
        z_matches_k2_side=(zm == z_from_k2),
    )
