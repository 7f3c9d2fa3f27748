#!/usr/bin/env python3
"""Morphism spaces between tensor words in the left-parenthesized fusion-tree basis.

A tree for a word ``(w1, ..., wn)`` at root ``c`` is a splitting isometry
``c → (...((w1 w2) w3) ...) wn`` written as ``(x, m)``: ``x`` lists the intermediate
labels ``x1 = w1, ..., xn = c`` and ``m`` the vertex indices of ``x(k-1) wk → xk``.
Trees at one root form an orthonormal basis, so morphisms are matrices per root and
the adjoint is the conjugate transpose.
"""

from typing import Any, Dict, List, Tuple

import numpy as np

from config.logging_setup import get_logger
from models.errors import ShapeMismatchError
from models.fusion_category import FusionCategoryData
from models.morphism import Morphism, Tree, Word

logger = get_logger(__name__)

EMPTY_TREE: Tree = ((), ())

# (a, tree of u at a, b, tree of v at b, vertex index of ab → c)
SplitIndex = Tuple[int, Tree, int, Tree, int]


class RigidityPair:
    """Solutions r ∈ Hom(1, λ̄λ) and r̄ ∈ Hom(1, λλ̄) of the conjugate equations."""

    def __init__(self, label: int, dual: int, r: Morphism, rbar: Morphism):
        self.label = label
        self.dual = dual
        self.r = r
        self.rbar = rbar

    def get_summary_dict(self) -> Dict[str, Any]:
        return {
            "label": self.label,
            "r_norm_squared": float((self.r.adjoint() @ self.r).scalar().real),
            "rbar_norm_squared": float((self.rbar.adjoint() @ self.rbar).scalar().real),
        }


class HomCalculus:
    """Fusion-tree realization of Hom(word, word) for one category."""

    def __init__(self, data: FusionCategoryData):
        self.data = data
        self.rank = data.rank
        self.N = data.N
        self._trees: Dict[Tuple[Word, int], List[Tree]] = {}
        self._tree_index: Dict[Tuple[Word, int], Dict[Tree, int]] = {}
        self._splits: Dict[Tuple[Word, Word, int], List[SplitIndex]] = {}
        self._recoupling: Dict[Tuple[Word, Word, int], np.ndarray] = {}
        self._rigidity: Dict[int, RigidityPair] = {}

    # --- bases ---------------------------------------------------------------

    def tree_basis(self, word: Word, root: int) -> List[Tree]:
        """Left-parenthesized splitting trees from ``root`` into ``word``."""
        word = tuple(word)
        key = (word, root)
        if key in self._trees:
            return self._trees[key]
        if not word:
            trees = [EMPTY_TREE] if root == 0 else []
        elif len(word) == 1:
            trees = [((word[0],), ())] if root == word[0] else []
        else:
            trees = []
            head, last = word[:-1], word[-1]
            for x in range(self.rank):
                for prefix in self.tree_basis(head, x):
                    for m in range(self.N[x, last, root]):
                        trees.append((prefix[0] + (root,), prefix[1] + (m,)))
        self._trees[key] = trees
        self._tree_index[key] = {tree: i for i, tree in enumerate(trees)}
        return trees

    def tree_count(self, word: Word, root: int) -> int:
        return len(self.tree_basis(word, root))

    def tree_index(self, word: Word, root: int, tree: Tree) -> int:
        self.tree_basis(word, root)
        return self._tree_index[(tuple(word), root)][tree]

    def split_basis(self, u: Word, v: Word, root: int) -> List[SplitIndex]:
        """Basis of Hom(root, u⊗v) through an intermediate vertex ``root → a b``."""
        key = (tuple(u), tuple(v), root)
        if key not in self._splits:
            self._splits[key] = [
                (a, tu, b, tv, m)
                for a in range(self.rank) for tu in self.tree_basis(u, a)
                for b in range(self.rank) for tv in self.tree_basis(v, b)
                for m in range(self.N[a, b, root])
            ]
        return self._splits[key]

    # --- elementary morphisms -------------------------------------------------

    def zero(self, source: Word, target: Word) -> Morphism:
        return Morphism(source, target, {
            c: np.zeros((self.tree_count(target, c), self.tree_count(source, c)), dtype=complex)
            for c in range(self.rank)
        })

    def identity(self, word: Word) -> Morphism:
        return Morphism(word, word, {c: np.eye(self.tree_count(word, c), dtype=complex) for c in range(self.rank)})

    def vertex(self, a: int, b: int, c: int, m: int = 0) -> Morphism:
        """The splitting isometry c → ab with vertex index ``m``."""
        result = self.zero((c,), (a, b))
        result.blocks[c][self.tree_index((a, b), c, ((a, c), (m,))), 0] = 1.0
        return result

    def from_tree(self, word: Word, root: int, tree: Tree) -> Morphism:
        """A single tree as a morphism (root) → word."""
        result = self.zero((root,), word)
        result.blocks[root][self.tree_index(word, root, tree), 0] = 1.0
        return result

    # --- composition and tensor product --------------------------------------

    def compose(self, g: Morphism, f: Morphism) -> Morphism:
        """g ∘ f."""
        if f.target != g.source:
            raise ShapeMismatchError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
        return g @ f

    @staticmethod
    def adjoint(f: Morphism) -> Morphism:
        return f.adjoint()

    def recoupling(self, u: Word, v: Word, root: int) -> np.ndarray:
        """Unitary matrix taking split-basis coordinates of Hom(root, u⊗v) to left-tree coordinates."""
        u, v = tuple(u), tuple(v)
        key = (u, v, root)
        if key in self._recoupling:
            return self._recoupling[key]

        splits = self.split_basis(u, v, root)
        word = u + v
        matrix = np.zeros((self.tree_count(word, root), len(splits)), dtype=complex)
        for col, (a, tu, b, tv, m) in enumerate(splits):
            if not v:
                matrix[self.tree_index(word, root, tu), col] = 1.0
            elif not u:
                matrix[self.tree_index(word, root, tv), col] = 1.0
            elif len(v) == 1:
                tree = (tu[0] + (root,), tu[1] + (m,))
                matrix[self.tree_index(word, root, tree), col] = 1.0
            else:
                # peel the last vertex b' y → b off the right tree and move it outward
                v_head, y = v[:-1], v[-1]
                b_prime, nu = tv[0][-2], tv[1][-1]
                tv_head = (tv[0][:-1], tv[1][:-1])
                for e in range(self.rank):
                    if not (self.N[a, b_prime, e] and self.N[e, y, root]):
                        continue
                    F = self.data.F_entry(a, b_prime, y, root, e, b)
                    inner = self.recoupling(u, v_head, e)
                    inner_splits = self.split_basis(u, v_head, e)
                    for alpha in range(F.shape[0]):
                        source = inner[:, inner_splits.index((a, tu, b_prime, tv_head, alpha))]
                        for beta in range(F.shape[1]):
                            coefficient = np.conj(F[alpha, beta, nu, m])
                            if coefficient == 0:
                                continue
                            for s, left in enumerate(self.tree_basis(u + v_head, e)):
                                if source[s] == 0:
                                    continue
                                tree = (left[0] + (root,), left[1] + (beta,))
                                matrix[self.tree_index(word, root, tree), col] += coefficient * source[s]
        self._recoupling[key] = matrix
        return matrix

    def tensor(self, f: Morphism, g: Morphism) -> Morphism:
        """f ⊗ g in the left-parenthesized basis of the concatenated words."""
        u1, u2, v1, v2 = f.source, f.target, g.source, g.target
        blocks = {}
        for c in range(self.rank):
            splits_in = self.split_basis(u1, v1, c)
            splits_out = self.split_basis(u2, v2, c)
            kernel = np.zeros((len(splits_out), len(splits_in)), dtype=complex)
            position = {s: i for i, s in enumerate(splits_out)}
            for j, (a, tu, b, tv, m) in enumerate(splits_in):
                fa, gb = f.blocks[a], g.blocks[b]
                col_u = self.tree_index(u1, a, tu)
                col_v = self.tree_index(v1, b, tv)
                for i_u, tu2 in enumerate(self.tree_basis(u2, a)):
                    x = fa[i_u, col_u]
                    if x == 0:
                        continue
                    for i_v, tv2 in enumerate(self.tree_basis(v2, b)):
                        y = gb[i_v, col_v]
                        if y != 0:
                            kernel[position[(a, tu2, b, tv2, m)], j] += x * y
            blocks[c] = self.recoupling(u2, v2, c) @ kernel @ self.recoupling(u1, v1, c).conj().T
        return Morphism(u1 + v1, u2 + v2, blocks)

    def tensor_all(self, *morphisms: Morphism) -> Morphism:
        result = morphisms[0]
        for f in morphisms[1:]:
            result = self.tensor(result, f)
        return result

    def id_tensor(self, word: Word, f: Morphism) -> Morphism:
        return self.tensor(self.identity(word), f)

    def tensor_id(self, f: Morphism, word: Word) -> Morphism:
        return self.tensor(f, self.identity(word))

    def recouple(self, f: Morphism, split_source: int, split_target: int) -> Dict[int, np.ndarray]:
        """Coordinates of ``f`` against split bases, cutting source and target words at the given positions."""
        u1, v1 = f.source[:split_source], f.source[split_source:]
        u2, v2 = f.target[:split_target], f.target[split_target:]
        return {c: self.recoupling(u2, v2, c).conj().T @ f.blocks[c] @ self.recoupling(u1, v1, c)
                for c in range(self.rank)}

    def unrecouple(self, blocks: Dict[int, np.ndarray], source: Word, target: Word,
                   split_source: int, split_target: int) -> Morphism:
        """Inverse of ``recouple``."""
        u1, v1 = tuple(source[:split_source]), tuple(source[split_source:])
        u2, v2 = tuple(target[:split_target]), tuple(target[split_target:])
        return Morphism(source, target, {
            c: self.recoupling(u2, v2, c) @ blocks[c] @ self.recoupling(u1, v1, c).conj().T
            for c in range(self.rank)
        })

    # --- duality ----------------------------------------------------------------

    def rigidity_pair(self, label: int) -> RigidityPair:
        if label in self._rigidity:
            return self._rigidity[label]
        dual = self.data.dual[label]
        d = float(self.data.qdim[label])
        r = self._cup(dual, label) * np.sqrt(d)
        rbar0 = self._cup(label, dual) * np.sqrt(d)
        zigzag = self.tensor(rbar0.adjoint(), self.identity((label,))) @ self.tensor(self.identity((label,)), r)
        scale = zigzag.blocks[label][0, 0]
        rbar = rbar0 * np.conj(1.0 / scale)
        pair = RigidityPair(label, dual, r, rbar)
        self._rigidity[label] = pair
        logger.debug(f"Rigidity pair for {label}: zigzag scale {scale:.6g}")
        return pair

    def _cup(self, a: int, b: int) -> Morphism:
        """The unit-norm tree 1 → ab."""
        result = self.zero((), (a, b))
        result.blocks[0][self.tree_index((a, b), 0, ((a, 0), (0,))), 0] = 1.0
        return result

    def left_inverse(self, label: int, X: Morphism) -> Morphism:
        """φ_λ(X) = d(λ)⁻¹ (r* ⊗ id)(id_λ̄ ⊗ X)(r ⊗ id) for X ∈ Hom(λ w1, λ w2)."""
        if not X.source or not X.target or X.source[0] != label or X.target[0] != label:
            raise ShapeMismatchError(f"left inverse of {label} needs a morphism starting with {label}")
        pair = self.rigidity_pair(label)
        w1, w2 = X.source[1:], X.target[1:]
        d = float(self.data.qdim[label])
        cap = self.tensor(pair.r.adjoint(), self.identity(w2))
        middle = self.tensor(self.identity((pair.dual,)), X)
        cup = self.tensor(pair.r, self.identity(w1))
        return (cap @ middle @ cup) * (1.0 / d)

    # --- braiding -----------------------------------------------------------------

    def braid(self, a: int, word: Word) -> Morphism:
        """c_{a,w}: a w → w a, built from R-symbols by naturality."""
        word = tuple(word)
        if not word:
            return self.identity((a,))
        source, target = (a,) + word, word + (a,)
        blocks = {}
        for d in range(self.rank):
            splits = self.split_basis((a,), word, d)
            P = np.zeros((self.tree_count(target, d), len(splits)), dtype=complex)
            for j, (_, _, f, tw, mu) in enumerate(splits):
                R = self.data.R_entry(a, f, d)
                for nu in range(R.shape[0]):
                    tree = (tw[0] + (d,), tw[1] + (nu,))
                    P[self.tree_index(target, d, tree), j] += R[nu, mu]
            blocks[d] = P @ self.recoupling((a,), word, d).conj().T
        return Morphism(source, target, blocks)

    def braid_under(self, word: Word, a: int) -> Morphism:
        """c_{w,a}: w a → a w."""
        word = tuple(word)
        if not word:
            return self.identity((a,))
        source, target = word + (a,), (a,) + word
        blocks = {}
        for d in range(self.rank):
            splits = self.split_basis((a,), word, d)
            position = {s: i for i, s in enumerate(splits)}
            Q = np.zeros((len(splits), self.tree_count(source, d)), dtype=complex)
            for j, tree in enumerate(self.tree_basis(source, d)):
                f, nu = tree[0][-2], tree[1][-1]
                tw = (tree[0][:-1], tree[1][:-1])
                R = self.data.R_entry(f, a, d)
                for mu in range(R.shape[0]):
                    Q[position[(a, ((a,), ()), f, tw, mu)], j] += R[mu, nu]
            blocks[d] = self.recoupling((a,), word, d) @ Q
        return Morphism(source, target, blocks)

    # --- debugging ----------------------------------------------------------------

    def describe(self, f: Morphism) -> Dict[str, Any]:
        """A morphism as JSON-ready matrices annotated with their tree bases."""
        blocks = {}
        for c, block in f.blocks.items():
            if block.size == 0:
                continue
            blocks[str(c)] = {
                "rows": [[list(t[0]), list(t[1])] for t in self.tree_basis(f.target, c)],
                "cols": [[list(t[0]), list(t[1])] for t in self.tree_basis(f.source, c)],
                "matrix": block,
            }
        return {"source": list(f.source), "target": list(f.target), "blocks": blocks}
