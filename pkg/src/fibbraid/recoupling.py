"""Fusion-tree recoupling for chains of charge-1 anyons.

A tree is a nested 2-tuple of leaf indices, e.g. ((1, 2), (3, (4, 5))); the
chain basis of the fusion module corresponds to the left comb.  Basis states
of a tree assign a charge to every internal node, identified by its leaf
interval (every node of a planar tree spans a consecutive interval, and the
interval determines the node).  Basis changes between trees are products of
elementary associativity moves (A, (B, C)) <-> ((A, B), C), each weighted by
a Fibonacci F symbol.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .constants import TAU, SQRT_TAU
from .fusion import enumerate_basis, fuse

Tree = int | tuple  # leaf index, or (Tree, Tree)

_F_BLOCK = ((TAU, SQRT_TAU), (SQRT_TAU, -TAU))


def tree_leaves(tree: Tree) -> tuple[int, ...]:
    if isinstance(tree, int):
        return (tree,)
    return tree_leaves(tree[0]) + tree_leaves(tree[1])


def leaf_span(tree: Tree) -> tuple[int, int]:
    leaves = tree_leaves(tree)
    return (min(leaves), max(leaves))


def internal_spans(tree: Tree) -> tuple[tuple[int, int], ...]:
    """Leaf intervals of all internal nodes, in preorder."""
    if isinstance(tree, int):
        return ()
    return (leaf_span(tree),) + internal_spans(tree[0]) + internal_spans(tree[1])


def left_comb(items: list[Tree]) -> Tree:
    tree = items[0]
    for item in items[1:]:
        tree = (tree, item)
    return tree


def chain_tree(n: int) -> Tree:
    return left_comb(list(range(1, n + 1)))


def validate_tree(tree: Tree) -> int:
    """Check the leaves are 1..n in left-to-right order; return n."""
    leaves = tree_leaves(tree)
    if leaves != tuple(range(1, len(leaves) + 1)):
        raise ValueError(f"tree leaves must be 1..n in order, got {leaves}")
    return len(leaves)


def f_symbol(a: int, b: int, c: int, d: int, e: int, f: int) -> float:
    """Amplitude between ((a b)_e c)_d and (a (b c)_f)_d.

    Nonzero only for fusion-consistent labels.  All symbols with a trivial
    charge among a, b, c, d equal 1; the all-charge-1 symbols form the
    2x2 tau block for d = 1 and the scalar 1 for d = 0.
    """
    if e not in fuse(a, b) or d not in fuse(e, c):
        return 0.0
    if f not in fuse(b, c) or d not in fuse(a, f):
        return 0.0
    if a == 1 and b == 1 and c == 1 and d == 1:
        return _F_BLOCK[e][f]
    return 1.0


class TreeBasis:
    """Labelings of a fusion tree's internal nodes, with fixed total charge.

    States are dicts interval -> charge, frozen into tuples aligned with
    ``spans`` and sorted for a deterministic order.
    """

    def __init__(self, tree: Tree, total: int):
        n = validate_tree(tree)
        self.tree = tree
        self.total = total
        self.n = n
        self.spans = internal_spans(tree)
        states = [
            tuple(labels[s] for s in self.spans) for labels in _labelings(tree, total)
        ]
        states.sort()
        self.states: tuple[tuple[int, ...], ...] = tuple(states)
        self._index = {s: i for i, s in enumerate(states)}
        self._span_pos = {s: i for i, s in enumerate(self.spans)}

    @property
    def dim(self) -> int:
        return len(self.states)

    def index(self, state: tuple[int, ...]) -> int:
        return self._index[state]

    def label(self, state: tuple[int, ...], span: tuple[int, int]) -> int:
        """Charge of the interval ``span`` in ``state`` (leaves have charge 1)."""
        if span[0] == span[1]:
            return 1
        return state[self._span_pos[span]]


def _labelings(tree: Tree, total: int) -> list[dict]:
    if isinstance(tree, int):
        return [{}] if total == 1 else []
    left, right = tree
    out = []
    span = leaf_span(tree)
    for a in (0, 1):
        for b in (0, 1):
            if total not in fuse(a, b):
                continue
            for la in _labelings(left, a):
                for lb in _labelings(right, b):
                    labels = dict(la)
                    labels.update(lb)
                    labels[span] = total
                    out.append(labels)
    return out


def _find_rotatable(tree: Tree, path=()) -> tuple | None:
    """Preorder-first node of shape (A, (B, C)), as a path of 0/1 steps."""
    if isinstance(tree, int):
        return None
    if isinstance(tree[1], tuple):
        return path
    for step in (0, 1):
        found = _find_rotatable(tree[step], path + (step,))
        if found is not None:
            return found
    return None


def _subtree(tree: Tree, path: tuple) -> Tree:
    for step in path:
        tree = tree[step]
    return tree


def _replace(tree: Tree, path: tuple, new: Tree) -> Tree:
    if not path:
        return new
    head, rest = path[0], path[1:]
    if head == 0:
        return (_replace(tree[0], rest, new), tree[1])
    return (tree[0], _replace(tree[1], rest, new))


@lru_cache(maxsize=None)
def _to_comb(tree_key: Tree, total: int) -> np.ndarray:
    """Matrix C with C[comb_state, tree_state] = <comb | tree>."""
    tree = tree_key
    basis = TreeBasis(tree, total)
    mat = np.eye(basis.dim, dtype=complex)
    while True:
        path = _find_rotatable(tree)
        if path is None:
            break
        node = _subtree(tree, path)
        a_t, (b_t, c_t) = node
        new_node = ((a_t, b_t), c_t)
        new_tree = _replace(tree, path, new_node)
        new_basis = TreeBasis(new_tree, total)
        step = np.zeros((new_basis.dim, basis.dim), dtype=complex)
        span_a, span_b, span_c = leaf_span(a_t), leaf_span(b_t), leaf_span(c_t)
        span_d = leaf_span(node)
        span_bc = leaf_span((b_t, c_t))
        span_ab = leaf_span((a_t, b_t))
        for j, st in enumerate(basis.states):
            a = basis.label(st, span_a)
            b = basis.label(st, span_b)
            c = basis.label(st, span_c)
            d = basis.label(st, span_d)
            f = basis.label(st, span_bc)
            base = {s: basis.label(st, s) for s in basis.spans if s != span_bc}
            for e in (0, 1):
                amp = f_symbol(a, b, c, d, e, f)
                if amp == 0.0:
                    continue
                new_labels = dict(base)
                new_labels[span_ab] = e
                new_state = tuple(new_labels[s] for s in new_basis.spans)
                step[new_basis.index(new_state), j] = amp
        mat = step @ mat
        tree, basis = new_tree, new_basis
    # ``tree`` is now the left comb; reorder rows to the chain-path order so
    # downstream code can compose with the fusion module directly.
    chain = enumerate_basis(basis.n, total)
    perm = np.zeros((chain.dim, basis.dim))
    for j, st in enumerate(basis.states):
        # Chain path g_1..g_n: g_1 = 1, g_k = label of span (1, k), g_n = total.
        path_labels = (1,) + tuple(
            basis.label(st, (1, k)) for k in range(2, basis.n)
        ) + (total,)
        perm[chain.index(path_labels), j] = 1.0
    out = perm @ mat
    out.setflags(write=False)
    return out


def recouple(src: Tree, dst: Tree, total: int) -> np.ndarray:
    """Unitary Q with psi_dst = Q psi_src, i.e. Q[dst_state, src_state].

    Source and destination coordinates follow TreeBasis state order.
    """
    if validate_tree(src) != validate_tree(dst):
        raise ValueError("trees must have the same leaves")
    c_src = _to_comb(src, total)
    c_dst = _to_comb(dst, total)
    return c_dst.conj().T @ c_src


def from_chain(dst: Tree, total: int) -> np.ndarray:
    """Unitary mapping chain FusionBasis coordinates to TreeBasis(dst) ones."""
    return _to_comb(dst, total).conj().T
