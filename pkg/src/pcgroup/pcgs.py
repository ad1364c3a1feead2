"""
Polycyclic presentations read off an arbitrary finite p-group.

The generating sequence refines the lower exponent-p central series
P_1 = G, P_{j+1} = [P_j, G] P_j^p: a basis of each elementary abelian layer
P_j / P_{j+1} is lifted to G, so every tail <g_i, ..., g_n> is normal and has
index p in the previous one. Power and conjugate words are then found by
sifting through the tails.
"""
import numpy as np

from src.pcgroup.base import as_index_array
from src.pcgroup.presentation import PcPresentation
from src.pcgroup.words import normal_word


def _exponent_p_central_series(group):
    gens = group.generators()
    layers = [(group.elements(), list(gens))]
    while layers[-1][0].size > 1:
        elements, layer_gens = layers[-1]
        seeds = [int(group.power(x, group.prime)) for x in layer_gens]
        seeds += [int(group.commutator(x, g)) for x in layer_gens for g in gens]
        below, below_gens = group.normal_closure([s for s in seeds if s != 0], gens)
        layers.append((below, below_gens))
    return layers


def _layer_basis(group, layer_gens, below_gens):
    basis = []
    span = group.closure(below_gens)
    for x in layer_gens:
        if not np.isin(x, span):
            basis.append(int(x))
            span = group.closure(below_gens + basis)
    return basis


def pc_sequence(group):
    """Generating sequence g_1..g_n of relative order p, top down."""
    layers = _exponent_p_central_series(group)
    sequence = []
    for (_, layer_gens), (_, below_gens) in zip(layers, layers[1:]):
        sequence += _layer_basis(group, layer_gens, below_gens)
    return sequence


def _tail_masks(group, sequence):
    masks = [None] * (len(sequence) + 1)
    elements = np.zeros(1, dtype=np.int64)
    mask = np.zeros(group.order, dtype=bool)
    mask[0] = True
    masks[len(sequence)] = mask
    for i in reversed(range(len(sequence))):
        g = sequence[i]
        cosets = [elements]
        shift = elements
        for _ in range(group.prime - 1):
            shift = as_index_array(group.mul(g, shift))
            cosets.append(shift)
        elements = np.unique(np.concatenate(cosets))
        mask = np.zeros(group.order, dtype=bool)
        mask[elements] = True
        masks[i] = mask
    return masks


def sift(group, sequence, masks, h):
    """Exponents of h in the normal form g_1^e_1 ... g_n^e_n."""
    exponents = []
    for i, g in enumerate(sequence):
        inverse = int(group.inv(g))
        for e in range(group.prime):
            if masks[i + 1][h]:
                exponents.append(e)
                break
            h = int(group.mul(inverse, h))
        else:
            raise ValueError(f"element {h} does not sift through generator {i}")
    return exponents


def pc_presentation_of(group, prefix="g"):
    """A PcPresentation of ``group`` plus the element of ``group`` behind each generator."""
    sequence = pc_sequence(group)
    masks = _tail_masks(group, sequence)
    names = [f"{prefix}{i + 1}" for i in range(len(sequence))]
    powers = []
    conjugates = {}
    for i, g in enumerate(sequence):
        powers.append(normal_word(names, sift(group, sequence, masks, int(group.power(g, group.prime)))))
        for j in range(i + 1, len(sequence)):
            image = int(group.conjugate(sequence[j], g))
            if image != sequence[j]:
                conjugates[(j, i)] = normal_word(names, sift(group, sequence, masks, image))
    presentation = PcPresentation(prime=group.prime, names=names, exponents=[1] * len(sequence),
                                  powers=powers, conjugates=conjugates)
    return presentation, sequence
