"""
Utility functions for bipartite matching.
"""

from typing import Dict, List, Optional, Sequence


def maximum_matching(adjacency: Sequence[Sequence[int]], right_size: int) -> Dict[int, int]:
    """
    Maximum bipartite matching by repeated augmenting paths.

    Left vertices are 0..len(adjacency)-1, right vertices 0..right_size-1;
    adjacency[i] lists the right neighbours of left vertex i. O(V * E), which
    is O(n^3) for the n x n graphs of section membership.

    Args:
        adjacency: Right neighbours of every left vertex
        right_size: Number of right vertices

    Returns:
        Dict mapping every matched left vertex to its right partner
    """
    # owner[j] = left vertex matched to right vertex j
    owner: List[Optional[int]] = [None] * right_size

    def augment(left: int, seen: List[bool]) -> bool:
        for right in adjacency[left]:
            if seen[right]:
                continue
            seen[right] = True
            if owner[right] is None or augment(owner[right], seen):
                owner[right] = left
                return True
        return False

    for left in range(len(adjacency)):
        augment(left, [False] * right_size)

    return {left: right for right, left in enumerate(owner) if left is not None}


def has_perfect_matching(adjacency: Sequence[Sequence[int]], right_size: int) -> bool:
    """
    Check whether every left vertex can be matched.

    Args:
        adjacency: Right neighbours of every left vertex
        right_size: Number of right vertices

    Returns:
        bool: True if the maximum matching covers the left side
    """
    if len(adjacency) > right_size:
        return False
    # Hall: an isolated left vertex rules a perfect matching out at once
    if any(not neighbours for neighbours in adjacency):
        return False
    return len(maximum_matching(adjacency, right_size)) == len(adjacency)
