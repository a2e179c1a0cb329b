"""Pure-Python kernels: zigzag pivot scan and alternating-chain enumeration.

Reference implementations for the compiled module in ``_speedups.pyx``.
Both backends must stay behaviorally identical; ``tests/test_kernels.py``
checks them against each other on random inputs.
"""

from __future__ import annotations

import numpy as np

KIND_HIGH = 1
KIND_LOW = -1


def zigzag(highs: np.ndarray, lows: np.ndarray, threshold: float):
    """Single forward pass extracting alternating swing pivots.

    A pivot is confirmed once price reverses from the running extreme by at
    least ``threshold`` (fraction of the extreme).  The scan is strictly
    online: state at candle i depends only on candles [0, i], so prefix
    replays reproduce historical pivot states exactly.

    Returns three parallel int64/int8 arrays: candle index of each pivot,
    pivot kind (+1 swing high, -1 swing low), and the candle index at which
    the pivot reached its final confirmed state (-1 if never confirmed).

    Rules beyond the basic reversal scan, all needed to keep the pivot
    invariants (strict alternation, strictly increasing indices, minimum
    move between neighbors, pivot price = exact extreme between neighbors):

    * A leg flips only when the standing extreme is itself at least a
      threshold move away from the previous pivot.
    * If price exceeds the newest pivot before the next leg qualifies, the
      pivot is relocated onto the new extreme and loses its confirmation
      until the move from the relocated price reaches the threshold again.
    * Extreme ties keep the earliest candle.
    * A directionless series (no threshold move either way) yields a single
      unconfirmed low at the earliest running minimum.
    """
    n = len(highs)
    idx: list[int] = []
    kind: list[int] = []
    conf: list[int] = []

    up_mult = 1.0 + threshold
    dn_mult = 1.0 - threshold

    # Establish the first pivot: track both running extremes until price
    # reverses by >= threshold from one of them.
    dmax_i, dmax_p = 0, highs[0]
    dmin_i, dmin_p = 0, lows[0]
    direction = 0
    start = n
    for i in range(n):
        if highs[i] > dmax_p:
            dmax_i, dmax_p = i, highs[i]
        if lows[i] < dmin_p:
            dmin_i, dmin_p = i, lows[i]
        up = highs[i] >= dmin_p * up_mult
        down = lows[i] <= dmax_p * dn_mult
        if up and down:
            # one candle triggers both ways: earlier anchor wins, ties start upward
            if dmin_i <= dmax_i:
                down = False
            else:
                up = False
        if up:
            idx.append(dmin_i)
            kind.append(KIND_LOW)
            conf.append(i)
            direction = 1
            piv_i, piv_p = dmin_i, dmin_p
        elif down:
            idx.append(dmax_i)
            kind.append(KIND_HIGH)
            conf.append(i)
            direction = -1
            piv_i, piv_p = dmax_i, dmax_p
        else:
            continue
        if i > piv_i:
            ext_i = i
            ext_p = highs[i] if direction == 1 else lows[i]
        else:
            ext_i = -1
            ext_p = 0.0
        start = i
        break

    if direction == 0:
        return (
            np.array([dmin_i], dtype=np.int64),
            np.array([KIND_LOW], dtype=np.int8),
            np.array([-1], dtype=np.int64),
        )

    # Main scan.  Each candle is re-dispatched until no transition applies,
    # so a single wide-range bar can complete a flip and immediately anchor
    # (or relocate) the next pivot.
    for i in range(start, n):
        while True:
            if direction == 1:
                if ext_i >= 0 and ext_p >= piv_p * up_mult and lows[i] <= ext_p * dn_mult:
                    idx.append(ext_i)
                    kind.append(KIND_HIGH)
                    conf.append(i)
                    piv_i, piv_p = ext_i, ext_p
                    if i > piv_i:
                        ext_i, ext_p = i, lows[i]
                    else:
                        ext_i, ext_p = -1, 0.0
                    direction = -1
                    continue
                if lows[i] < piv_p:
                    idx[-1] = i
                    conf[-1] = -1
                    piv_i, piv_p = i, lows[i]
                    ext_i, ext_p = -1, 0.0
                elif i > piv_i and (ext_i < 0 or highs[i] > ext_p):
                    ext_i, ext_p = i, highs[i]
                    if conf[-1] < 0 and ext_p >= piv_p * up_mult:
                        conf[-1] = i
                    continue
                break
            else:
                if ext_i >= 0 and ext_p <= piv_p * dn_mult and highs[i] >= ext_p * up_mult:
                    idx.append(ext_i)
                    kind.append(KIND_LOW)
                    conf.append(i)
                    piv_i, piv_p = ext_i, ext_p
                    if i > piv_i:
                        ext_i, ext_p = i, highs[i]
                    else:
                        ext_i, ext_p = -1, 0.0
                    direction = 1
                    continue
                if highs[i] > piv_p:
                    idx[-1] = i
                    conf[-1] = -1
                    piv_i, piv_p = i, highs[i]
                    ext_i, ext_p = -1, 0.0
                elif i > piv_i and (ext_i < 0 or lows[i] < ext_p):
                    ext_i, ext_p = i, lows[i]
                    if conf[-1] < 0 and ext_p <= piv_p * dn_mult:
                        conf[-1] = i
                    continue
                break

    # Trailing provisional extreme, kept only if it clears the minimum move.
    if ext_i >= 0 and abs(ext_p - piv_p) >= threshold * piv_p:
        idx.append(ext_i)
        kind.append(KIND_HIGH if direction == 1 else KIND_LOW)
        conf.append(-1)

    return (
        np.array(idx, dtype=np.int64),
        np.array(kind, dtype=np.int8),
        np.array(conf, dtype=np.int64),
    )


def alternating_chains(candle_idx: np.ndarray, kinds: np.ndarray, length: int,
                       min_span: int, max_span: int):
    """Enumerate pivot-position chains with alternating kinds.

    Returns an int64 array of shape (n_chains, length) holding positions
    into the pivot arrays, in lexicographic order.  A chain qualifies when
    consecutive picks have opposite kinds and the candle-index span of the
    whole chain lies in [min_span, max_span].
    """
    n = len(candle_idx)
    out: list[list[int]] = []
    if length < 2 or n < length:
        return np.empty((0, length), dtype=np.int64)

    path = [0] * length

    def extend(depth: int) -> None:
        prev = path[depth - 1]
        first_idx = candle_idx[path[0]]
        for nxt in range(prev + 1, n):
            if candle_idx[nxt] - first_idx > max_span:
                break
            if kinds[nxt] == kinds[prev]:
                continue
            path[depth] = nxt
            if depth + 1 == length:
                if candle_idx[nxt] - first_idx >= min_span:
                    out.append(path.copy())
            else:
                extend(depth + 1)

    for start in range(n - length + 1):
        path[0] = start
        extend(1)

    if not out:
        return np.empty((0, length), dtype=np.int64)
    return np.array(out, dtype=np.int64)
