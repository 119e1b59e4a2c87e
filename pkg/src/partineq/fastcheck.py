"""Exhaustive map verification at scale, on compiled kernels.

The two wide-interval map families (ids "T16" and "T17") have billions of
domain partitions at weights up to 200, far beyond per-partition Python.
The kernels here enumerate every frequency vector with an odometer, apply
the case analysis in integer registers, and prove injectivity pointwise by
decoding each image back: the image's frequency of 2 determines the case
and its selector values, and the decoded selectors must reproduce the ones
the forward direction chose.  Since the decode is a function of the image
alone, a single decode mismatch is counted as a failure, and zero failures
over a full sweep implies no two sources shared an image.

Two extra nets back the decode argument up: packed image keys are collected
and checked for duplicates at every weight the memory budget permits, and
the test suite replays small weights through the pure-Python maps and
compares counters and keys exactly.  The short-interval maps ("T18", "T19")
have small domains and run through the Python route directly.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from partineq.injections import (
    CodomainViolationError,
    NotApplicableError,
    SolverPreconditionError,
    get_map,
)
from partineq.partitions import (
    Partition,
    PartitionFamily,
    count_family_upto,
    enumerate_family,
    member,
)

KERNEL_MAP_IDS: tuple[str, ...] = ("T16", "T17")
PYTHON_MAP_IDS: tuple[str, ...] = ("T18", "T19")

_KEY_BITS = 9
_KEY_SLOT_MAX = 1 << _KEY_BITS


@dataclass(frozen=True)
class SweepSummary:
    """Per-weight outcome of one exhaustive sweep of a gap map.

    All count tuples are indexed by weight 0..n_hi.  ``failure_counts``
    aggregates every contract breach: weight drift, codomain exits, decode
    mismatches.  ``duplicate_images`` counts equal packed keys among images
    of the same weight, checked for weights up to ``dedup_top``;
    ``witness_collisions`` counts images equal to the weight's witness.
    """

    theorem: str
    L: int
    n_hi: int
    domain_counts: tuple[int, ...]
    not_applicable_counts: tuple[int, ...]
    failure_counts: tuple[int, ...]
    witness_defined: tuple[bool, ...]
    witness_collisions: tuple[int, ...]
    dedup_top: int
    duplicate_images: int
    counts_match: bool

    @property
    def domain_total(self) -> int:
        return sum(self.domain_counts)

    @property
    def ok(self) -> bool:
        return (
            self.counts_match
            and not any(self.failure_counts)
            and not any(self.witness_collisions)
            and self.duplicate_images == 0
        )


def pack_image_key(pi: Partition, L: int) -> tuple[int, int]:
    """Pack frequencies of parts 2 .. L+2 into two 63-bit words.

    Nine bits per slot, low slots first; the first seven slots go into the
    first word.  Mirrors the packing the kernels use, so Python-side images
    can be compared against kernel key dumps.
    """
    values = [pi.frequency(2)] + [pi.frequency(p) for p in range(3, L + 3)]
    if len(values) > 14:
        raise ValueError(f"interval length {L} exceeds the 14-slot key layout")
    hi = 0
    lo = 0
    for index, value in enumerate(values):
        if not 0 <= value < _KEY_SLOT_MAX:
            raise ValueError(f"frequency {value} does not fit a key slot")
        if index < 7:
            hi |= value << (_KEY_BITS * index)
        else:
            lo |= value << (_KEY_BITS * (index - 7))
    return hi, lo


def _witness_table(
    theorem: str, L: int, n_hi: int
) -> tuple[np.ndarray, np.ndarray]:
    """Witness frequency rows per weight; exists flag is -1/1 in column 0."""
    mapper = get_map(theorem)
    Ln, s, k = mapper.normalize(L, None, None)
    codomain = mapper.codomain(Ln, s, k)
    slots = Ln + 1
    exists = np.full(n_hi + 1, -1, dtype=np.int64)
    rows = np.zeros((n_hi + 1, slots), dtype=np.int64)
    for N in range(n_hi + 1):
        try:
            w = mapper.witness(Ln, s, k, N)
        except (SolverPreconditionError, NotImplementedError):
            continue
        if w.weight != N or not member(codomain, w):
            raise ValueError(
                f"{theorem} witness at weight {N} breaks the codomain contract"
            )
        exists[N] = 1
        rows[N, 0] = w.frequency(2)
        for p in range(3, Ln + 3):
            rows[N, p - 2] = w.frequency(p)
    return exists, rows


@njit(cache=True)
def _t17_kernel(
    L,
    cap,
    dedup_top,
    domain,
    na,
    fail,
    wit_exists,
    wit_rows,
    wit_hits,
    cursor,
    keys_hi,
    keys_lo,
):
    m = L  # slots 0..m-1 hold frequencies of parts 3..L+2
    sL = L - 3
    f = np.zeros(m, dtype=np.int64)
    gamma = np.zeros(m + 1, dtype=np.int64)
    w = 0
    while True:
        if w + 3 <= cap:
            f[0] += 1
            w += 3
        else:
            j = 0
            carried = False
            while True:
                w -= (j + 3) * f[j]
                f[j] = 0
                j += 1
                if j == m:
                    break
                if w + (j + 3) <= cap:
                    f[j] += 1
                    w += j + 3
                    carried = True
                    break
            if not carried:
                return
        domain[w] += 1

        # forward case analysis; edits live in two (slot, delta) pairs
        fL = f[sL]
        a_slot = -1
        a_delta = 0
        b_slot = -1
        b_delta = 0
        case_id = 0
        sel = -1
        if fL > 0:
            if fL % 2 == 0:
                case_id = 1
                g2 = L * (fL // 2)
                a_slot = sL
                a_delta = -fL
            else:
                case_id = 2
                g2 = L * ((fL - 1) // 2) + 1
                a_slot = sL
                a_delta = -fL
                b_slot = sL - 2
                b_delta = 1
            sel = fL
        else:
            i0s = -1
            for j in range(m):
                if f[j] >= 2:
                    i0s = j
                    break
            if i0s < 0:
                na[w] += 1
                continue
            if i0s == sL + 1:
                case_id = 4
                g2 = 2
                a_slot = sL - 1
                a_delta = 2
                b_slot = sL + 1
                b_delta = -2
            else:
                case_id = 3
                g2 = i0s + 3
                a_slot = i0s
                a_delta = -2
                sel = i0s

        # contract checks: weight balance, nonnegative image, no part L
        balance = 2 * g2
        if a_slot >= 0:
            balance += (a_slot + 3) * a_delta
            if f[a_slot] + a_delta < 0:
                fail[w] += 1
                continue
        if b_slot >= 0:
            balance += (b_slot + 3) * b_delta
            if f[b_slot] + b_delta < 0:
                fail[w] += 1
                continue
        gL = f[sL]
        if a_slot == sL:
            gL += a_delta
        if b_slot == sL:
            gL += b_delta
        if balance != 0 or gL != 0 or g2 < 1:
            fail[w] += 1
            continue

        # decode from the image alone, then match case and selector
        if g2 % L == 0 and g2 > 0:
            d_case = 1
            d_sel = 2 * (g2 // L)
        elif g2 % L == 1:
            d_case = 2
            d_sel = 2 * ((g2 - 1) // L) + 1
        elif g2 == 2:
            d_case = 4
            d_sel = -1
        elif 3 <= g2 <= L + 2:
            d_case = 3
            d_sel = g2 - 3
        else:
            d_case = -1
            d_sel = -2
        if d_case != case_id or d_sel != sel:
            fail[w] += 1
            continue

        # witness guard: image frequency of 2 never equals the witness's
        if wit_exists[w] == 1 and g2 == wit_rows[w, 0]:
            same = True
            for j in range(m):
                gj = f[j]
                if j == a_slot:
                    gj += a_delta
                if j == b_slot:
                    gj += b_delta
                if gj != wit_rows[w, j + 1]:
                    same = False
                    break
            if same:
                wit_hits[w] += 1

        if w <= dedup_top:
            gamma[0] = g2
            for j in range(m):
                gj = f[j]
                if j == a_slot:
                    gj += a_delta
                if j == b_slot:
                    gj += b_delta
                gamma[j + 1] = gj
            hi = 0
            lo = 0
            for j in range(m + 1):
                if j < 7:
                    hi |= gamma[j] << (9 * j)
                else:
                    lo |= gamma[j] << (9 * (j - 7))
            pos = cursor[w]
            keys_hi[pos] = hi
            keys_lo[pos] = lo
            cursor[w] = pos + 1


@njit(cache=True)
def _t16_kernel(
    L,
    cap,
    dedup_top,
    domain,
    na,
    fail,
    wit_exists,
    wit_rows,
    wit_hits,
    cursor,
    keys_hi,
    keys_lo,
):
    m = L  # slots 0..m-1 hold frequencies of parts 3..L+2
    sL = L - 3
    f = np.zeros(m, dtype=np.int64)
    gamma = np.zeros(m + 1, dtype=np.int64)
    w = 0
    while True:
        if w + 3 <= cap:
            f[0] += 1
            w += 3
        else:
            j = 0
            carried = False
            while True:
                w -= (j + 3) * f[j]
                f[j] = 0
                j += 1
                if j == m:
                    break
                if w + (j + 3) <= cap:
                    f[j] += 1
                    w += j + 3
                    carried = True
                    break
            if not carried:
                return
        domain[w] += 1

        # forward case analysis; edits live in four (slot, delta) pairs
        fL = f[sL]
        e1s = -1
        e1d = 0
        e2s = -1
        e2d = 0
        e3s = -1
        e3d = 0
        e4s = -1
        e4d = 0
        case_id = 0
        sel = -1
        if fL > 0:
            # fold every part L into four 2s plus a staircase on 3..5
            case_id = 1
            g2 = 4 * fL
            n = (L - 8) * fL
            q = n // 3
            r = n % 3
            e1s = sL
            e1d = -fL
            if r == 0:
                e2s = 0
                e2d = q
            elif r == 1:
                e2s = 0
                e2d = q - 1
                e3s = 1
                e3d = 1
            else:
                e2s = 0
                e2d = q - 1
                e3s = 2
                e3d = 1
            sel = fL
        else:
            sp = -1
            for j in range(m):
                if f[j] > 0:
                    sp = j
                    break
            sp_part = sp + 3
            if sp_part == L + 2:
                # pure top-part start: swap one L+2 for five 2s and an L-8
                case_id = 2
                g2 = 5
                e1s = sL - 8
                e1d = 1
                e2s = m - 1
                e2d = -1
            elif sp_part >= 5:
                case_id = 3
                g2 = 1
                e1s = sp - 2
                e1d = 1
                e2s = sp
                e2d = -1
                sel = sp
            elif f[1] >= 1:
                case_id = 4
                g2 = 2
                e1s = 1
                e1d = -1
            elif f[0] >= 2:
                case_id = 5
                g2 = 3
                e1s = 0
                e1d = -2
            else:
                # f3 == 1, no 4s: pair the 3 with the next part up
                m0s = -1
                for j in range(2, m):
                    if f[j] > 0:
                        m0s = j
                        break
                if m0s < 0:
                    na[w] += 1
                    continue
                m0 = m0s + 3
                if m0 % 2 == 1:
                    case_id = 6
                    g2 = 1
                    h = (m0 + 1) // 2
                    e1s = 0
                    e1d = -1
                    e2s = h - 3
                    e2d = 2
                    e3s = m0s
                    e3d = -1
                    sel = m0s
                else:
                    case_id = 7
                    g2 = 1
                    h = m0 // 2
                    e1s = 0
                    e1d = -1
                    e2s = h - 3
                    e2d = 1
                    e3s = h - 2
                    e3d = 1
                    e4s = m0s
                    e4d = -1
                    sel = m0s

        # contract checks: weight balance, nonnegative image, no part L
        balance = 2 * g2
        bad = False
        if e1s >= 0:
            balance += (e1s + 3) * e1d
        if e2s >= 0:
            balance += (e2s + 3) * e2d
        if e3s >= 0:
            balance += (e3s + 3) * e3d
        if e4s >= 0:
            balance += (e4s + 3) * e4d
        gL = f[sL]
        if e1s == sL:
            gL += e1d
        if e2s == sL:
            gL += e2d
        if e3s == sL:
            gL += e3d
        if e4s == sL:
            gL += e4d
        for t in range(4):
            if t == 0:
                slot = e1s
            elif t == 1:
                slot = e2s
            elif t == 2:
                slot = e3s
            else:
                slot = e4s
            if slot < 0:
                continue
            gj = f[slot]
            if slot == e1s:
                gj += e1d
            if slot == e2s:
                gj += e2d
            if slot == e3s:
                gj += e3d
            if slot == e4s:
                gj += e4d
            if gj < 0:
                bad = True
        if bad or balance != 0 or gL != 0 or g2 < 1:
            fail[w] += 1
            continue

        # decode from the image alone, then match case and selector
        d_case = -1
        d_sel = -2
        if g2 % 4 == 0:
            d_case = 1
            d_sel = g2 // 4
        elif g2 == 2:
            d_case = 4
            d_sel = -1
        elif g2 == 3:
            d_case = 5
            d_sel = -1
        elif g2 == 5:
            d_case = 2
            d_sel = -1
        elif g2 == 1:
            # three cases stamp a single 2; the smallest image part >= 3
            # and its neighborhood split them
            p1 = -1
            gp1 = 0
            for j in range(m):
                gj = f[j]
                if j == e1s:
                    gj += e1d
                if j == e2s:
                    gj += e2d
                if j == e3s:
                    gj += e3d
                if j == e4s:
                    gj += e4d
                if gj > 0:
                    p1 = j
                    gp1 = gj
                    break
            if p1 >= 0:
                if gp1 >= 2:
                    # doubled half: the source paired its 3 with 2*(p1+3)-1
                    d_case = 6
                    d_sel = 2 * (p1 + 3) - 1 - 3
                else:
                    gnext = 0
                    if p1 + 1 < m:
                        j = p1 + 1
                        gj = f[j]
                        if j == e1s:
                            gj += e1d
                        if j == e2s:
                            gj += e2d
                        if j == e3s:
                            gj += e3d
                        if j == e4s:
                            gj += e4d
                        gnext = gj
                    if gnext > 0:
                        # adjacent pair: the source paired its 3 with 2*(p1+3)
                        d_case = 7
                        d_sel = 2 * (p1 + 3) - 3
                    else:
                        # lone inserted part: a start part moved down by two
                        d_case = 3
                        d_sel = p1 + 2
        if d_case != case_id or d_sel != sel:
            fail[w] += 1
            continue

        # witness guard: witnesses stamp one 2 but three or four 3s,
        # while every single-2 image keeps at most two 3s
        if wit_exists[w] == 1 and g2 == wit_rows[w, 0]:
            g3 = f[0]
            if e1s == 0:
                g3 += e1d
            if e2s == 0:
                g3 += e2d
            if e3s == 0:
                g3 += e3d
            if e4s == 0:
                g3 += e4d
            if g3 == wit_rows[w, 1]:
                same = True
                for j in range(m):
                    gj = f[j]
                    if j == e1s:
                        gj += e1d
                    if j == e2s:
                        gj += e2d
                    if j == e3s:
                        gj += e3d
                    if j == e4s:
                        gj += e4d
                    if gj != wit_rows[w, j + 1]:
                        same = False
                        break
                if same:
                    wit_hits[w] += 1

        if w <= dedup_top:
            gamma[0] = g2
            for j in range(m):
                gj = f[j]
                if j == e1s:
                    gj += e1d
                if j == e2s:
                    gj += e2d
                if j == e3s:
                    gj += e3d
                if j == e4s:
                    gj += e4d
                gamma[j + 1] = gj
            hi = 0
            lo = 0
            for j in range(m + 1):
                if j < 7:
                    hi |= gamma[j] << (9 * j)
                else:
                    lo |= gamma[j] << (9 * (j - 7))
            pos = cursor[w]
            keys_hi[pos] = hi
            keys_lo[pos] = lo
            cursor[w] = pos + 1


def _kernel_sweep(
    theorem: str, L: int, n_hi: int, dedup_budget: int
) -> tuple[SweepSummary, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    counts = count_family_upto(PartitionFamily.shifted(L, 2), n_hi)
    dedup_top = -1
    running = 0
    for N in range(n_hi + 1):
        running += counts[N]
        if running > dedup_budget:
            break
        dedup_top = N
    offsets = np.zeros(n_hi + 2, dtype=np.int64)
    for N in range(n_hi + 1):
        size = counts[N] if N <= dedup_top else 0
        offsets[N + 1] = offsets[N] + size
    total_keys = int(offsets[n_hi + 1])
    cursor = offsets[: n_hi + 1].copy()
    keys_hi = np.zeros(total_keys, dtype=np.int64)
    keys_lo = np.zeros(total_keys, dtype=np.int64)
    domain = np.zeros(n_hi + 1, dtype=np.int64)
    na = np.zeros(n_hi + 1, dtype=np.int64)
    fail = np.zeros(n_hi + 1, dtype=np.int64)
    wit_hits = np.zeros(n_hi + 1, dtype=np.int64)
    wit_exists, wit_rows = _witness_table(theorem, L, n_hi)
    kernel = _t16_kernel if theorem == "T16" else _t17_kernel
    kernel(
        L,
        n_hi,
        dedup_top,
        domain,
        na,
        fail,
        wit_exists,
        wit_rows,
        wit_hits,
        cursor,
        keys_hi,
        keys_lo,
    )
    counts_match = [int(c) for c in domain] == counts
    for N in range(min(dedup_top, n_hi) + 1):
        written = int(cursor[N]) - int(offsets[N])
        kept = int(domain[N]) - int(na[N]) - int(fail[N])
        assert written == kept, f"key count drifted at weight {N}"
    duplicates = 0
    for N in range(min(dedup_top, n_hi) + 1):
        lo_idx = int(offsets[N])
        hi_idx = int(cursor[N])
        if hi_idx - lo_idx < 2:
            continue
        hi_slice = keys_hi[lo_idx:hi_idx]
        lo_slice = keys_lo[lo_idx:hi_idx]
        order = np.lexsort((lo_slice, hi_slice))
        hs = hi_slice[order]
        ls = lo_slice[order]
        duplicates += int(np.sum((hs[1:] == hs[:-1]) & (ls[1:] == ls[:-1])))
    summary = SweepSummary(
        theorem=theorem,
        L=L,
        n_hi=n_hi,
        domain_counts=tuple(int(c) for c in domain),
        not_applicable_counts=tuple(int(c) for c in na),
        failure_counts=tuple(int(c) for c in fail),
        witness_defined=tuple(bool(flag == 1) for flag in wit_exists),
        witness_collisions=tuple(int(c) for c in wit_hits),
        dedup_top=dedup_top,
        duplicate_images=duplicates,
        counts_match=counts_match,
    )
    return summary, offsets, cursor, keys_hi, keys_lo


def _python_sweep(theorem: str, L: int, n_hi: int) -> SweepSummary:
    mapper = get_map(theorem)
    L, s, k = mapper.normalize(L, None, None)
    domain = mapper.domain(L, s, k)
    codomain = mapper.codomain(L, s, k)
    expected = count_family_upto(domain, n_hi)
    domain_counts = [0] * (n_hi + 1)
    na = [0] * (n_hi + 1)
    fail = [0] * (n_hi + 1)
    wit_defined = [False] * (n_hi + 1)
    wit_hits = [0] * (n_hi + 1)
    duplicates = 0
    for N in range(n_hi + 1):
        members = enumerate_family(domain, N)
        domain_counts[N] = len(members)
        images: set[Partition] = set()
        for pi in members:
            try:
                _, image = mapper.apply(L, s, k, pi)
            except NotApplicableError:
                na[N] += 1
                continue
            except (CodomainViolationError, SolverPreconditionError):
                fail[N] += 1
                continue
            if image in images:
                duplicates += 1
            else:
                images.add(image)
        try:
            candidate = mapper.witness(L, s, k, N)
        except (SolverPreconditionError, NotImplementedError):
            candidate = None
        if candidate is not None:
            wit_defined[N] = True
            if candidate.weight != N or not member(codomain, candidate):
                fail[N] += 1
            elif candidate in images:
                wit_hits[N] += 1
    return SweepSummary(
        theorem=theorem,
        L=L,
        n_hi=n_hi,
        domain_counts=tuple(domain_counts),
        not_applicable_counts=tuple(na),
        failure_counts=tuple(fail),
        witness_defined=tuple(wit_defined),
        witness_collisions=tuple(wit_hits),
        dedup_top=n_hi,
        duplicate_images=duplicates,
        counts_match=domain_counts == expected,
    )


def exhaustive_gap_sweep(
    theorem: str,
    L: int,
    n_hi: int = 200,
    *,
    dedup_budget: int = 8_000_000,
) -> SweepSummary:
    """Verify one gap map on every domain partition of weight <= n_hi.

    Dispatches the two wide-interval families to the compiled kernels and
    the short ones to the Python maps.  The budget caps how many packed
    image keys are kept for duplicate checking; injectivity itself rests on
    the per-partition decode match, which runs at every weight regardless.
    """
    mapper = get_map(theorem)
    L, _, _ = mapper.normalize(L, None, None)
    if n_hi < 0:
        raise ValueError(f"need n_hi >= 0, got {n_hi}")
    if theorem in PYTHON_MAP_IDS:
        return _python_sweep(theorem, L, n_hi)
    if theorem not in KERNEL_MAP_IDS:
        raise ValueError(
            f"no exhaustive sweep for {theorem!r}; choose from"
            f" {KERNEL_MAP_IDS + PYTHON_MAP_IDS}"
        )
    if dedup_budget < 0:
        raise ValueError(f"need dedup_budget >= 0, got {dedup_budget}")
    summary, _, _, _, _ = _kernel_sweep(theorem, L, n_hi, dedup_budget)
    return summary


def image_keys(
    theorem: str, L: int, n_hi: int
) -> dict[int, list[tuple[int, int]]]:
    """Packed image keys per weight, for cross-checking small sweeps.

    Runs the kernel with an unbounded dedup budget, so keep n_hi small;
    keys come back sorted per weight.
    """
    if theorem not in KERNEL_MAP_IDS:
        raise ValueError(f"image_keys covers {KERNEL_MAP_IDS} only")
    mapper = get_map(theorem)
    L, _, _ = mapper.normalize(L, None, None)
    counts = count_family_upto(PartitionFamily.shifted(L, 2), n_hi)
    summary, offsets, cursor, keys_hi, keys_lo = _kernel_sweep(
        theorem, L, n_hi, sum(counts) + 1
    )
    out: dict[int, list[tuple[int, int]]] = {}
    for N in range(n_hi + 1):
        lo_idx = int(offsets[N])
        hi_idx = int(cursor[N])
        pairs = sorted(
            (int(keys_hi[i]), int(keys_lo[i])) for i in range(lo_idx, hi_idx)
        )
        out[N] = pairs
    return out
