"""Frozen reference rows for the regression checks in the verifier.

Each block of constants mirrors one published reference table; the verifier
recomputes the same numbers from scratch and diffs them against these rows.
The two-letter ids (``T4`` .. ``T7``) are the stable tokens the command line
uses to pick a table; everything else is named by content.
"""

from __future__ import annotations

TABLE_IDS: tuple[str, ...] = ("T4", "T5", "T6", "T7")

# Weight floors from which the medium-interval gap maps are total, one row
# per interval length: (L, L*(L+3)/2 + 2).
GAP_FLOOR_COLUMNS: tuple[str, ...] = ("L", "weight_floor")
GAP_FLOOR_ROWS: tuple[tuple[int, int], ...] = (
    (5, 22),
    (6, 29),
    (7, 37),
    (8, 46),
    (9, 56),
    (10, 67),
)

# Negative coefficients of surplus_series(L, 2, L) for 5 <= L <= 10 at
# weights up to the gap floor (inclusive), with the coefficient one period
# (L) later alongside: rows (L, N, value at N, value at N+L).
DIP_COLUMNS: tuple[str, ...] = ("L", "N", "value", "value_next_period")
DIP_ROWS: tuple[tuple[int, int, int, int], ...] = (
    (5, 3, -1, 2),
    (5, 7, -1, 2),
    (6, 3, -1, 1),
    (7, 3, -1, 3),
    (7, 9, -1, 10),
    (8, 3, -1, 3),
    (9, 3, -1, 4),
    (10, 3, -1, 5),
)

# Two single coefficients needed alongside the dip rows when folding the
# surplus along steps of L: surplus_series(L, 2, L)[N] == value.
DIP_EXTRA_UNITS: tuple[tuple[tuple[int, int], int], ...] = (
    ((5, 2), 1),
    ((7, 2), 1),
)

# surplus_series(3, 2, 3) coefficients at weights 0 .. 18.
SURPLUS_ROW_3_2_3: tuple[int, ...] = (
    0, 0, 1, -1, 0, -1, 1, 0, 0, -1, 1, 0, 1, -1, 2, -1, 2, 0, 2,
)

# surplus_series(4, 2, 4) coefficients at weights 0 .. 13.
SURPLUS_ROW_4_2_4: tuple[int, ...] = (
    0, 0, 1, -1, 0, 0, -1, 1, 1, -1, 1, 1, 0, 2,
)
