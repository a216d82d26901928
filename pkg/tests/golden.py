"""Operation tables transcribed by hand from the printed originals."""

Z15 = (
    (1, 2, 4, 7, 8, 11, 13, 14),
    (2, 4, 8, 14, 1, 7, 11, 13),
    (4, 8, 1, 13, 2, 14, 7, 11),
    (7, 14, 13, 4, 11, 2, 1, 8),
    (8, 1, 2, 11, 4, 13, 14, 7),
    (11, 7, 14, 2, 13, 1, 8, 4),
    (13, 11, 7, 1, 14, 8, 4, 2),
    (14, 13, 11, 8, 7, 4, 2, 1),
)

Z15_SUB = (
    (1, 4, 7, 13),
    (4, 1, 13, 7),
    (7, 13, 4, 1),
    (13, 7, 1, 4),
)

SYM3 = (
    ((0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)),
    ((0, 2, 1), (0, 1, 2), (2, 0, 1), (2, 1, 0), (1, 0, 2), (1, 2, 0)),
    ((1, 0, 2), (1, 2, 0), (0, 1, 2), (0, 2, 1), (2, 1, 0), (2, 0, 1)),
    ((1, 2, 0), (1, 0, 2), (2, 1, 0), (2, 0, 1), (0, 1, 2), (0, 2, 1)),
    ((2, 0, 1), (2, 1, 0), (0, 2, 1), (0, 1, 2), (1, 2, 0), (1, 0, 2)),
    ((2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (0, 2, 1), (0, 1, 2)),
)

ALT3 = (
    ((0, 1, 2), (1, 2, 0), (2, 0, 1)),
    ((1, 2, 0), (2, 0, 1), (0, 1, 2)),
    ((2, 0, 1), (0, 1, 2), (1, 2, 0)),
)

_C3 = ((0, 1, 2), (1, 2, 0), (2, 0, 1))
_T3 = ((0, 2, 1), (1, 0, 2), (2, 1, 0))
SYM3_QUOTIENT = (
    (_C3, _T3),
    (_T3, _C3),
)

_A, _B, _C, _D = (1, 3, 9), (2, 5, 6), (7, 8, 11), (4, 10, 12)
Z13_QUOTIENT = (
    (_A, _B, _C, _D),
    (_B, _D, _A, _C),
    (_C, _A, _D, _B),
    (_D, _C, _B, _A),
)

# the printed third row reads (2 3 4 9 1) in its first cell; 9 cannot occur
# in a permutation of 0..4, and (2 3 4 0 1) is what every other cell implies
CYCLIC_SYM5 = (
    ((0, 1, 2, 3, 4), (1, 2, 3, 4, 0), (2, 3, 4, 0, 1), (3, 4, 0, 1, 2), (4, 0, 1, 2, 3)),
    ((1, 2, 3, 4, 0), (2, 3, 4, 0, 1), (3, 4, 0, 1, 2), (4, 0, 1, 2, 3), (0, 1, 2, 3, 4)),
    ((2, 3, 4, 0, 1), (3, 4, 0, 1, 2), (4, 0, 1, 2, 3), (0, 1, 2, 3, 4), (1, 2, 3, 4, 0)),
    ((3, 4, 0, 1, 2), (4, 0, 1, 2, 3), (0, 1, 2, 3, 4), (1, 2, 3, 4, 0), (2, 3, 4, 0, 1)),
    ((4, 0, 1, 2, 3), (0, 1, 2, 3, 4), (1, 2, 3, 4, 0), (2, 3, 4, 0, 1), (3, 4, 0, 1, 2)),
)

# the printed texts, for token-level comparison of the CLI rendering
Z15_TEXT = """
  ((1 2 4 7 8 11 13 14)
   (2 4 8 14 1 7 11 13)
   (4 8 1 13 2 14 7 11)
   (7 14 13 4 11 2 1 8)
   (8 1 2 11 4 13 14 7)
   (11 7 14 2 13 1 8 4)
   (13 11 7 1 14 8 4 2)
   (14 13 11 8 7 4 2 1))
"""

Z15_SUB_TEXT = """
  ((1 4 7 13)
   (4 1 13 7)
   (7 13 4 1)
   (13 7 1 4))
"""

SYM3_TEXT = """
  (((0 1 2) (0 2 1) (1 0 2) (1 2 0) (2 0 1) (2 1 0))
   ((0 2 1) (0 1 2) (2 0 1) (2 1 0) (1 0 2) (1 2 0))
   ((1 0 2) (1 2 0) (0 1 2) (0 2 1) (2 1 0) (2 0 1))
   ((1 2 0) (1 0 2) (2 1 0) (2 0 1) (0 1 2) (0 2 1))
   ((2 0 1) (2 1 0) (0 2 1) (0 1 2) (1 2 0) (1 0 2))
   ((2 1 0) (2 0 1) (1 2 0) (1 0 2) (0 2 1) (0 1 2)))
"""

ALT3_TEXT = """
  (((0 1 2) (1 2 0) (2 0 1))
   ((1 2 0) (2 0 1) (0 1 2))
   ((2 0 1) (0 1 2) (1 2 0)))
"""

SYM3_QUOTIENT_TEXT = """
  ((((0 1 2) (1 2 0) (2 0 1)) ((0 2 1) (1 0 2) (2 1 0)))
   (((0 2 1) (1 0 2) (2 1 0)) ((0 1 2) (1 2 0) (2 0 1))))
"""

Z13_QUOTIENT_TEXT = """
  (((1 3 9) (2 5 6) (7 8 11) (4 10 12))
   ((2 5 6) (4 10 12) (1 3 9) (7 8 11))
   ((7 8 11) (1 3 9) (4 10 12) (2 5 6))
   ((4 10 12) (7 8 11) (2 5 6) (1 3 9)))
"""


def tokens(text: str):
    return text.replace("(", " ( ").replace(")", " ) ").split()
