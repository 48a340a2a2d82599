"""Reference values of σ(1..100), kept as literals so ``verify --check table100``
needs no input files.
"""

SIGMA_1_TO_100 = (
    1, 3, 4, 7, 6, 12, 8, 15, 13, 18,  # 1-10
    12, 28, 14, 24, 24, 31, 18, 39, 20, 42,  # 11-20
    32, 36, 24, 60, 31, 42, 40, 56, 30, 72,  # 21-30
    32, 63, 48, 54, 48, 91, 38, 60, 56, 90,  # 31-40
    42, 96, 44, 84, 78, 72, 48, 124, 57, 93,  # 41-50
    72, 98, 54, 120, 72, 120, 80, 90, 60, 168,  # 51-60
    62, 96, 104, 127, 84, 144, 68, 126, 96, 144,  # 61-70
    72, 195, 74, 114, 124, 140, 96, 168, 80, 186,  # 71-80
    121, 126, 84, 224, 108, 132, 120, 180, 90, 234,  # 81-90
    112, 168, 128, 144, 120, 252, 98, 171, 156, 217,  # 91-100
)

assert len(SIGMA_1_TO_100) == 100
