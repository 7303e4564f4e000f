"""Reference tables: tabulated weight vectors and expected classifications."""

# rows: (label, word, generating_word, mp, prime, weight_vector)
# weight vectors are in the package variable order (subsets by size, then lex);
# generating_word is the orthogonality-class member whose 2-adic weights
# reproduce the tabulated vector (it differs from word for two rows).

STRING_ROWS_5 = (
    ("S1", "1213214321", "1213214321", True, True,
     (0, 512, 384, 112, 15, 0, 256, 96, 14, 768, 608, 526, 480, 398, 126, 0, 64, 12, 320, 268, 108, 832, 780, 620, 492, 0, 8, 72, 328, 840)),
    ("S2", "1213243212", "1213243212", True, True,
     (0, 512, 384, 98, 30, 0, 256, 96, 28, 768, 608, 540, 480, 412, 123, 0, 64, 24, 320, 280, 120, 832, 792, 632, 504, 0, 16, 80, 336, 848)),
    ("S3", "1213432312", "1213432312", False, False,
     (0, 512, 384, 74, 58, 0, 256, 72, 56, 768, 584, 568, 456, 440, 111, 0, 64, 48, 320, 304, 108, 832, 816, 620, 492, 0, 32, 96, 352, 864)),
    ("S4", "1214321432", "1214321432", False, False,
     (0, 512, 384, 56, 120, 0, 256, 48, 112, 768, 560, 624, 432, 496, 63, 0, 32, 96, 288, 352, 54, 800, 864, 566, 438, 0, 64, 36, 292, 804)),
    ("S5", "1232124321", "1232124321", True, True,
     (0, 512, 288, 224, 15, 0, 256, 192, 14, 768, 704, 526, 432, 302, 238, 0, 128, 12, 384, 268, 204, 896, 780, 716, 444, 0, 8, 136, 392, 904)),
    ("S6", "1232143213", "1232143213", True, True,
     (0, 512, 288, 224, 30, 0, 256, 192, 28, 768, 704, 540, 420, 316, 252, 0, 128, 24, 384, 280, 216, 896, 792, 728, 437, 0, 16, 144, 400, 912)),
    ("S7", "1232432123", "1232432123", True, True,
     (0, 512, 260, 196, 60, 0, 256, 192, 56, 768, 704, 568, 390, 310, 246, 0, 128, 48, 384, 304, 240, 896, 816, 752, 423, 0, 32, 160, 416, 928)),
    ("S8", "1234321232", "1234321232", False, False,
     (0, 512, 264, 152, 120, 0, 256, 144, 112, 768, 656, 624, 396, 364, 219, 0, 128, 96, 384, 352, 210, 896, 864, 722, 462, 0, 64, 192, 448, 960)),
    ("S9", "1234321323", "1234321323", False, False,
     (0, 512, 264, 152, 120, 0, 256, 144, 112, 768, 656, 624, 394, 362, 222, 0, 128, 96, 384, 352, 212, 896, 864, 724, 459, 0, 64, 192, 448, 960)),
    ("S10", "1243212432", "1243212432", False, False,
     (0, 512, 272, 112, 240, 0, 256, 96, 224, 768, 608, 736, 344, 472, 119, 0, 64, 192, 320, 448, 102, 832, 960, 614, 350, 0, 128, 68, 324, 836)),
    ("S11", "1243214323", "1243214323", False, False,
     (0, 512, 272, 112, 240, 0, 256, 96, 224, 768, 608, 736, 338, 466, 126, 0, 64, 192, 320, 448, 108, 832, 960, 620, 347, 0, 128, 72, 328, 840)),
    ("S12", "1321324321", "1321324321", False, False,
     (0, 512, 192, 448, 15, 0, 128, 384, 14, 640, 896, 526, 240, 206, 462, 0, 256, 12, 160, 140, 396, 672, 652, 908, 252, 0, 8, 264, 168, 680)),
    ("S13", "1321343231", "1321343231", False, False,
     (0, 512, 192, 448, 29, 0, 128, 384, 28, 640, 896, 540, 228, 220, 476, 0, 256, 24, 160, 152, 408, 672, 664, 920, 246, 0, 16, 272, 176, 688)),
    ("S14", "1321432143", "1321432143", False, False,
     (0, 512, 192, 448, 60, 0, 128, 384, 56, 640, 896, 568, 216, 248, 504, 0, 256, 48, 144, 176, 432, 656, 688, 944, 219, 0, 32, 288, 146, 658)),
    ("S15", "1323432123", "1323432123", False, False,
     (0, 512, 132, 388, 60, 0, 128, 384, 56, 640, 896, 568, 198, 182, 438, 0, 256, 48, 192, 176, 432, 704, 688, 944, 231, 0, 32, 288, 224, 736)),
    ("S16", "1324321243", "1324321243", False, False,
     (0, 512, 136, 392, 120, 0, 128, 384, 112, 640, 896, 624, 172, 236, 492, 0, 256, 96, 160, 224, 480, 672, 736, 992, 175, 0, 64, 320, 162, 674)),
    ("S17", "1343231243", "1343213243", False, False,
     (0, 512, 48, 304, 240, 0, 32, 288, 224, 544, 800, 736, 60, 188, 444, 0, 256, 192, 40, 168, 424, 552, 680, 936, 63, 0, 128, 384, 42, 554)),
    ("S18", "2123214321", "2123214321", True, True,
     (0, 256, 768, 112, 15, 0, 512, 96, 14, 384, 352, 270, 864, 782, 126, 0, 64, 12, 576, 524, 108, 448, 396, 364, 876, 0, 8, 72, 584, 456)),
    ("S19", "2123243212", "2123243212", True, True,
     (0, 256, 768, 98, 30, 0, 512, 96, 28, 384, 352, 284, 864, 796, 123, 0, 64, 24, 576, 536, 120, 448, 408, 376, 888, 0, 16, 80, 592, 464)),
    ("S20", "2123432132", "2123432132", False, False,
     (0, 256, 768, 76, 60, 0, 512, 72, 56, 384, 328, 312, 840, 824, 111, 0, 64, 48, 576, 560, 106, 448, 432, 362, 874, 0, 32, 96, 608, 480)),
    ("S21", "2132134321", "2132134321", True, True,
     (0, 256, 768, 224, 15, 0, 512, 192, 14, 320, 448, 270, 960, 782, 238, 0, 128, 12, 640, 524, 204, 336, 332, 460, 972, 0, 8, 136, 648, 344)),
    ("S22", "2132143214", "2132143214", True, True,
     (0, 256, 768, 224, 30, 0, 512, 192, 28, 320, 448, 284, 960, 796, 252, 0, 128, 24, 640, 536, 216, 328, 344, 472, 984, 0, 16, 144, 656, 329)),
    ("S23", "2132343212", "2132343212", True, True,
     (0, 256, 768, 194, 30, 0, 512, 192, 28, 320, 448, 284, 960, 796, 219, 0, 128, 24, 640, 536, 216, 352, 344, 472, 984, 0, 16, 144, 656, 368)),
    ("S24", "2132432124", "2132432124", True, True,
     (0, 256, 768, 196, 60, 0, 512, 192, 56, 320, 448, 312, 960, 824, 246, 0, 128, 48, 640, 560, 240, 336, 368, 496, 1008, 0, 32, 160, 672, 337)),
    ("S25", "2134321324", "2134321324", False, False,
     (0, 256, 768, 152, 120, 0, 512, 144, 112, 272, 400, 368, 912, 880, 222, 0, 128, 96, 640, 608, 212, 276, 340, 468, 980, 0, 64, 192, 704, 277)),
    ("S26", "2321234321", "2321234321", True, True,
     (0, 64, 576, 448, 15, 0, 512, 384, 14, 96, 352, 78, 864, 590, 462, 0, 256, 12, 768, 524, 396, 112, 108, 364, 876, 0, 8, 264, 776, 120)),
    ("S27", "2321243214", "2321243214", True, True,
     (0, 64, 576, 448, 30, 0, 512, 384, 28, 96, 352, 92, 864, 604, 476, 0, 256, 24, 768, 536, 408, 104, 120, 376, 888, 0, 16, 272, 784, 105)),
    ("S28", "2321432134", "2321432134", True, True,
     (0, 64, 576, 448, 60, 0, 512, 384, 56, 72, 328, 120, 840, 632, 504, 0, 256, 48, 768, 560, 432, 74, 106, 362, 874, 0, 32, 288, 800, 75)),
    ("S29", "2324321234", "2324321234", True, True,
     (0, 8, 520, 392, 120, 0, 512, 384, 112, 12, 268, 108, 780, 620, 492, 0, 256, 96, 768, 608, 480, 14, 78, 334, 846, 0, 64, 320, 832, 15)),
    ("S30", "2343212324", "2343212324", True, True,
     (0, 16, 528, 304, 240, 0, 512, 288, 224, 24, 280, 216, 792, 728, 438, 0, 256, 192, 768, 704, 420, 28, 156, 412, 924, 0, 128, 384, 896, 29)),
    ("S31", "2343213234", "2343213234", True, True,
     (0, 16, 528, 304, 240, 0, 512, 288, 224, 20, 276, 212, 788, 724, 444, 0, 256, 192, 768, 704, 424, 22, 150, 406, 918, 0, 128, 384, 896, 23)),
)

FFLV_MIN_5 = (0, 3, 4, 3, 1, 0, 2, 2, 1, 4, 3, 1, 5, 3, 3, 0, 1, 1, 2, 1, 2, 3, 1, 2, 3, 0, 1, 1, 1, 1)
FFLV_REG_5 = (0, 4, 6, 6, 4, 0, 3, 4, 3, 6, 6, 4, 9, 7, 8, 0, 2, 2, 4, 3, 5, 6, 4, 6, 8, 0, 1, 2, 3, 4)

# Flag_4 string table: (class_label, word, generating_word, mp, prime, weight_vector)
STRING_ROWS_4 = (
    ("String 1", "121321", "121321", True, True,
     (0, 32, 24, 7, 0, 16, 6, 48, 38, 30, 0, 4, 20, 52)),
    ("String 1", "212321", "212321", True, True,
     (0, 16, 48, 7, 0, 32, 6, 24, 22, 54, 0, 4, 36, 28)),
    ("String 1", "232123", "232123", True, True,
     (0, 4, 36, 28, 0, 32, 24, 6, 22, 54, 0, 16, 48, 7)),
    ("String 1", "323123", "323123", True, True,
     (0, 4, 20, 52, 0, 16, 48, 6, 38, 30, 0, 32, 24, 7)),
    ("String 2", "123212", "123212", True, True,
     (0, 32, 18, 14, 0, 16, 12, 48, 44, 27, 0, 8, 24, 56)),
    ("String 2", "321232", "321232", True, True,
     (0, 8, 24, 56, 0, 16, 48, 12, 44, 27, 0, 32, 18, 14)),
    ("String 3", "213231", "213231", True, True,
     (0, 16, 48, 13, 0, 32, 12, 20, 28, 60, 0, 8, 40, 22)),
    ("String 4", "132312", "312132", False, False,
     (0, 16, 12, 44, 0, 8, 40, 24, 56, 15, 0, 32, 10, 26)),
)

FFLV_MIN_4 = (0, 2, 2, 1, 0, 1, 1, 2, 1, 2, 0, 1, 1, 1)
FFLV_REG_4 = (0, 3, 4, 3, 0, 2, 2, 4, 3, 5, 0, 1, 2, 3)

# trop(Flag_4) orbit data: (orbit, size, prime, generator_count, f_vector)
FLAG4_ORBITS = (
    (1, 24, True, 10, (42, 141, 202, 153, 63, 13)),
    (2, 12, True, 10, (40, 132, 186, 139, 57, 12)),
    (3, 12, True, 10, (42, 141, 202, 153, 63, 13)),
    (4, 24, True, 10, (43, 146, 212, 163, 68, 14)),
    (5, 6, False, 10, None),
)

# combinatorial equivalences between trop orbits and string/FFLV classes
FLAG4_EQUIVALENCES = {
    1: ("String 2",),
    2: ("String 1",),
    3: ("String 3", "FFLV"),
    4: (),
}
