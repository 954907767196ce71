"""Generated by tools/gen_igusa.py; do not edit."""

I2 = (
    (96, (0, 0, 0, 2, 0, 0, 0)),
    (-256, (0, 0, 1, 0, 1, 0, 0)),
    (640, (0, 1, 0, 0, 0, 1, 0)),
    (-3840, (1, 0, 0, 0, 0, 0, 1)),
)

I4 = (
    (1024, (0, 0, 2, 0, 2, 0, 0)),
    (-3072, (0, 0, 2, 1, 0, 1, 0)),
    (12288, (0, 0, 3, 0, 0, 0, 1)),
    (-3072, (0, 1, 0, 1, 2, 0, 0)),
    (9216, (0, 1, 0, 2, 0, 1, 0)),
    (1024, (0, 1, 1, 0, 1, 1, 0)),
    (-46080, (0, 1, 1, 1, 0, 0, 1)),
    (-20480, (0, 2, 0, 0, 0, 2, 0)),
    (76800, (0, 2, 0, 0, 1, 0, 1)),
    (12288, (1, 0, 0, 0, 3, 0, 0)),
    (-46080, (1, 0, 0, 1, 1, 1, 0)),
    (82944, (1, 0, 0, 2, 0, 0, 1)),
    (76800, (1, 0, 1, 0, 0, 2, 0)),
    (-129024, (1, 0, 1, 0, 1, 0, 1)),
    (-138240, (1, 1, 0, 0, 0, 1, 1)),
    (414720, (2, 0, 0, 0, 0, 0, 2)),
)

I6 = (
    (32768, (0, 0, 2, 2, 2, 0, 0)),
    (-98304, (0, 0, 2, 3, 0, 1, 0)),
    (-98304, (0, 0, 3, 0, 3, 0, 0)),
    (311296, (0, 0, 3, 1, 1, 1, 0)),
    (245760, (0, 0, 3, 2, 0, 0, 1)),
    (-147456, (0, 0, 4, 0, 0, 2, 0)),
    (-655360, (0, 0, 4, 0, 1, 0, 1)),
    (-98304, (0, 1, 0, 3, 2, 0, 0)),
    (294912, (0, 1, 0, 4, 0, 1, 0)),
    (311296, (0, 1, 1, 1, 3, 0, 0)),
    (-974848, (0, 1, 1, 2, 1, 1, 0)),
    (-811008, (0, 1, 1, 3, 0, 0, 1)),
    (114688, (0, 1, 2, 0, 2, 1, 0)),
    (106496, (0, 1, 2, 1, 0, 2, 0)),
    (2015232, (0, 1, 2, 1, 1, 0, 1)),
    (2523136, (0, 1, 3, 0, 0, 1, 1)),
    (-147456, (0, 2, 0, 0, 4, 0, 0)),
    (106496, (0, 2, 0, 1, 2, 1, 0)),
    (720896, (0, 2, 0, 2, 0, 2, 0)),
    (1351680, (0, 2, 0, 2, 1, 0, 1)),
    (262144, (0, 2, 1, 0, 1, 2, 0)),
    (-2621440, (0, 2, 1, 0, 2, 0, 1)),
    (-7618560, (0, 2, 1, 1, 0, 1, 1)),
    (-3686400, (0, 2, 2, 0, 0, 0, 2)),
    (-1310720, (0, 3, 0, 0, 0, 3, 0)),
    (6553600, (0, 3, 0, 0, 1, 1, 1)),
    (9216000, (0, 3, 0, 1, 0, 0, 2)),
    (245760, (1, 0, 0, 2, 3, 0, 0)),
    (-811008, (1, 0, 0, 3, 1, 1, 0)),
    (663552, (1, 0, 0, 4, 0, 0, 1)),
    (-655360, (1, 0, 1, 0, 4, 0, 0)),
    (2015232, (1, 0, 1, 1, 2, 1, 0)),
    (1351680, (1, 0, 1, 2, 0, 2, 0)),
    (-1916928, (1, 0, 1, 2, 1, 0, 1)),
    (-2621440, (1, 0, 2, 0, 1, 2, 0)),
    (1736704, (1, 0, 2, 0, 2, 0, 1)),
    (-3588096, (1, 0, 2, 1, 0, 1, 1)),
    (-393216, (1, 0, 3, 0, 0, 0, 2)),
    (2523136, (1, 1, 0, 0, 3, 1, 0)),
    (-7618560, (1, 1, 0, 1, 1, 2, 0)),
    (-3588096, (1, 1, 0, 1, 2, 0, 1)),
    (7446528, (1, 1, 0, 2, 0, 1, 1)),
    (6553600, (1, 1, 1, 0, 0, 3, 0)),
    (14221312, (1, 1, 1, 0, 1, 1, 1)),
    (12533760, (1, 1, 1, 1, 0, 0, 2)),
    (-9175040, (1, 2, 0, 0, 0, 2, 1)),
    (-76185600, (1, 2, 0, 0, 1, 0, 2)),
    (-3686400, (2, 0, 0, 0, 2, 2, 0)),
    (-393216, (2, 0, 0, 0, 3, 0, 1)),
    (9216000, (2, 0, 0, 1, 0, 3, 0)),
    (12533760, (2, 0, 0, 1, 1, 1, 1)),
    (-41140224, (2, 0, 0, 2, 0, 0, 2)),
    (-76185600, (2, 0, 1, 0, 0, 2, 1)),
    (84639744, (2, 0, 1, 0, 1, 0, 2)),
    (245514240, (2, 1, 0, 0, 0, 1, 2)),
    (-491028480, (3, 0, 0, 0, 0, 0, 3)),
)
