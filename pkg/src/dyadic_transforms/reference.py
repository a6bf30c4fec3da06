"""Published reference values used for regression comparison.

Values are stored exactly as printed, rounded to four decimals
(five significant digits for the MSE columns).
"""
from __future__ import annotations

ALPHA = {0: 1.1455, 1: 1.0754, 2: 1.0385, 3: 1.0196, 4: 1.0098}

BETA_ORDERS = (0, 1, 2, 3, 4)
BETA_BLOCKLENGTHS = (4, 6, 8, 12, 16, 24, 32, 64, 128)

BETA = {
    "fourier": {
        4: (0.5000, 0.5000, 0.5000, 0.5000, 0.5000),
        6: (0.3513, 0.3864, 0.4255, 0.4068, 0.4068),
        8: (0.3121, 0.3745, 0.3480, 0.3480, 0.3560),
        12: (0.2478, 0.2732, 0.3008, 0.2877, 0.2877),
        16: (0.2169, 0.2548, 0.2386, 0.2488, 0.2511),
        24: (0.1706, 0.1977, 0.2076, 0.2011, 0.2050),
        32: (0.1488, 0.1741, 0.1704, 0.1757, 0.1771),
        64: (0.1046, 0.1195, 0.1202, 0.1242, 0.1252),
        128: (0.0734, 0.0838, 0.0854, 0.0879, 0.0883),
    },
    "hartley": {
        4: (0.5000, 1.0000, 0.6666, 0.6666, 0.7273),
        6: (0.4509, 0.6095, 0.5511, 0.5511, 0.5944),
        8: (0.3745, 0.6243, 0.4780, 0.4779, 0.5105),
        12: (0.3189, 0.4310, 0.3897, 0.3897, 0.4203),
        16: (0.2800, 0.3839, 0.3328, 0.3465, 0.3575),
        24: (0.2300, 0.2950, 0.2811, 0.2784, 0.2947),
        32: (0.2011, 0.2529, 0.2392, 0.2466, 0.2513),
        64: (0.1445, 0.1709, 0.1694, 0.1749, 0.1774),
        128: (0.1026, 0.1192, 0.1206, 0.1240, 0.1250),
    },
    "cosine": {
        4: (0.5511, 0.7363, 0.6478, 0.7006, 0.7133),
        6: (0.4462, 0.5955, 0.5682, 0.5572, 0.5873),
        8: (0.3922, 0.4891, 0.4831, 0.4925, 0.5014),
        12: (0.3303, 0.3920, 0.3929, 0.4065, 0.4090),
        16: (0.2876, 0.3320, 0.3380, 0.3497, 0.3548),
        24: (0.2342, 0.2709, 0.2816, 0.2853, 0.2889),
        32: (0.2038, 0.2366, 0.2424, 0.2481, 0.2495),
        64: (0.1456, 0.1657, 0.1728, 0.1750, 0.1762),
        128: (0.1030, 0.1172, 0.1223, 0.1241, 0.1247),
    },
}

# upper bounds on the 2-norm condition number of K_n^(m)
CONDITION_BOUND = {"fourier": 2.5295, "hartley": 2.5295, "cosine": 2.9432}

# 8-point DCT, Markov-1 source with rho = 0.95: m -> (beta, mse, coding gain dB, efficiency %)
DCT_SCALAR = {
    0: (0.3579, 1.1526e-2, 9.9761, 90.2064),
    1: (0.6502, 2.7587e-2, 5.4135, 85.3438),
    2: (0.4740, 1.3264e-3, 9.1076, 92.0474),
    3: (0.4741, 6.9859e-4, 9.3152, 93.4396),
    4: (0.5122, 1.5405e-4, 8.5446, 93.4021),
    5: (0.4927, 4.2514e-5, 8.9304, 94.1522),
    6: (0.5025, 1.0982e-5, 8.7841, 93.8968),
    7: (0.4976, 4.4935e-6, 8.8745, 93.9519),
}

# same source, orthogonalized by S^-1: m -> (mse, coding gain dB, efficiency %)
DCT_POLAR = {
    0: (9.8002e-3, 8.1827, 87.4297),
    1: (4.6128e-4, 8.8007, 92.8519),
    2: (5.9758e-4, 8.7760, 92.1149),
    3: (3.2740e-4, 8.7880, 92.9931),
    4: (4.0163e-5, 8.8201, 93.5807),
    5: (2.0875e-5, 8.8262, 94.0782),
    6: (6.6373e-6, 8.8249, 93.8981),
    7: (1.1358e-6, 8.8254, 93.9244),
}

# exact 8-point DCT on the same source
DCT_EXACT = (8.8259, 93.9912)

# fixed-beta rows for the 8-point DCT: (m, beta, mse, coding gain dB, efficiency %)
DCT_FIXED_BETA = (
    (2, 0.5, 4.3366e-3, 8.8755, 92.0474),
    (2, 0.4831, 1.6963e-3, 9.0248, 92.0474),
    (3, 0.5, 3.6916e-3, 9.0840, 93.4396),
    (3, 0.4925, 2.2113e-3, 9.1496, 93.4396),
    (5, 0.5, 2.6404e-4, 8.8664, 94.1521),
    (5, 0.4966, 1.0624e-4, 8.8961, 94.1522),
    (6, 0.5, 3.5499e-5, 8.8053, 93.8968),
    (6, 0.5009, 2.0968e-5, 8.7975, 93.8968),
    (7, 0.5, 2.7188e-5, 8.8539, 93.9519),
    (7, 0.4995, 1.8626e-5, 8.8582, 93.9519),
)
