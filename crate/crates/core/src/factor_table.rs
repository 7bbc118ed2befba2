//! Factorizations of 2^k - 1 for 1 <= k <= 64.

/// Prime factorizations `(prime, exponent)` of `2^k - 1`, indexed by `k - 1`.
pub(crate) static MERSENNE_FACTORS: [&[(u64, u32)]; 64] = [
    &[],
    &[(3, 1)],
    &[(7, 1)],
    &[(3, 1), (5, 1)],
    &[(31, 1)],
    &[(3, 2), (7, 1)],
    &[(127, 1)],
    &[(3, 1), (5, 1), (17, 1)],
    &[(7, 1), (73, 1)],
    &[(3, 1), (11, 1), (31, 1)],
    &[(23, 1), (89, 1)],
    &[(3, 2), (5, 1), (7, 1), (13, 1)],
    &[(8191, 1)],
    &[(3, 1), (43, 1), (127, 1)],
    &[(7, 1), (31, 1), (151, 1)],
    &[(3, 1), (5, 1), (17, 1), (257, 1)],
    &[(131071, 1)],
    &[(3, 3), (7, 1), (19, 1), (73, 1)],
    &[(524287, 1)],
    &[(3, 1), (5, 2), (11, 1), (31, 1), (41, 1)],
    &[(7, 2), (127, 1), (337, 1)],
    &[(3, 1), (23, 1), (89, 1), (683, 1)],
    &[(47, 1), (178481, 1)],
    &[(3, 2), (5, 1), (7, 1), (13, 1), (17, 1), (241, 1)],
    &[(31, 1), (601, 1), (1801, 1)],
    &[(3, 1), (2731, 1), (8191, 1)],
    &[(7, 1), (73, 1), (262657, 1)],
    &[(3, 1), (5, 1), (29, 1), (43, 1), (113, 1), (127, 1)],
    &[(233, 1), (1103, 1), (2089, 1)],
    &[(3, 2), (7, 1), (11, 1), (31, 1), (151, 1), (331, 1)],
    &[(2147483647, 1)],
    &[(3, 1), (5, 1), (17, 1), (257, 1), (65537, 1)],
    &[(7, 1), (23, 1), (89, 1), (599479, 1)],
    &[(3, 1), (43691, 1), (131071, 1)],
    &[(31, 1), (71, 1), (127, 1), (122921, 1)],
    &[(3, 3), (5, 1), (7, 1), (13, 1), (19, 1), (37, 1), (73, 1), (109, 1)],
    &[(223, 1), (616318177, 1)],
    &[(3, 1), (174763, 1), (524287, 1)],
    &[(7, 1), (79, 1), (8191, 1), (121369, 1)],
    &[(3, 1), (5, 2), (11, 1), (17, 1), (31, 1), (41, 1), (61681, 1)],
    &[(13367, 1), (164511353, 1)],
    &[(3, 2), (7, 2), (43, 1), (127, 1), (337, 1), (5419, 1)],
    &[(431, 1), (9719, 1), (2099863, 1)],
    &[(3, 1), (5, 1), (23, 1), (89, 1), (397, 1), (683, 1), (2113, 1)],
    &[(7, 1), (31, 1), (73, 1), (151, 1), (631, 1), (23311, 1)],
    &[(3, 1), (47, 1), (178481, 1), (2796203, 1)],
    &[(2351, 1), (4513, 1), (13264529, 1)],
    &[(3, 2), (5, 1), (7, 1), (13, 1), (17, 1), (97, 1), (241, 1), (257, 1), (673, 1)],
    &[(127, 1), (4432676798593, 1)],
    &[(3, 1), (11, 1), (31, 1), (251, 1), (601, 1), (1801, 1), (4051, 1)],
    &[(7, 1), (103, 1), (2143, 1), (11119, 1), (131071, 1)],
    &[(3, 1), (5, 1), (53, 1), (157, 1), (1613, 1), (2731, 1), (8191, 1)],
    &[(6361, 1), (69431, 1), (20394401, 1)],
    &[(3, 4), (7, 1), (19, 1), (73, 1), (87211, 1), (262657, 1)],
    &[(23, 1), (31, 1), (89, 1), (881, 1), (3191, 1), (201961, 1)],
    &[(3, 1), (5, 1), (17, 1), (29, 1), (43, 1), (113, 1), (127, 1), (15790321, 1)],
    &[(7, 1), (32377, 1), (524287, 1), (1212847, 1)],
    &[(3, 1), (59, 1), (233, 1), (1103, 1), (2089, 1), (3033169, 1)],
    &[(179951, 1), (3203431780337, 1)],
    &[(3, 2), (5, 2), (7, 1), (11, 1), (13, 1), (31, 1), (41, 1), (61, 1), (151, 1), (331, 1), (1321, 1)],
    &[(2305843009213693951, 1)],
    &[(3, 1), (715827883, 1), (2147483647, 1)],
    &[(7, 2), (73, 1), (127, 1), (337, 1), (92737, 1), (649657, 1)],
    &[(3, 1), (5, 1), (17, 1), (257, 1), (641, 1), (65537, 1), (6700417, 1)],
];
