//! Named group lists used by the verification recipes.

/// One representative of every isomorphism type of order at most 15.
pub const SMALL_GROUPS: &[&str] = &[
    "cyclic:1",
    "cyclic:2",
    "cyclic:3",
    "cyclic:4",
    "elemabelian:2^2",
    "cyclic:5",
    "cyclic:6",
    "dihedral:6",
    "cyclic:7",
    "cyclic:8",
    "direct(cyclic:4,cyclic:2)",
    "elemabelian:2^3",
    "dihedral:8",
    "quaternion:8",
    "cyclic:9",
    "elemabelian:3^2",
    "cyclic:10",
    "dihedral:10",
    "cyclic:11",
    "cyclic:12",
    "direct(cyclic:6,cyclic:2)",
    "dihedral:12",
    "A4",
    "semidirect(cyclic:3,cyclic:4,pow:2)",
    "cyclic:13",
    "cyclic:14",
    "dihedral:14",
    "cyclic:15",
];

/// Groups of order 16 to 24 added to `SMALL_GROUPS` for the wreath and quotient sweeps.
pub const MEDIUM_GROUPS: &[&str] = &[
    "cyclic:16",
    "direct(cyclic:8,cyclic:2)",
    "direct(cyclic:4,cyclic:4)",
    "direct(cyclic:4,elemabelian:2^2)",
    "dihedral:16",
    "quaternion:16",
    "semidihedral:16",
    "modular:16",
    "direct(dihedral:8,cyclic:2)",
    "direct(quaternion:8,cyclic:2)",
    "cyclic:17",
    "cyclic:18",
    "direct(cyclic:6,cyclic:3)",
    "dihedral:18",
    "direct(dihedral:6,cyclic:3)",
    "cyclic:19",
    "cyclic:20",
    "direct(cyclic:10,cyclic:2)",
    "dihedral:20",
    "frobenius:5:4",
    "semidirect(cyclic:5,cyclic:4,pow:4)",
    "cyclic:21",
    "frobenius:7:3",
    "cyclic:22",
    "dihedral:22",
    "cyclic:23",
    "cyclic:24",
    "direct(cyclic:12,cyclic:2)",
    "dihedral:24",
    "S4",
    "direct(A4,cyclic:2)",
    "direct(dihedral:6,cyclic:4)",
    "direct(dihedral:12,cyclic:2)",
    "semidirect(cyclic:3,cyclic:8,pow:2)",
];

/// p-groups with a cyclic subgroup of index p, for p = 2 up to order 32 and p = 3 up to 27.
pub const MAXIMAL_CYCLIC_P_GROUPS: &[&str] = &[
    "cyclic:2",
    "cyclic:4",
    "cyclic:8",
    "cyclic:16",
    "cyclic:32",
    "elemabelian:2^2",
    "direct(cyclic:4,cyclic:2)",
    "direct(cyclic:8,cyclic:2)",
    "direct(cyclic:16,cyclic:2)",
    "dihedral:8",
    "dihedral:16",
    "dihedral:32",
    "quaternion:8",
    "quaternion:16",
    "quaternion:32",
    "semidihedral:16",
    "semidihedral:32",
    "modular:16",
    "modular:32",
    "cyclic:3",
    "cyclic:9",
    "cyclic:27",
    "elemabelian:3^2",
    "direct(cyclic:9,cyclic:3)",
    "modular:27",
    "extraspecial:27:-",
];

/// Camina-pair groups for the double wreath decomposition.
pub const CAMINA_GROUPS: &[&str] = &[
    "dihedral:6",
    "dihedral:10",
    "A4",
    "quaternion:8",
    "dihedral:8",
    "frobenius:5:4",
    "frobenius:7:3",
    "extraspecial:27:+",
    "extraspecial:27:-",
    "frobenius:11:5",
];

/// Nonabelian groups of order `pq`.
pub const PQ_GROUPS: &[&str] = &["dihedral:6", "dihedral:10", "frobenius:7:3", "frobenius:11:5"];

/// Size multisets of rank 3 and 4 ruled out for central S-rings over A5.
pub const A5_EXCLUDED: &[&[usize]] = &[
    &[1, 12, 47],
    &[1, 15, 44],
    &[1, 20, 39],
    &[1, 12, 12, 35],
    &[1, 12, 20, 27],
    &[1, 12, 15, 32],
];
