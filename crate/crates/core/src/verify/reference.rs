//! Printed reference values: coefficient tables, volumes, group orders and
//! generic orbits, transcribed as printed.

/// One printed row: a label pattern and one value per column.
pub(crate) struct Row {
    pub pattern: &'static str,
    pub values: &'static [usize],
}

const fn row(pattern: &'static str, values: &'static [usize]) -> Row {
    Row { pattern, values }
}

pub(crate) const RANK3_GROUPS: [&str; 3] = ["a1xa2", "a1xc2", "a1xg2"];
pub(crate) const CONTINUOUS_GROUPS: [&str; 4] = ["a1xa2", "a1xc2", "a1xg2", "a1xa1xa1"];

pub(crate) const A1XA1_D: [Row; 4] = [
    row("(a,b)", &[1]),
    row("(0,b)", &[1]),
    row("(a,0)", &[1]),
    row("(0,0)", &[2]),
];

pub(crate) const A1XA1_EPSILON: [Row; 9] = [
    row("[s0,s1,s0',s2]", &[2]),
    row("[s0,s1,s0',0]", &[2]),
    row("[s0,s1,0,s2]", &[2]),
    row("[s0,0,s0',s2]", &[2]),
    row("[s0,0,s0',0]", &[1]),
    row("[s0,0,0,s2]", &[1]),
    row("[0,s1,s0',s2]", &[2]),
    row("[0,s1,s0',0]", &[1]),
    row("[0,s1,0,s2]", &[1]),
];

pub(crate) const A1XA1_H: [Row; 9] = [
    row("[t0,t1,t0',t2]", &[1]),
    row("[t0,t1,t0',0]", &[1]),
    row("[t0,t1,0,t2]", &[1]),
    row("[t0,0,t0',t2]", &[1]),
    row("[t0,0,t0',0]", &[2]),
    row("[t0,0,0,t2]", &[2]),
    row("[0,t1,t0',t2]", &[1]),
    row("[0,t1,t0',0]", &[2]),
    row("[0,t1,0,t2]", &[2]),
];

pub(crate) const D_PRODUCT_EVEN: [Row; 8] = [
    row("(a,b,c)", &[1, 1, 1, 1]),
    row("(0,b,c)", &[1, 1, 1, 1]),
    row("(a,0,c)", &[1, 1, 1, 1]),
    row("(a,b,0)", &[1, 1, 1, 1]),
    row("(0,0,c)", &[1, 1, 1, 1]),
    row("(0,b,0)", &[1, 1, 1, 1]),
    row("(a,0,0)", &[3, 4, 6, 1]),
    row("(0,0,0)", &[3, 4, 6, 1]),
];

pub(crate) const D_FULL_EVEN: [Row; 8] = [
    row("(a,b,c)", &[1, 1, 1, 1]),
    row("(0,b,c)", &[1, 1, 1, 1]),
    row("(a,0,c)", &[1, 1, 1, 1]),
    row("(a,b,0)", &[1, 1, 1, 1]),
    row("(0,0,c)", &[2, 2, 2, 2]),
    row("(0,b,0)", &[2, 2, 2, 2]),
    row("(a,0,0)", &[3, 4, 6, 2]),
    row("(0,0,0)", &[6, 8, 12, 4]),
];

pub(crate) const EPSILON_PRODUCT_EVEN: [Row; 21] = [
    row("[s0,s1,s0',s2,s3]", &[3, 4, 6]),
    row("[s0,s1,s0',s2,0]", &[3, 4, 6]),
    row("[s0,s1,s0',0,s3]", &[3, 4, 6]),
    row("[s0,s1,0,s2,s3]", &[3, 4, 6]),
    row("[s0,s1,s0',0,0]", &[1, 1, 1]),
    row("[s0,s1,0,s2,0]", &[1, 2, 2]),
    row("[s0,s1,0,0,s3]", &[1, 1, 3]),
    row("[s0,0,s0',s2,s3]", &[3, 4, 6]),
    row("[s0,0,s0',s2,0]", &[3, 4, 6]),
    row("[s0,0,s0',0,s3]", &[3, 4, 6]),
    row("[s0,0,0,s2,s3]", &[3, 4, 6]),
    row("[s0,0,s0',0,0]", &[1, 1, 1]),
    row("[s0,0,0,s2,0]", &[1, 2, 2]),
    row("[s0,0,0,0,s3]", &[1, 1, 3]),
    row("[0,s1,s0',s2,s3]", &[3, 4, 6]),
    row("[0,s1,s0',s2,0]", &[3, 4, 6]),
    row("[0,s1,s0',0,s3]", &[3, 4, 6]),
    row("[0,s1,0,s2,s3]", &[3, 4, 6]),
    row("[0,s1,s0',0,0]", &[1, 1, 1]),
    row("[0,s1,0,s2,0]", &[1, 2, 2]),
    row("[0,s1,0,0,s3]", &[1, 1, 3]),
];

pub(crate) const H_PRODUCT_EVEN: [Row; 21] = [
    row("[t0,t1,t0',t2,t3]", &[1, 1, 1]),
    row("[t0,t1,t0',t2,0]", &[1, 1, 1]),
    row("[t0,t1,t0',0,t3]", &[1, 1, 1]),
    row("[t0,t1,0,t2,t3]", &[1, 1, 1]),
    row("[t0,t1,t0',0,0]", &[3, 4, 6]),
    row("[t0,t1,0,t2,0]", &[3, 4, 3]),
    row("[t0,t1,0,0,t3]", &[3, 2, 2]),
    row("[t0,0,t0',t2,t3]", &[1, 1, 1]),
    row("[t0,0,t0',t2,0]", &[1, 1, 1]),
    row("[t0,0,t0',0,t3]", &[1, 1, 1]),
    row("[t0,0,0,t2,t3]", &[1, 1, 1]),
    row("[t0,0,t0',0,0]", &[3, 4, 6]),
    row("[t0,0,0,t2,0]", &[3, 4, 3]),
    row("[t0,0,0,0,t3]", &[3, 2, 2]),
    row("[0,t1,t0',t2,t3]", &[1, 1, 1]),
    row("[0,t1,t0',t2,0]", &[1, 1, 1]),
    row("[0,t1,t0',0,t3]", &[1, 1, 1]),
    row("[0,t1,0,t2,t3]", &[1, 1, 1]),
    row("[0,t1,t0',0,0]", &[3, 4, 6]),
    row("[0,t1,0,t2,0]", &[3, 4, 3]),
    row("[0,t1,0,0,t3]", &[3, 2, 2]),
];

pub(crate) const EPSILON_FULL_EVEN: [Row; 21] = [
    row("[s0,s1,s0',s2,s3]", &[6, 8, 12]),
    row("[s0,s1,s0',s2,0]", &[6, 8, 12]),
    row("[s0,s1,s0',0,s3]", &[6, 8, 12]),
    row("[s0,s1,0,s2,s3]", &[6, 8, 12]),
    row("[s0,s1,s0',0,0]", &[2, 2, 2]),
    row("[s0,s1,0,s2,0]", &[2, 4, 4]),
    row("[s0,s1,0,0,s3]", &[2, 2, 6]),
    row("[s0,0,s0',s2,s3]", &[6, 8, 12]),
    row("[s0,0,s0',s2,0]", &[3, 4, 6]),
    row("[s0,0,s0',0,s3]", &[3, 4, 6]),
    row("[s0,0,0,s2,s3]", &[3, 4, 6]),
    row("[s0,0,s0',0,0]", &[1, 1, 1]),
    row("[s0,0,0,s2,0]", &[1, 2, 2]),
    row("[s0,0,0,0,s3]", &[1, 1, 3]),
    row("[0,s1,s0',s2,s3]", &[6, 8, 12]),
    row("[0,s1,s0',s2,0]", &[3, 4, 6]),
    row("[0,s1,s0',0,s3]", &[3, 4, 6]),
    row("[0,s1,0,s2,s3]", &[3, 4, 6]),
    row("[0,s1,s0',0,0]", &[1, 1, 1]),
    row("[0,s1,0,s2,0]", &[1, 2, 2]),
    row("[0,s1,0,0,s3]", &[1, 1, 3]),
];

pub(crate) const H_FULL_EVEN: [Row; 21] = [
    row("[t0,t1,t0',t2,t3]", &[1, 1, 1]),
    row("[t0,t1,t0',t2,0]", &[1, 1, 1]),
    row("[t0,t1,t0',0,t3]", &[1, 1, 1]),
    row("[t0,t1,0,t2,t3]", &[1, 1, 1]),
    row("[t0,t1,t0',0,0]", &[3, 4, 6]),
    row("[t0,t1,0,t2,0]", &[3, 4, 3]),
    row("[t0,t1,0,0,t3]", &[3, 2, 2]),
    row("[t0,0,t0',t2,t3]", &[1, 1, 1]),
    row("[t0,0,t0',t2,0]", &[2, 2, 2]),
    row("[t0,0,t0',0,t3]", &[2, 2, 2]),
    row("[t0,0,0,t2,t3]", &[2, 2, 2]),
    row("[t0,0,t0',0,0]", &[6, 8, 12]),
    row("[t0,0,0,t2,0]", &[6, 8, 6]),
    row("[t0,0,0,0,t3]", &[6, 4, 4]),
    row("[0,t1,t0',t2,t3]", &[1, 1, 1]),
    row("[0,t1,t0',t2,0]", &[2, 2, 2]),
    row("[0,t1,t0',0,t3]", &[2, 2, 2]),
    row("[0,t1,0,t2,t3]", &[2, 2, 2]),
    row("[0,t1,t0',0,0]", &[6, 8, 12]),
    row("[0,t1,0,t2,0]", &[6, 8, 6]),
    row("[0,t1,0,0,t3]", &[6, 4, 4]),
];

pub(crate) const A1CUBED_EPSILON: [Row; 27] = [
    row("[s0,s1,s0',s2,s0'',s3]", &[4]),
    row("[s0,s1,s0',s2,s0'',0]", &[4]),
    row("[s0,s1,s0',s2,0,s3]", &[4]),
    row("[s0,s1,s0',0,s0'',s3]", &[4]),
    row("[s0,s1,s0',0,s0'',0]", &[2]),
    row("[s0,s1,s0',0,0,s3]", &[2]),
    row("[s0,s1,0,s2,s0'',s3]", &[2]),
    row("[s0,s1,0,s2,s0'',0]", &[2]),
    row("[s0,s1,0,s2,0,s3]", &[2]),
    row("[s0,0,s0',s2,s0'',s3]", &[4]),
    row("[s0,0,s0',s2,s0'',0]", &[2]),
    row("[s0,0,s0',s2,0,s3]", &[2]),
    row("[s0,0,s0',0,s0'',s3]", &[2]),
    row("[s0,0,s0',0,s0'',0]", &[1]),
    row("[s0,0,s0',0,0,s3]", &[1]),
    row("[s0,0,0,s2,s0'',s3]", &[2]),
    row("[s0,0,0,s2,s0'',0]", &[1]),
    row("[s0,0,0,s2,0,s3]", &[1]),
    row("[0,s1,s0',s2,s0'',s3]", &[4]),
    row("[0,s1,s0',s2,s0'',0]", &[2]),
    row("[0,s1,s0',s2,0,s3]", &[2]),
    row("[0,s1,s0',0,s0'',s3]", &[2]),
    row("[0,s1,s0',0,s0'',0]", &[1]),
    row("[0,s1,s0',0,0,s3]", &[1]),
    row("[0,s1,0,s2,s0'',s3]", &[2]),
    row("[0,s1,0,s2,s0'',0]", &[1]),
    row("[0,s1,0,s2,0,s3]", &[1]),
];

pub(crate) const A1CUBED_H: [Row; 27] = [
    row("[t0,t1,t0',t2,t0'',t3]", &[1]),
    row("[t0,t1,t0',t2,t0'',0]", &[1]),
    row("[t0,t1,t0',t2,0,t3]", &[1]),
    row("[t0,t1,t0',0,t0'',t3]", &[1]),
    row("[t0,t1,t0',0,t0'',0]", &[2]),
    row("[t0,t1,t0',0,0,t3]", &[2]),
    row("[t0,t1,0,t2,t0'',t3]", &[2]),
    row("[t0,t1,0,t2,t0'',0]", &[2]),
    row("[t0,t1,0,t2,0,t3]", &[2]),
    row("[t0,0,t0',t2,t0'',t3]", &[1]),
    row("[t0,0,t0',t2,t0'',0]", &[2]),
    row("[t0,0,t0',t2,0,t3]", &[2]),
    row("[t0,0,t0',0,t0'',t3]", &[2]),
    row("[t0,0,t0',0,t0'',0]", &[4]),
    row("[t0,0,t0',0,0,t3]", &[4]),
    row("[t0,0,0,t2,t0'',t3]", &[2]),
    row("[t0,0,0,t2,t0'',0]", &[4]),
    row("[t0,0,0,t2,0,t3]", &[4]),
    row("[0,t1,t0',t2,t0'',t3]", &[1]),
    row("[0,t1,t0',t2,t0'',0]", &[2]),
    row("[0,t1,t0',t2,0,t3]", &[2]),
    row("[0,t1,t0',0,t0'',t3]", &[2]),
    row("[0,t1,t0',0,t0'',0]", &[4]),
    row("[0,t1,t0',0,0,t3]", &[4]),
    row("[0,t1,0,t2,t0'',t3]", &[2]),
    row("[0,t1,0,t2,t0'',0]", &[4]),
    row("[0,t1,0,t2,0,t3]", &[4]),
];

/// Printed volume of a fundamental region.
pub struct PrintedVolume {
    pub group: &'static str,
    pub kind: &'static str,
    pub printed: &'static str,
    pub value: f64,
}

const SQRT2: f64 = std::f64::consts::SQRT_2;

pub const PRINTED_VOLUMES: [PrintedVolume; 10] = [
    PrintedVolume {
        group: "a1xa1",
        kind: "ee",
        printed: "2",
        value: 2.0,
    },
    PrintedVolume {
        group: "a1xa1",
        kind: "e",
        printed: "1",
        value: 1.0,
    },
    PrintedVolume {
        group: "a1xa2",
        kind: "ee",
        printed: "2/√6",
        value: 2.0 / 2.449_489_742_783_178,
    },
    PrintedVolume {
        group: "a1xa2",
        kind: "e",
        printed: "1/√6",
        value: 1.0 / 2.449_489_742_783_178,
    },
    PrintedVolume {
        group: "a1xc2",
        kind: "ee",
        printed: "1/√2",
        value: 1.0 / SQRT2,
    },
    PrintedVolume {
        group: "a1xc2",
        kind: "e",
        printed: "√2/4",
        value: SQRT2 / 4.0,
    },
    PrintedVolume {
        group: "a1xg2",
        kind: "ee",
        printed: "√6/6",
        value: 2.449_489_742_783_178 / 6.0,
    },
    PrintedVolume {
        group: "a1xg2",
        kind: "e",
        printed: "√6/12",
        value: 2.449_489_742_783_178 / 12.0,
    },
    PrintedVolume {
        group: "a1xa1xa1",
        kind: "ee",
        printed: "2√2",
        value: 2.0 * SQRT2,
    },
    PrintedVolume {
        group: "a1xa1xa1",
        kind: "e",
        printed: "1/√2",
        value: 1.0 / SQRT2,
    },
];

/// Printed orders `|W^ee|`, `|W^e|` per group.
pub const PRINTED_ORDERS: [(&str, usize, usize); 5] = [
    ("a1xa1", 1, 2),
    ("a1xa2", 3, 6),
    ("a1xc2", 4, 8),
    ("a1xg2", 6, 12),
    ("a1xa1xa1", 1, 4),
];

/// Printed orbit of a generic weight `(a,b,c)`. Paired `±`/`∓` signs in one
/// tuple are read together: all upper signs, then all lower signs.
pub struct PrintedOrbit {
    pub group: &'static str,
    pub kind: &'static str,
    pub tuples: &'static [&'static str],
}

pub const PRINTED_ORBITS: [PrintedOrbit; 10] = [
    PrintedOrbit {
        group: "a1xa1",
        kind: "ee",
        tuples: &["(a,b)"],
    },
    PrintedOrbit {
        group: "a1xa1",
        kind: "e",
        tuples: &["(a,b)", "(-a,-b)"],
    },
    PrintedOrbit {
        group: "a1xa2",
        kind: "ee",
        tuples: &["(a,b,c)", "(a,c,-b-c)", "(a,-b-c,b)"],
    },
    PrintedOrbit {
        group: "a1xa2",
        kind: "e",
        tuples: &[
            "(a,b,c)",
            "(a,c,-b-c)",
            "(a,-b-c,b)",
            "(-a,-b,b+c)",
            "(-a,b+c,-c)",
            "(-a,-c,-b)",
        ],
    },
    PrintedOrbit {
        group: "a1xc2",
        kind: "ee",
        tuples: &["(a,±b,±c)", "(a,±(2c+b),∓(b+c))"],
    },
    PrintedOrbit {
        group: "a1xc2",
        kind: "e",
        tuples: &[
            "(a,±b,±c)",
            "(a,±(2c+b),∓(b+c))",
            "(-a,±b,∓(b+c))",
            "(-a,±(2c+b),∓c)",
        ],
    },
    PrintedOrbit {
        group: "a1xg2",
        kind: "ee",
        tuples: &["(a,±b,±c)", "(a,±(2b+c),∓(3b+c))", "(a,∓(b+c),±(3b+2c))"],
    },
    PrintedOrbit {
        group: "a1xg2",
        kind: "e",
        tuples: &[
            "(a,±b,±c)",
            "(a,±(2b+c),∓(3b+c))",
            "(a,∓(b+c),±(3b+2c))",
            "(-a,±b,∓(3b+c))",
            "(-a,±(b+c),∓c)",
            "(-a,±(2b+c),∓(3a+2b))",
        ],
    },
    PrintedOrbit {
        group: "a1xa1xa1",
        kind: "ee",
        tuples: &["(a,b,c)"],
    },
    PrintedOrbit {
        group: "a1xa1xa1",
        kind: "e",
        tuples: &["(a,±b,±c)", "(-a,±b,∓c)"],
    },
];
