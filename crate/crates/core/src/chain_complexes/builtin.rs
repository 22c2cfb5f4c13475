use super::{ChainError, ChainFragment, Generator, LambdaMatrix};
use crate::group_algebra::{build_cyclic, build_d8, lam, GroupRingElement};

/// Smallest sphere dimension for which the filtration of `S^n x S^n` is
/// available.
pub const MIN_SPHERE_DIMENSION: i64 = 8;

/// Top three degrees `2n, 2n-1, 2n-2` of the cellular chain complex of
/// `S^n x S^n` for its `D8`-filtration by fundamental domains.
///
/// Generators are `x | x0, x1 | z0, t0, t1` and, with `s = (-1)^n`,
///
/// ```text
/// ∂x  = (1 + s·β) x0 + (1 - s·γ) x1
/// ∂x0 = (1 + s·α - s·γ - αγ) z0 + (1 - s·β) t0
/// ∂x1 = -(1 + s·β - βγ - s·αβγ) z0 + (1 + s·γ) t1
/// ```
pub fn build_sphere_product_fragment(n: i64) -> Result<ChainFragment, ChainError> {
    if n < MIN_SPHERE_DIMENSION {
        return Err(ChainError::UnsupportedDimension { n, min: MIN_SPHERE_DIMENSION });
    }
    let g = build_d8();
    let s = if n % 2 == 0 { "+" } else { "-" };
    let t = if n % 2 == 0 { "-" } else { "+" };
    let e = |expr: String| lam(&expr, &g);

    let dx = LambdaMatrix::column(vec![e(format!("1 {s} beta")), e(format!("1 {t} gamma"))]);
    let dx0 = vec![
        e(format!("1 {s} alpha {t} gamma - alpha*gamma")),
        e(format!("1 {t} beta")),
        GroupRingElement::zero(),
    ];
    let dx1 = vec![
        e(format!("1 {s} beta - beta*gamma {t} alpha*beta*gamma")).neg(),
        GroupRingElement::zero(),
        e(format!("1 {s} gamma")),
    ];
    let mut lower = LambdaMatrix::zeros(3, 2);
    for (i, v) in dx0.into_iter().enumerate() {
        lower.set(i, 0, v);
    }
    for (i, v) in dx1.into_iter().enumerate() {
        lower.set(i, 1, v);
    }

    let generators = vec![
        vec![Generator::new("x")],
        vec![Generator::with_stabilizer("x0", &["beta"]), Generator::with_stabilizer("x1", &["gamma"])],
        vec![
            Generator::new("z0"),
            Generator::with_stabilizer("t0", &["beta"]),
            Generator::with_stabilizer("t1", &["gamma"]),
        ],
    ];
    ChainFragment::new(g, 2 * n, generators, vec![dx, lower], false)
}

/// The two augmented complexes over `Z[Z/2] = Z[ω]/(ω² - 1)`:
///
/// ```text
/// source: C3 --(1-ω)--> C2 --2(1+ω)--> C1 --(1-ω)--> C0 --> Z
/// target:  0 ---------> 0  ----------> D1 --(1-ω)--> D0 --> Z
/// ```
///
/// Extending the identity in degrees 0 and 1 over degree 2 is obstructed by
/// an element of order 2 in `H^2(C; H_1(D)) = Z/4`.
pub fn build_z2_example_complexes() -> (ChainFragment, ChainFragment) {
    let g = build_cyclic(2, "omega").expect("Z/2");
    let col = |expr: &str| LambdaMatrix::column(vec![lam(expr, &g)]);
    let source = ChainFragment::new(
        g.clone(),
        3,
        vec![
            vec![Generator::new("c3")],
            vec![Generator::new("c2")],
            vec![Generator::new("c1")],
            vec![Generator::new("c0")],
        ],
        vec![col("1 - omega"), col("2 + 2*omega"), col("1 - omega")],
        true,
    )
    .expect("source complex");
    let target = ChainFragment::new(
        g.clone(),
        3,
        vec![vec![], vec![], vec![Generator::new("d1")], vec![Generator::new("d0")]],
        vec![LambdaMatrix::zeros(0, 0), LambdaMatrix::zeros(1, 0), col("1 - omega")],
        true,
    )
    .expect("target complex");
    (source, target)
}
