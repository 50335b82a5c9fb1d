//! Quadratic Diophantine equations `ax² + bxy + cy² + dx + ey + f = 0`.
//!
//! Any such equation with `a ≠ 0` becomes `X² − DY² = N` under the change of
//! variables `X = Dy + E`, `Y = 2ax + by + d`, where
//!
//! ```text
//! D = b² − 4ac    E = bd − 2ae    F = d² − 4af    N = E² − DF
//! ```
//!
//! When `c = 0` the discriminant is `b²` and the left side factors as
//! `(X + bY)(X − bY)`. Every factorisation `N = N1·N2` then gives one
//! candidate `X = (N1 + N2)/2`, `Y = (N1 − N2)/(2b)`, and the candidates that
//! back-substitute to integers are exactly the integer solutions. Only this
//! factoring case is solved here; general Pell equations are not.

use alloc::vec::Vec;
use core::fmt;

use num_integer::Roots;
use num_rational::Ratio;

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiophantineError {
    /// `a = 0`; the substitution divides by `2a`.
    ZeroLeadingCoefficient,
    /// `c ≠ 0`; only equations without a `y²` term are solved.
    QuadraticInY,
    /// `D = 0`; the form does not separate into factor pairs.
    DegenerateDiscriminant,
    /// `D` is negative or not a perfect square.
    NonSquareDiscriminant(i128),
    /// `b = 0`; the factor-pair system has no unique solution.
    ZeroCrossCoefficient,
    /// `N = 0`; infinitely many factorisations.
    ZeroNorm,
    /// An intermediate value does not fit in 128 bits.
    Overflow,
}

impl fmt::Display for DiophantineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiophantineError::ZeroLeadingCoefficient => {
                f.write_str("coefficient a must be nonzero")
            }
            DiophantineError::QuadraticInY => {
                f.write_str("coefficient c must be zero (no y² term) for factor-pair solving")
            }
            DiophantineError::DegenerateDiscriminant => {
                f.write_str("discriminant D = b² − 4ac is zero; factor-pair solving needs D > 0")
            }
            DiophantineError::NonSquareDiscriminant(d) => {
                write!(f, "discriminant D = {d} is not a positive perfect square")
            }
            DiophantineError::ZeroCrossCoefficient => f.write_str("coefficient b must be nonzero"),
            DiophantineError::ZeroNorm => {
                f.write_str("N = E² − DF is zero; the factor-pair enumeration is unbounded")
            }
            DiophantineError::Overflow => f.write_str("arithmetic overflow in 128-bit integers"),
        }
    }
}

impl core::error::Error for DiophantineError {}

/// Coefficients of `ax² + bxy + cy² + dx + ey + f = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticDiophantine {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub e: i64,
    pub f: i64,
}

impl QuadraticDiophantine {
    pub const fn new(a: i64, b: i64, c: i64, d: i64, e: i64, f: i64) -> Self {
        QuadraticDiophantine { a, b, c, d, e, f }
    }

    /// Left-hand side at an integer point, `None` on overflow.
    pub fn evaluate(&self, x: i128, y: i128) -> Option<i128> {
        let [a, b, c, d, e, f] = self.wide();
        let terms = [
            a.checked_mul(x)?.checked_mul(x)?,
            b.checked_mul(x)?.checked_mul(y)?,
            c.checked_mul(y)?.checked_mul(y)?,
            d.checked_mul(x)?,
            e.checked_mul(y)?,
            f,
        ];
        terms.iter().try_fold(0i128, |acc, &t| acc.checked_add(t))
    }

    pub fn is_solution(&self, x: i128, y: i128) -> bool {
        self.evaluate(x, y) == Some(0)
    }

    fn wide(&self) -> [i128; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f].map(i128::from)
    }
}

/// The equation in the form `X² − DY² = N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReducedForm {
    pub equation: QuadraticDiophantine,
    /// `D = b² − 4ac`
    pub discriminant: i128,
    /// `E = bd − 2ae`
    pub e: i128,
    /// `F = d² − 4af`
    pub f: i128,
    /// `N = E² − DF`
    pub norm: i128,
}

impl ReducedForm {
    /// `(X, Y) = (Dy + E, 2ax + by + d)` for an integer point.
    pub fn transform(&self, x: i128, y: i128) -> Option<(i128, i128)> {
        let eq = &self.equation;
        let (a, b, d) = (i128::from(eq.a), i128::from(eq.b), i128::from(eq.d));
        let big_x = self.discriminant.checked_mul(y)?.checked_add(self.e)?;
        let big_y = (2 * a).checked_mul(x)?.checked_add(b.checked_mul(y)?)?.checked_add(d)?;
        Some((big_x, big_y))
    }

    /// `X² − DY² − N`, zero exactly on the reduced curve.
    pub fn norm_defect(&self, big_x: i128, big_y: i128) -> Option<i128> {
        big_x
            .checked_mul(big_x)?
            .checked_sub(self.discriminant.checked_mul(big_y)?.checked_mul(big_y)?)?
            .checked_sub(self.norm)
    }

    /// `y = (X − E)/D` then `x = (Y − by − d)/(2a)`, exactly.
    fn rational_preimage(&self, big_x: Rational, big_y: Rational) -> (Rational, Rational) {
        let eq = &self.equation;
        let y = (big_x - Rational::from_integer(self.e)) / Rational::from_integer(self.discriminant);
        let x = (big_y - y * i128::from(eq.b) - Rational::from_integer(i128::from(eq.d)))
            / Rational::from_integer(2 * i128::from(eq.a));
        (x, y)
    }
}

/// One factorisation `N = N1·N2` and the values it leads to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FactorPairRow {
    pub n1: i128,
    pub n2: i128,
    /// `X = (N1 + N2)/2`
    pub big_x: Rational,
    /// `Y = (N1 − N2)/(2b)`
    pub big_y: Rational,
    pub x: Rational,
    pub y: Rational,
    /// All four of `X`, `Y`, `x`, `y` are integers.
    pub integral: bool,
}

impl FactorPairRow {
    pub fn solution(&self) -> Option<(i128, i128)> {
        self.integral.then(|| (self.x.to_integer(), self.y.to_integer()))
    }
}

pub fn reduce(eq: QuadraticDiophantine) -> Result<ReducedForm, DiophantineError> {
    if eq.a == 0 {
        return Err(DiophantineError::ZeroLeadingCoefficient);
    }
    let [a, b, c, d, e, f] = eq.wide();
    let reduced = || -> Option<(i128, i128, i128, i128)> {
        let discriminant = (b * b).checked_sub(a.checked_mul(c)?.checked_mul(4)?)?;
        let big_e = (b * d).checked_sub(a.checked_mul(e)?.checked_mul(2)?)?;
        let big_f = (d * d).checked_sub(a.checked_mul(f)?.checked_mul(4)?)?;
        let norm = big_e.checked_mul(big_e)?.checked_sub(discriminant.checked_mul(big_f)?)?;
        Some((discriminant, big_e, big_f, norm))
    };
    let (discriminant, big_e, big_f, norm) = reduced().ok_or(DiophantineError::Overflow)?;
    Ok(ReducedForm { equation: eq, discriminant, e: big_e, f: big_f, norm })
}

/// Checks the factoring preconditions and returns `b`.
fn factoring_root(form: &ReducedForm) -> Result<i128, DiophantineError> {
    let disc = form.discriminant;
    if disc == 0 {
        return Err(DiophantineError::DegenerateDiscriminant);
    }
    if disc < 0 || disc.sqrt() * disc.sqrt() != disc {
        return Err(DiophantineError::NonSquareDiscriminant(disc));
    }
    if form.equation.c != 0 {
        return Err(DiophantineError::QuadraticInY);
    }
    if form.equation.b == 0 {
        return Err(DiophantineError::ZeroCrossCoefficient);
    }
    if form.norm == 0 {
        return Err(DiophantineError::ZeroNorm);
    }
    Ok(i128::from(form.equation.b))
}

/// Positive divisor pairs `(s, t)` with `s·t = m`, `s ≤ t`, by ascending `s`.
fn divisor_pairs(m: u128) -> Vec<(u128, u128)> {
    let mut out = Vec::new();
    let mut s = 1u128;
    while s * s <= m {
        if m % s == 0 {
            out.push((s, m / s));
        }
        s += 1;
    }
    out
}

/// Every ordered `(N1, N2)` with `N1·N2 = n`, one per signed divisor `N1`.
///
/// Four blocks, each ordered by ascending `|N1|` within the small-first half:
/// `(s, ±t)`, `(t, ±s)`, `(−s, ∓t)`, `(−t, ∓s)` where `s ≤ t`, `st = |n|` and
/// the sign follows `n`. A square `|n|` contributes its `(s, s)` pair once per sign.
pub fn signed_factor_pairs(n: i128) -> Vec<(i128, i128)> {
    assert!(n != 0, "zero has no finite factor-pair list");
    let sign = n.signum();
    let pairs: Vec<(i128, i128)> =
        divisor_pairs(n.unsigned_abs()).into_iter().map(|(s, t)| (s as i128, t as i128)).collect();
    let mut out = Vec::with_capacity(4 * pairs.len());
    for flip in [1, -1] {
        out.extend(pairs.iter().map(|&(s, t)| (flip * s, flip * sign * t)));
        out.extend(pairs.iter().filter(|(s, t)| s != t).map(|&(s, t)| (flip * t, flip * sign * s)));
    }
    out
}

/// One row per signed factor pair of `N`, in table order.
pub fn solve_factor_pairs(form: &ReducedForm) -> Result<Vec<FactorPairRow>, DiophantineError> {
    let b = factoring_root(form)?;
    let rows = signed_factor_pairs(form.norm)
        .into_iter()
        .map(|(n1, n2)| {
            let big_x = Rational::new(n1 + n2, 2);
            let big_y = Rational::new(n1 - n2, 2 * b);
            let (x, y) = form.rational_preimage(big_x, big_y);
            let integral = [big_x, big_y, x, y].iter().all(Rational::is_integer);
            FactorPairRow { n1, n2, big_x, big_y, x, y, integral }
        })
        .collect();
    Ok(rows)
}

/// Recovers the integer point behind `(X, Y)`, if there is one.
///
/// `y` is solved first, then `x` from `y`. The discriminant and `a` must be nonzero.
pub fn back_substitute(big_x: Rational, big_y: Rational, form: &ReducedForm) -> Option<(i128, i128)> {
    assert!(form.discriminant != 0 && form.equation.a != 0, "back-substitution divides by D and 2a");
    let (x, y) = form.rational_preimage(big_x, big_y);
    (x.is_integer() && y.is_integer()).then(|| (x.to_integer(), y.to_integer()))
}

/// The complete integer solution set, sorted by `x` then `y`.
pub fn integer_solutions(eq: QuadraticDiophantine) -> Result<Vec<(i128, i128)>, DiophantineError> {
    let form = reduce(eq)?;
    let mut out: Vec<(i128, i128)> =
        solve_factor_pairs(&form)?.iter().filter_map(FactorPairRow::solution).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}
