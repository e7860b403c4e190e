//! The curve `y^2 = x(x + M)(x + N)` with `M = m + n*sqrt(D)`, `N = m - n*sqrt(D)`.
//!
//! Expanded over the rationals this is `y^2 = x^3 + 2m x^2 + q x` with
//! `q = MN = m^2 - n^2 D`, an integral Weierstrass model. The group law below
//! works on that model with exact rationals; only the squareness test for
//! halving looks at the quadratic field `Q(sqrt D)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exactmath::{
    divisors, factor, gcd, int_sqrt, rat_sqrt, squarefree_split, Int, MathError, Rat,
};

/// Largest order of a rational torsion point over the rationals.
pub const MAX_TORSION_ORDER: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("n must be nonzero")]
    ZeroN,
    #[error("D must be nonzero")]
    ZeroD,
    #[error("n^2 * D is a perfect square, so x^2 + 2mx + m^2 - n^2 D splits over Q")]
    ReducibleQuadratic,
    #[error("({m}, {n}, {d}) is not normalized: {reason}")]
    NotNormalized {
        m: Int,
        n: Int,
        d: Int,
        reason: &'static str,
    },
    #[error("point is not on the curve")]
    OffCurve,
    #[error("point at infinity has no affine coordinates")]
    NotAffine,
    #[error("y(P) = 0, doubling gives the point at infinity")]
    YIsZero,
    #[error("cubic is singular")]
    Singular,
    #[error("cubic has no rational root")]
    NoRationalRoot,
    #[error(transparent)]
    Math(#[from] MathError),
}

fn rat(v: impl Into<Int>) -> Rat {
    Rat::from_integer(v.into())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Point {
    Infinity,
    Affine { x: Rat, y: Rat },
}

impl Point {
    pub fn affine(x: Rat, y: Rat) -> Self {
        Point::Affine { x, y }
    }

    pub fn from_ints(x: impl Into<Int>, y: impl Into<Int>) -> Self {
        Point::Affine {
            x: rat(x),
            y: rat(y),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Point::Infinity)
    }

    pub fn x(&self) -> Option<&Rat> {
        match self {
            Point::Infinity => None,
            Point::Affine { x, .. } => Some(x),
        }
    }

    pub fn y(&self) -> Option<&Rat> {
        match self {
            Point::Infinity => None,
            Point::Affine { y, .. } => Some(y),
        }
    }

    pub fn neg(&self) -> Point {
        match self {
            Point::Infinity => Point::Infinity,
            Point::Affine { x, y } => Point::Affine {
                x: x.clone(),
                y: -y,
            },
        }
    }

    /// Both coordinates are integers (vacuously true at infinity).
    pub fn is_integral(&self) -> bool {
        match self {
            Point::Infinity => true,
            Point::Affine { x, y } => x.is_integer() && y.is_integer(),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Infinity => write!(f, "O"),
            Point::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointOrder {
    Finite(u32),
    Infinite,
}

/// `e + f*sqrt(d)` in `Q(sqrt d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadElement {
    pub e: Rat,
    pub f: Rat,
    pub d: Int,
}

impl QuadElement {
    pub fn new(e: Rat, f: Rat, d: Int) -> Self {
        QuadElement { e, f, d }
    }

    pub fn square(&self) -> QuadElement {
        let dr = rat(self.d.clone());
        QuadElement {
            e: &self.e * &self.e + &self.f * &self.f * dr,
            f: Rat::from_integer(2.into()) * &self.e * &self.f,
            d: self.d.clone(),
        }
    }

    pub fn norm(&self) -> Rat {
        &self.e * &self.e - &self.f * &self.f * rat(self.d.clone())
    }
}

impl fmt::Display for QuadElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.e, self.f, self.d)
    }
}

/// Square root of `z` inside `Q(sqrt D)`, with `g > 0` (or `g = 0, h >= 0`).
///
/// For `f != 0`, `z` is a square iff its norm is a rational square `r^2` and
/// one of `(e +- r)/2` is a rational square `g^2`; then `h = f / 2g`.
pub fn is_square_quad(z: &QuadElement) -> Option<QuadElement> {
    let two = rat(2);
    let d = z.d.clone();
    if z.f.is_zero() {
        if let Some(g) = rat_sqrt(&z.e) {
            return Some(QuadElement::new(g, Rat::zero(), d));
        }
        let h = rat_sqrt(&(&z.e / rat(d.clone())))?;
        return Some(QuadElement::new(Rat::zero(), h, d));
    }
    let r = rat_sqrt(&z.norm())?;
    for g2 in [(&z.e + &r) / &two, (&z.e - &r) / &two] {
        if !g2.is_positive() {
            continue;
        }
        if let Some(g) = rat_sqrt(&g2) {
            let h = &z.f / (&two * &g);
            let root = QuadElement::new(g, h, d.clone());
            debug_assert_eq!(root.square(), *z);
            return Some(root);
        }
    }
    None
}

/// A normalized curve datum `(m, n, D)`.
///
/// `D` is squarefree and not 0 or 1, `n > 0`, and `gcd(m, n)` is squarefree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveMnd {
    m: Int,
    n: Int,
    d: Int,
}

/// Result of [`CurveMnd::normalize`]: the curve and the scale `s` that maps a
/// point `(x, y)` of the input model to `(x/s^2, y/s^3)` on `curve`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub curve: CurveMnd,
    pub scale: Int,
}

impl CurveMnd {
    /// Accepts only an already-normalized triple.
    pub fn new(
        m: impl Into<Int>,
        n: impl Into<Int>,
        d: impl Into<Int>,
    ) -> Result<Self, CurveError> {
        let (m, n, d) = (m.into(), n.into(), d.into());
        if n.is_zero() {
            return Err(CurveError::ZeroN);
        }
        if d.is_zero() {
            return Err(CurveError::ZeroD);
        }
        let not_normalized = |reason| CurveError::NotNormalized {
            m: m.clone(),
            n: n.clone(),
            d: d.clone(),
            reason,
        };
        if !n.is_positive() {
            return Err(not_normalized("n must be positive"));
        }
        let split = squarefree_split(&d)?;
        if !split.square_part.is_one() {
            return Err(not_normalized("D is not squarefree"));
        }
        if d.is_one() {
            return Err(CurveError::ReducibleQuadratic);
        }
        let g = gcd(&m, &n)?;
        if !squarefree_split(&g)?.square_part.is_one() {
            return Err(not_normalized("gcd(m, n) is not squarefree"));
        }
        let curve = CurveMnd { m, n, d };
        assert!(!curve.q().is_zero(), "m^2 - n^2 D vanished for nonsquare D");
        Ok(curve)
    }

    /// Caller guarantees every invariant of [`CurveMnd::new`].
    pub(crate) fn new_unchecked(m: Int, n: Int, d: Int) -> Self {
        CurveMnd { m, n, d }
    }

    pub fn normalize(
        m: impl Into<Int>,
        n: impl Into<Int>,
        d_raw: impl Into<Int>,
    ) -> Result<CurveMnd, CurveError> {
        Ok(Self::normalize_with_scale(m, n, d_raw)?.curve)
    }

    /// Moves the square part of `D` into `n`, makes `n` positive (swapping
    /// `M` and `N` leaves the curve unchanged) and divides `(m, n)` by the
    /// largest `s^2` dividing both, which is the substitution
    /// `x -> x/s^2, y -> y/s^3`.
    pub fn normalize_with_scale(
        m: impl Into<Int>,
        n: impl Into<Int>,
        d_raw: impl Into<Int>,
    ) -> Result<Normalized, CurveError> {
        let (mut m, mut n, d_raw) = (m.into(), n.into(), d_raw.into());
        if n.is_zero() {
            return Err(CurveError::ZeroN);
        }
        if d_raw.is_zero() {
            return Err(CurveError::ZeroD);
        }
        let split = squarefree_split(&d_raw)?;
        if split.squarefree_part.is_one() {
            return Err(CurveError::ReducibleQuadratic);
        }
        n = n.abs() * split.square_part;
        let g = gcd(&m, &n)?;
        let s = squarefree_split(&g)?.square_part;
        let s2 = &s * &s;
        m /= &s2;
        n /= &s2;
        let curve = CurveMnd::new(m, n, split.squarefree_part)?;
        Ok(Normalized { curve, scale: s })
    }

    pub fn m(&self) -> &Int {
        &self.m
    }

    pub fn n(&self) -> &Int {
        &self.n
    }

    /// The squarefree `D`.
    pub fn d(&self) -> &Int {
        &self.d
    }

    /// `MN = m^2 - n^2 D`, the linear coefficient of the model.
    pub fn q(&self) -> Int {
        &self.m * &self.m - &self.n * &self.n * &self.d
    }

    /// `M + N = 2m`, the quadratic coefficient of the model.
    pub fn a2(&self) -> Int {
        &self.m * 2
    }

    pub fn big_m(&self) -> QuadElement {
        QuadElement::new(rat(self.m.clone()), rat(self.n.clone()), self.d.clone())
    }

    pub fn big_n(&self) -> QuadElement {
        QuadElement::new(rat(self.m.clone()), rat(-self.n.clone()), self.d.clone())
    }

    /// Right-hand side `x^3 + 2m x^2 + q x` at a rational `x`.
    pub fn rhs(&self, x: &Rat) -> Rat {
        let a2 = rat(self.a2());
        let q = rat(self.q());
        x * (x * (x + a2) + q)
    }

    pub fn rhs_int(&self, x: &Int) -> Int {
        x * (x * (x + self.a2()) + self.q())
    }

    pub fn contains(&self, p: &Point) -> bool {
        match p {
            Point::Infinity => true,
            Point::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    fn require_on_curve(&self, p: &Point) -> Result<(), CurveError> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(CurveError::OffCurve)
        }
    }

    pub fn to_cubic(&self) -> GeneralCubic {
        GeneralCubic {
            a2: rat(self.a2()),
            a4: rat(self.q()),
            a6: Rat::zero(),
        }
    }

    pub fn j_invariant(&self) -> Rat {
        self.to_cubic().j_invariant()
    }

    pub fn add(&self, p: &Point, q: &Point) -> Result<Point, CurveError> {
        self.require_on_curve(p)?;
        self.require_on_curve(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub(crate) fn add_unchecked(&self, p: &Point, q: &Point) -> Point {
        let (x1, y1, x2, y2) = match (p, q) {
            (Point::Infinity, _) => return q.clone(),
            (_, Point::Infinity) => return p.clone(),
            (Point::Affine { x: x1, y: y1 }, Point::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let a2 = rat(self.a2());
        let lambda = if x1 == x2 {
            if (y1 + y2).is_zero() {
                return Point::Infinity;
            }
            let three = rat(3);
            let two = rat(2);
            (three * x1 * x1 + &two * &a2 * x1 + rat(self.q())) / (two * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &lambda * &lambda - a2 - x1 - x2;
        let y3 = lambda * (x1 - &x3) - y1;
        Point::Affine { x: x3, y: y3 }
    }

    pub fn mul(&self, p: &Point, k: u32) -> Result<Point, CurveError> {
        self.require_on_curve(p)?;
        Ok(self.mul_unchecked(p, k))
    }

    pub(crate) fn mul_unchecked(&self, p: &Point, mut k: u32) -> Point {
        let mut acc = Point::Infinity;
        let mut base = p.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            base = self.add_unchecked(&base, &base);
            k >>= 1;
        }
        acc
    }

    /// `x(2P) = ((x^2 - MN) / 2y)^2`.
    pub fn double_x(&self, p: &Point) -> Result<Rat, CurveError> {
        self.require_on_curve(p)?;
        let (x, y) = match p {
            Point::Infinity => return Err(CurveError::NotAffine),
            Point::Affine { x, y } => (x, y),
        };
        if y.is_zero() {
            return Err(CurveError::YIsZero);
        }
        let t = (x * x - rat(self.q())) / (rat(2) * y);
        Ok(&t * &t)
    }

    /// Order of `p` when it is at most 12, else `Infinite`. Stops early as
    /// soon as a multiple has a non-integral coordinate, since torsion points
    /// of this integral model are integral.
    pub fn order(&self, p: &Point) -> Result<PointOrder, CurveError> {
        self.require_on_curve(p)?;
        Ok(self.order_unchecked(p))
    }

    pub(crate) fn order_unchecked(&self, p: &Point) -> PointOrder {
        let mut acc = p.clone();
        for k in 1..=MAX_TORSION_ORDER {
            if acc.is_infinity() {
                return PointOrder::Finite(k);
            }
            if !acc.is_integral() {
                return PointOrder::Infinite;
            }
            acc = self.add_unchecked(&acc, p);
        }
        PointOrder::Infinite
    }

    /// Whether `p = 2R` for some `R` defined over `Q(sqrt D)`: `x`, `x + M`
    /// and `x + N` must all be squares there (the cubic's roots are `0`,
    /// `-M`, `-N`).
    pub fn is_halvable(&self, p: &Point) -> Result<bool, CurveError> {
        self.require_on_curve(p)?;
        let x = match p {
            Point::Infinity => return Ok(true),
            Point::Affine { x, .. } => x,
        };
        let d = self.d.clone();
        let shifted = x + rat(self.m.clone());
        let candidates = [
            QuadElement::new(x.clone(), Rat::zero(), d.clone()),
            QuadElement::new(shifted.clone(), rat(self.n.clone()), d.clone()),
            QuadElement::new(shifted, rat(-self.n.clone()), d),
        ];
        Ok(candidates.iter().all(|z| is_square_quad(z).is_some()))
    }

    /// The 3-division polynomial `3x^4 + 4(M+N)x^3 + 6MN x^2 - (MN)^2` at `x`.
    pub fn three_torsion_quartic(&self, x: &Rat) -> Rat {
        let q = rat(self.q());
        let m = rat(self.m.clone());
        let x2 = x * x;
        rat(3) * &x2 * &x2 + rat(8) * m * &x2 * x + rat(6) * &q * &x2 - &q * &q
    }

    /// Every normalized triple with `|m| <= m_max`, `1 <= n <= n_max`,
    /// `2 <= |D| <= d_max`, in lexicographic `(m, n, D)` order.
    pub fn enumerate(m_max: u64, n_max: u64, d_max: u64) -> impl Iterator<Item = CurveMnd> {
        let m_max = m_max as i64;
        let mut ds: Vec<i64> = (2..=d_max as i64)
            .filter(|&d| is_squarefree_small(d as u64))
            .flat_map(|d| [d, -d])
            .collect();
        ds.sort_unstable();
        (-m_max..=m_max).flat_map(move |m| {
            let ds = ds.clone();
            (1..=n_max as i64)
                .filter(move |&n| is_squarefree_small(num_integer::gcd(m, n) as u64))
                .flat_map(move |n| {
                    ds.clone()
                        .into_iter()
                        .map(move |d| CurveMnd::new_unchecked(m.into(), n.into(), d.into()))
                })
        })
    }
}

fn is_squarefree_small(mut x: u64) -> bool {
    let mut p = 2;
    while p * p <= x {
        if x.is_multiple_of(p) {
            x /= p;
            if x.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

impl fmt::Display for CurveMnd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.m, self.n, self.d)
    }
}

/// `y^2 = x^3 + a2 x^2 + a4 x + a6` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCubic {
    pub a2: Rat,
    pub a4: Rat,
    pub a6: Rat,
}

/// All three roots of the cubic are rational: the 2-torsion is
/// `Z/2 x Z/2`, which this crate does not classify.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonCyclicReport {
    pub roots: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FromGeneral {
    Cyclic {
        curve: CurveMnd,
        /// The rational root moved to `x = 0`.
        root: Rat,
        /// Points map by `x -> (x - root) * scale^2`, `y -> y * scale^3`.
        scale: Rat,
    },
    NonCyclic(NonCyclicReport),
}

impl GeneralCubic {
    pub fn new(a2: Rat, a4: Rat, a6: Rat) -> Result<Self, CurveError> {
        let c = GeneralCubic { a2, a4, a6 };
        if c.poly_discriminant().is_zero() {
            return Err(CurveError::Singular);
        }
        Ok(c)
    }

    /// Discriminant of the cubic polynomial itself.
    pub fn poly_discriminant(&self) -> Rat {
        let (a, b, c) = (&self.a2, &self.a4, &self.a6);
        a * a * b * b - rat(4) * b * b * b - rat(4) * a * a * a * c + rat(18) * a * b * c
            - rat(27) * c * c
    }

    /// Curve discriminant, `16` times the polynomial discriminant.
    pub fn discriminant(&self) -> Rat {
        rat(16) * self.poly_discriminant()
    }

    pub fn j_invariant(&self) -> Rat {
        let c4 = rat(16) * &self.a2 * &self.a2 - rat(48) * &self.a4;
        &c4 * &c4 * &c4 / self.discriminant()
    }

    /// Distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Result<Vec<Rat>, CurveError> {
        // with x = X / L the cubic becomes monic in X with integer coefficients
        let l = [&self.a2, &self.a4, &self.a6]
            .iter()
            .fold(Int::one(), |acc, c| acc.lcm(c.denom()));
        let lr = rat(l.clone());
        let b = (&self.a2 * &lr).to_integer();
        let c = (&self.a4 * &lr * &lr).to_integer();
        let d = (&self.a6 * &lr * &lr * &lr).to_integer();
        let eval = |x: &Int| x * (x * (x + &b) + &c) + &d;
        let mut roots: Vec<Int> = Vec::new();
        if d.is_zero() {
            roots.push(Int::zero());
            // X^2 + bX + c
            let disc = &b * &b - &c * 4;
            if let Some(s) = int_sqrt(&disc) {
                for r in [(-&b + &s), (-&b - &s)] {
                    if r.is_even() {
                        roots.push(r / 2);
                    }
                }
            }
        } else {
            for p in divisors(&factor(&d)?) {
                for cand in [p.clone(), -p] {
                    if eval(&cand).is_zero() {
                        roots.push(cand);
                    }
                }
            }
        }
        let mut out: Vec<Rat> = roots.into_iter().map(|r| Rat::new(r, l.clone())).collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    /// Brings a cubic with exactly one rational root into `(m, n, D)` form.
    pub fn to_mnd(&self) -> Result<FromGeneral, CurveError> {
        if self.poly_discriminant().is_zero() {
            return Err(CurveError::Singular);
        }
        let roots = self.rational_roots()?;
        let r = match roots.len() {
            0 => return Err(CurveError::NoRationalRoot),
            1 => roots[0].clone(),
            _ => return Ok(FromGeneral::NonCyclic(NonCyclicReport { roots })),
        };
        // f(x + r) = x^3 + A x^2 + B x
        let big_a = rat(3) * &r + &self.a2;
        let big_b = rat(3) * &r * &r + rat(2) * &self.a2 * &r + &self.a4;
        let mut scale = minimal_clearing_scale(&big_a, &big_b)?;
        let s2 = rat(scale.clone() * &scale);
        if !(&big_a * &s2).to_integer().is_even() {
            scale *= 2;
        }
        let s2 = rat(scale.clone() * &scale);
        let a2 = (&big_a * &s2).to_integer();
        let q = (&big_b * &s2 * &s2).to_integer();
        let m = a2 / 2;
        let split = squarefree_split(&(&m * &m - &q))?;
        let norm = CurveMnd::normalize_with_scale(m, split.square_part, split.squarefree_part)?;
        Ok(FromGeneral::Cyclic {
            curve: norm.curve,
            root: r,
            scale: Rat::new(scale, norm.scale),
        })
    }
}

/// Smallest `s >= 1` with `s^2 A` and `s^4 B` integral.
fn minimal_clearing_scale(a: &Rat, b: &Rat) -> Result<Int, CurveError> {
    let mut s = Int::one();
    let den = a.denom().lcm(b.denom());
    if den.is_one() {
        return Ok(s);
    }
    let fa = factor(a.denom())?;
    let fb = factor(b.denom())?;
    for (p, _) in factor(&den)? {
        let va = fa.iter().find(|(f, _)| *f == p).map_or(0, |(_, e)| *e);
        let vb = fb.iter().find(|(f, _)| *f == p).map_or(0, |(_, e)| *e);
        let e = va.div_ceil(2).max(vb.div_ceil(4));
        s *= num_traits::pow(p, e as usize);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(m: i64, n: i64, d: i64) -> CurveMnd {
        CurveMnd::new(m, n, d).unwrap()
    }

    fn p(x: i64, y: i64) -> Point {
        Point::from_ints(x, y)
    }

    fn r(v: i64) -> Rat {
        rat(v)
    }

    fn quad(e: i64, f: i64, d: i64) -> QuadElement {
        QuadElement::new(r(e), r(f), d.into())
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(CurveMnd::normalize(12, 8, 5).unwrap(), c(3, 2, 5));
        assert_eq!(CurveMnd::normalize(3, 1, 8).unwrap(), c(3, 2, 2));
        assert_eq!(CurveMnd::normalize(3, 2, 2).unwrap(), c(3, 2, 2));
        assert_eq!(CurveMnd::normalize(3, -2, 2).unwrap(), c(3, 2, 2));
        let scaled = CurveMnd::normalize_with_scale(48, 32, 5).unwrap();
        assert_eq!((scaled.curve, scaled.scale), (c(3, 2, 5), Int::from(4)));
    }

    #[test]
    fn normalize_rejections() {
        assert_eq!(CurveMnd::normalize(3, 0, 2), Err(CurveError::ZeroN));
        assert_eq!(CurveMnd::normalize(3, 1, 0), Err(CurveError::ZeroD));
        assert_eq!(
            CurveMnd::normalize(3, 1, 4),
            Err(CurveError::ReducibleQuadratic)
        );
        assert_eq!(
            CurveMnd::normalize(3, 1, 1),
            Err(CurveError::ReducibleQuadratic)
        );
        assert!(CurveMnd::normalize(3, 1, -1).is_ok());
    }

    #[test]
    fn new_rejects_unnormalized() {
        assert!(matches!(
            CurveMnd::new(12, 8, 5),
            Err(CurveError::NotNormalized { .. })
        ));
        assert!(matches!(
            CurveMnd::new(3, 1, 8),
            Err(CurveError::NotNormalized { .. })
        ));
        assert!(matches!(
            CurveMnd::new(3, -2, 2),
            Err(CurveError::NotNormalized { .. })
        ));
    }

    #[test]
    fn add_examples() {
        let e = c(3, 2, 3);
        assert_eq!(e.add(&p(1, 2), &Point::Infinity).unwrap(), p(1, 2));
        assert_eq!(e.add(&p(0, 0), &p(0, 0)).unwrap(), Point::Infinity);
        assert_eq!(e.add(&p(1, 2), &p(0, 0)).unwrap(), p(-3, 6));
        assert_eq!(e.add(&p(1, 2), &p(1, -2)).unwrap(), Point::Infinity);
        assert_eq!(e.add(&p(1, 3), &p(0, 0)), Err(CurveError::OffCurve));
    }

    #[test]
    fn double_x_examples() {
        assert_eq!(c(3, 2, 2).double_x(&p(-1, 2)).unwrap(), r(0));
        assert_eq!(c(3, 2, 3).double_x(&p(1, 2)).unwrap(), r(1));
        assert_eq!(c(23, 8, 7).double_x(&p(-3, 12)).unwrap(), r(9));
        assert_eq!(c(3, 2, 3).double_x(&p(0, 0)), Err(CurveError::YIsZero));
        assert_eq!(
            c(3, 2, 3).double_x(&Point::Infinity),
            Err(CurveError::NotAffine)
        );
    }

    #[test]
    fn order_examples() {
        let e = c(3, 2, 2);
        assert_eq!(e.order(&Point::Infinity).unwrap(), PointOrder::Finite(1));
        assert_eq!(e.order(&p(0, 0)).unwrap(), PointOrder::Finite(2));
        assert_eq!(e.order(&p(-1, 2)).unwrap(), PointOrder::Finite(4));
        assert_eq!(c(3, 2, 3).order(&p(1, 2)).unwrap(), PointOrder::Finite(3));
        assert_eq!(c(3, 2, 3).order(&p(-3, 6)).unwrap(), PointOrder::Finite(6));
        assert_eq!(e.order(&p(1, 1)), Err(CurveError::OffCurve));
    }

    #[test]
    fn order_detects_non_torsion() {
        // (1, 3) on y^2 = x^3 + 2x^2 + 6x: m = 1, q = 6, n^2 D = -5
        let e = c(1, 1, -5);
        assert!(e.contains(&p(1, 3)));
        assert_eq!(e.order(&p(1, 3)).unwrap(), PointOrder::Infinite);
    }

    #[test]
    fn square_quad_examples() {
        assert_eq!(is_square_quad(&quad(3, 2, 2)), Some(quad(1, 1, 2)));
        assert_eq!(is_square_quad(&quad(23, 8, 7)), Some(quad(4, 1, 7)));
        assert_eq!(is_square_quad(&quad(5, 2, 3)), None);
        // conjugate branch: (1 - sqrt 2)^2 = 3 - 2 sqrt 2
        assert_eq!(is_square_quad(&quad(3, -2, 2)), Some(quad(1, -1, 2)));
        // f = 0 cases
        assert_eq!(is_square_quad(&quad(9, 0, 5)), Some(quad(3, 0, 5)));
        assert_eq!(is_square_quad(&quad(20, 0, 5)), Some(quad(0, 2, 5)));
        assert_eq!(is_square_quad(&quad(-3, 0, -3)), Some(quad(0, 1, -3)));
        assert_eq!(is_square_quad(&quad(7, 0, 5)), None);
        assert_eq!(is_square_quad(&quad(0, 0, 5)), Some(quad(0, 0, 5)));
        // rational parts
        let z = QuadElement::new(
            Rat::new(3.into(), 4.into()),
            Rat::new(1.into(), 2.into()),
            2.into(),
        );
        let root = is_square_quad(&z).unwrap();
        assert_eq!(root.square(), z);
    }

    #[test]
    fn halvable_examples() {
        assert!(c(3, 2, 2).is_halvable(&p(0, 0)).unwrap());
        assert!(!c(5, 2, 3).is_halvable(&p(0, 0)).unwrap());
        assert!(!c(3, 2, 3).is_halvable(&p(0, 0)).unwrap());
        // the order-4 point of (23, 8, 7) is twice the order-8 generator
        assert!(c(23, 8, 7).is_halvable(&p(9, 72)).unwrap());
        assert_eq!(c(3, 2, 2).is_halvable(&p(0, 1)), Err(CurveError::OffCurve));
    }

    #[test]
    fn three_torsion_quartic_examples() {
        assert_eq!(c(3, 2, 3).three_torsion_quartic(&r(1)), r(0));
        assert_eq!(c(3, 2, 3).three_torsion_quartic(&r(0)), r(-9));
        assert_eq!(c(59, 24, 6).three_torsion_quartic(&r(1)), r(0));
        assert_eq!(c(59, 24, 6).q(), Int::from(25));
    }

    #[test]
    fn from_general_examples() {
        let cubic = GeneralCubic::new(r(6), r(1), r(0)).unwrap();
        match cubic.to_mnd().unwrap() {
            FromGeneral::Cyclic { curve, root, scale } => {
                assert_eq!(curve, c(3, 2, 2));
                assert_eq!(root, r(0));
                assert_eq!(scale, r(1));
            }
            other => panic!("unexpected {other:?}"),
        }
        let split = GeneralCubic::new(r(0), r(-1), r(0)).unwrap();
        match split.to_mnd().unwrap() {
            FromGeneral::NonCyclic(rep) => assert_eq!(rep.roots, vec![r(-1), r(0), r(1)]),
            other => panic!("unexpected {other:?}"),
        }
        let no_root = GeneralCubic::new(r(0), r(0), r(2)).unwrap();
        assert_eq!(no_root.to_mnd(), Err(CurveError::NoRationalRoot));
        assert_eq!(
            GeneralCubic::new(r(0), r(0), r(0)),
            Err(CurveError::Singular)
        );
    }

    #[test]
    fn from_general_translates_and_scales() {
        // (x - 1)(x^2 + x + 1/4 + 3/4 * ...) style input: root at x = 1/2,
        // odd middle coefficient after translation
        let half = Rat::new(1.into(), 2.into());
        // f(x) = (x - 1/2)(x^2 + x + 3)
        let a2 = r(1) - &half;
        let a4 = r(3) - &half;
        let a6 = -(r(3) * &half);
        let cubic = GeneralCubic::new(a2, a4, a6).unwrap();
        match cubic.to_mnd().unwrap() {
            FromGeneral::Cyclic { curve, root, .. } => {
                assert_eq!(root, half);
                assert_eq!(curve.j_invariant(), cubic.j_invariant());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn enumerate_is_lexicographic_and_normalized() {
        let all: Vec<CurveMnd> = CurveMnd::enumerate(4, 4, 6).collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        for e in &all {
            assert_eq!(
                CurveMnd::new(e.m().clone(), e.n().clone(), e.d().clone()).as_ref(),
                Ok(e)
            );
        }
        assert!(all.contains(&c(3, 2, 2)));
        assert!(!all
            .iter()
            .any(|e| e.n() == &Int::from(4) && e.m() == &Int::from(0)));
    }
}
