//! Brute-force rational torsion by Lutz-Nagell.
//!
//! On the integral model `y^2 = x^3 + 2m x^2 + q x` every rational torsion
//! point has integer coordinates, and either `y = 0` or `y^2` divides the
//! discriminant. The oracle lists every integer point allowed by that bound,
//! keeps those of order at most 12, and closes the result under addition. It
//! uses nothing from the classifier.

use std::collections::HashSet;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::curve::{CurveMnd, Point, PointOrder};
use crate::exactmath::{divisors, factor, int_sqrt, Int, MathError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("enumerated torsion on {curve} is not one of the possible groups: {detail}")]
    NotMazur { curve: CurveMnd, detail: String },
}

/// Which Lutz-Nagell divisibility to enumerate `y` from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DivisorBound {
    /// `y^2 | Δ`
    #[default]
    SquareDividesDisc,
    /// `y | Δ`, a weaker filter with many more candidates.
    DividesDisc,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupStructure {
    /// `Z/k`
    Cyclic(u32),
    /// `Z/2 x Z/k` with `k` even
    TwoByEven(u32),
}

impl GroupStructure {
    pub fn order(self) -> u32 {
        match self {
            GroupStructure::Cyclic(k) => k,
            GroupStructure::TwoByEven(k) => 2 * k,
        }
    }

    /// One of the fifteen groups that occur over the rationals.
    pub fn is_possible(self) -> bool {
        match self {
            GroupStructure::Cyclic(k) => (1..=10).contains(&k) || k == 12,
            GroupStructure::TwoByEven(k) => matches!(k, 2 | 4 | 6 | 8),
        }
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStructure::Cyclic(k) => write!(f, "Z/{k}"),
            GroupStructure::TwoByEven(k) => write!(f, "Z/2 x Z/{k}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionGroup {
    /// Sorted: infinity first, then by `(x, y)`.
    pub elements: Vec<Point>,
    pub structure: GroupStructure,
    pub generators: Vec<Point>,
    /// Order of each entry of `elements`.
    pub orders: Vec<u32>,
}

impl TorsionGroup {
    pub fn order(&self) -> u32 {
        self.elements.len() as u32
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.elements.contains(p)
    }

    pub fn points_of_order(&self, k: u32) -> impl Iterator<Item = &Point> {
        self.elements
            .iter()
            .zip(&self.orders)
            .filter(move |(_, o)| **o == k)
            .map(|(p, _)| p)
    }
}

/// `Δ = 16 * disc(x^3 + 2m x^2 + q x) = 16 q^2 (4m^2 - 4q) = 64 q^2 n^2 D`.
pub fn discriminant(c: &CurveMnd) -> Int {
    let q = c.q();
    Int::from(64) * &q * &q * c.n() * c.n() * c.d()
}

/// Factorization of `Δ`, assembled from the factors of `q`, `n` and `D`.
fn discriminant_factorization(c: &CurveMnd) -> Result<Vec<(Int, u32)>, MathError> {
    let mut exps: Vec<(Int, u32)> = vec![(Int::from(2), 6)];
    let parts = [(c.q(), 2u32), (c.n().clone(), 2), (c.d().clone(), 1)];
    for (value, mult) in parts {
        for (p, e) in factor(&value)? {
            match exps.iter_mut().find(|(f, _)| *f == p) {
                Some(slot) => slot.1 += e * mult,
                None => exps.push((p, e * mult)),
            }
        }
    }
    exps.sort();
    Ok(exps)
}

/// Positive divisors of a factored number, each paired with its exponents.
fn divisors_with_exponents(f: &[(Int, u32)]) -> Vec<(Int, Vec<u32>)> {
    let mut out = vec![(Int::one(), vec![0; f.len()])];
    for (i, (p, e)) in f.iter().enumerate() {
        let len = out.len();
        let mut pk = Int::one();
        for k in 1..=*e {
            pk *= p;
            for j in 0..len {
                let mut exps = out[j].1.clone();
                exps[i] = k;
                out.push((&out[j].0 * &pk, exps));
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Integer roots of `x^3 + a x^2 + b x - c` for `c > 0` given as the
/// factorization `primes^exps`. Roots divide `c`, and any root satisfies
/// `|x| <= 2 max(|a|, |b|^(1/2), |c|^(1/3))`.
fn cubic_roots_dividing(a: &Int, b: &Int, primes: &[Int], exps: &[u32]) -> Vec<Int> {
    let c: Int = primes
        .iter()
        .zip(exps)
        .map(|(p, e)| num_traits::pow(p.clone(), *e as usize))
        .product();
    let bound = Int::from(2) * a.abs().max(b.abs().sqrt() + 1).max(c.cbrt() + 1);
    let mut roots = Vec::new();
    if let (Some(a), Some(b), Some(c), Some(bound)) =
        (a.to_i128(), b.to_i128(), c.to_i128(), bound.to_u64())
    {
        if bound < (1 << 40) && a.abs() < (1 << 40) && b.abs() < (1 << 80) {
            let small_primes: Option<Vec<u64>> = primes.iter().map(|p| p.to_u64()).collect();
            if let Some(ps) = small_primes {
                divisor_walk_u64(&ps, exps, 0, 1, bound, &mut |d| {
                    for x in [d as i128, -(d as i128)] {
                        // |x| < 2^40 and |a|, |b| bounded as above keep this in range
                        if x * (x * (x + a) + b) == c {
                            roots.push(Int::from(x));
                        }
                    }
                });
                roots.sort();
                return roots;
            }
        }
    }
    let exp_f: Vec<(Int, u32)> = primes.iter().cloned().zip(exps.iter().copied()).collect();
    for d in divisors(&exp_f) {
        if d > bound {
            break;
        }
        for x in [d.clone(), -d] {
            if &x * (&x * (&x + a) + b) == c {
                roots.push(x);
            }
        }
    }
    roots.sort();
    roots
}

fn divisor_walk_u64(
    primes: &[u64],
    exps: &[u32],
    idx: usize,
    acc: u64,
    bound: u64,
    visit: &mut impl FnMut(u64),
) {
    if idx == primes.len() {
        visit(acc);
        return;
    }
    let mut cur = acc;
    for k in 0..=exps[idx] {
        if k > 0 {
            match cur.checked_mul(primes[idx]) {
                Some(next) if next <= bound => cur = next,
                _ => break,
            }
        }
        divisor_walk_u64(primes, exps, idx + 1, cur, bound, visit);
    }
}

/// Points of order two: `(x, 0)` for the integer roots of the cubic.
fn two_torsion(c: &CurveMnd) -> Vec<Point> {
    let mut out = vec![Point::from_ints(0, 0)];
    // roots of x^2 + 2m x + q, integral iff m^2 - q is a square
    if let Some(s) = int_sqrt(&(c.m() * c.m() - c.q())) {
        for x in [-c.m() + &s, -c.m() - &s] {
            if !x.is_zero() {
                out.push(Point::from_ints(x, 0));
            }
        }
    }
    out.dedup();
    out
}

/// Every integer point `(x, y)`, `y != 0`, permitted by the divisor bound.
fn lutz_nagell_candidates(c: &CurveMnd, mode: DivisorBound) -> Result<Vec<Point>, MathError> {
    let disc = discriminant_factorization(c)?;
    let y_bound: Vec<(Int, u32)> = disc
        .iter()
        .map(|(p, e)| {
            let k = match mode {
                DivisorBound::SquareDividesDisc => e / 2,
                DivisorBound::DividesDisc => *e,
            };
            (p.clone(), k)
        })
        .filter(|(_, k)| *k > 0)
        .collect();
    let primes: Vec<Int> = y_bound.iter().map(|(p, _)| p.clone()).collect();
    let a = c.a2();
    let b = c.q();
    let mut out = Vec::new();
    for (y, exps) in divisors_with_exponents(&y_bound) {
        let doubled: Vec<u32> = exps.iter().map(|e| 2 * e).collect();
        for x in cubic_roots_dividing(&a, &b, &primes, &doubled) {
            out.push(Point::from_ints(x.clone(), y.clone()));
            out.push(Point::from_ints(x, -y.clone()));
        }
    }
    Ok(out)
}

fn sort_key(p: &Point) -> (u8, Option<(crate::Rat, crate::Rat)>) {
    match p {
        Point::Infinity => (0, None),
        Point::Affine { x, y } => (1, Some((x.clone(), y.clone()))),
    }
}

pub fn torsion_group(c: &CurveMnd) -> Result<TorsionGroup, OracleError> {
    torsion_group_with(c, DivisorBound::default())
}

pub fn torsion_group_with(c: &CurveMnd, mode: DivisorBound) -> Result<TorsionGroup, OracleError> {
    let mut found: HashSet<Point> = HashSet::new();
    found.insert(Point::Infinity);
    let candidates = two_torsion(c)
        .into_iter()
        .chain(lutz_nagell_candidates(c, mode)?);
    for p in candidates {
        debug_assert!(c.contains(&p));
        if let PointOrder::Finite(_) = c.order_unchecked(&p) {
            found.insert(p);
        }
    }
    // closure; on a correct enumeration this adds nothing
    loop {
        let current: Vec<Point> = found.iter().cloned().collect();
        let mut added = false;
        for p in &current {
            for q in &current {
                if found.insert(c.add_unchecked(p, q)) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    let mut elements: Vec<Point> = found.into_iter().collect();
    elements.sort_by_key(sort_key);
    let not_mazur = |detail: String| OracleError::NotMazur {
        curve: c.clone(),
        detail,
    };
    let mut orders = Vec::with_capacity(elements.len());
    for p in &elements {
        match c.order_unchecked(p) {
            PointOrder::Finite(k) => orders.push(k),
            PointOrder::Infinite => {
                return Err(not_mazur(format!("closure produced {p} of infinite order")))
            }
        }
    }
    let size = elements.len() as u32;
    let two_torsion_count = orders.iter().filter(|&&k| k == 2).count();
    let max_order = *orders.iter().max().expect("contains infinity");
    let first_of_max = elements[orders.iter().position(|&k| k == max_order).unwrap()].clone();
    let (structure, generators) = match two_torsion_count {
        0 | 1 if max_order == size => (GroupStructure::Cyclic(size), vec![first_of_max]),
        3 if 2 * max_order == size => {
            let half = max_order / 2;
            let in_span = c.mul_unchecked(&first_of_max, half);
            let second = elements
                .iter()
                .zip(&orders)
                .find(|(p, k)| **k == 2 && **p != in_span)
                .map(|(p, _)| p.clone())
                .expect("three points of order two");
            (
                GroupStructure::TwoByEven(max_order),
                vec![first_of_max, second],
            )
        }
        _ => {
            return Err(not_mazur(format!(
                "{size} elements, {two_torsion_count} of order two, maximal order {max_order}"
            )))
        }
    };
    if !structure.is_possible() {
        return Err(not_mazur(format!("structure {structure}")));
    }
    Ok(TorsionGroup {
        elements,
        structure,
        generators,
        orders,
    })
}

/// Whether `g` has the shape every curve of this family must have: cyclic of
/// even order, containing `(0, 0)`.
pub fn has_family_shape(g: &TorsionGroup) -> bool {
    matches!(g.structure, GroupStructure::Cyclic(k) if matches!(k, 2 | 4 | 6 | 8 | 10 | 12))
        && g.contains(&Point::from_ints(0, 0))
}
