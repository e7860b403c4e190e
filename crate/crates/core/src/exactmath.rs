//! Exact integer and rational helpers.
//!
//! Everything here works on arbitrary-precision values. Small inputs take a
//! `u64` fast path for trial division, but results never depend on word size.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub type Int = BigInt;
pub type Rat = BigRational;

/// Primes up to this bound are removed by trial division before the
/// remaining cofactor is examined.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("zero input is not allowed here")]
    ZeroInput,
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,
    #[error("cofactor {0} survived trial division and could not be classified")]
    UnresolvedCofactor(Int),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeSplit {
    /// `d >= 1`
    pub square_part: Int,
    /// Squarefree, carries the sign of the input.
    pub squarefree_part: Int,
}

/// Prime factorization of `|x|` as `(prime, exponent)` pairs, primes ascending.
pub type Factorization = Vec<(Int, u32)>;

pub fn int_sqrt(x: &Int) -> Option<Int> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    if &r * &r == *x {
        Some(r)
    } else {
        None
    }
}

/// Square root of a rational in lowest terms, if it is a rational square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    let n = int_sqrt(x.numer())?;
    let d = int_sqrt(x.denom())?;
    Some(Rat::new(n, d))
}

pub fn is_square(x: &Int) -> bool {
    int_sqrt(x).is_some()
}

pub fn gcd(x: &Int, y: &Int) -> Result<Int, MathError> {
    if x.is_zero() && y.is_zero() {
        return Err(MathError::GcdOfZeros);
    }
    Ok(x.gcd(y))
}

/// Nonnegative gcd of several integers; `None` when all are zero.
pub fn gcd_many<'a>(xs: impl IntoIterator<Item = &'a Int>) -> Option<Int> {
    let g = xs.into_iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        None
    } else {
        Some(g)
    }
}

/// `Some((r, k))` with `r^k = x`, `k >= 2` maximal, for `x > 1`.
fn perfect_power(x: &Int) -> Option<(Int, u32)> {
    let bits = x.bits() as u32;
    let mut best = None;
    for k in 2..=bits.max(2) {
        let r = x.nth_root(k);
        if r <= Int::one() {
            break;
        }
        if num_traits::pow(r.clone(), k as usize) == *x {
            best = Some((r, k));
        }
    }
    best
}

enum Cofactor {
    Prime(Int),
    /// Composite of two distinct primes, both above the trial bound.
    SquarefreeComposite(Int),
    Power(Int, u32),
    Unresolved(Int),
}

fn classify_cofactor(c: Int, bound: u64) -> Cofactor {
    let b = Int::from(bound);
    let b2 = &b * &b;
    if c <= b2 {
        return Cofactor::Prime(c);
    }
    if let Some((r, k)) = perfect_power(&c) {
        return Cofactor::Power(r, k);
    }
    if c < &b2 * &b {
        // every prime factor exceeds the bound, so at most two of them
        Cofactor::SquarefreeComposite(c)
    } else {
        Cofactor::Unresolved(c)
    }
}

/// Trial division of `|x|` by primes up to `bound`. Returns the prime powers
/// found and the cofactor left over (1 when fully factored). A cofactor
/// greater than 1 has no prime factor at or below `bound`.
fn trial_divide(x: &Int, bound: u64) -> (Vec<(u64, u32)>, Int) {
    let mut found = Vec::new();
    let mut v = x.abs();
    let mut p = 2u64;
    while p <= bound {
        if let Some(small) = v.to_u64() {
            let rest = trial_divide_u64(small, p, bound, &mut found);
            return (found, Int::from(rest));
        }
        let pb = Int::from(p);
        if &pb * &pb > v {
            // v is prime; `classify_cofactor` recognizes it as such
            break;
        }
        let (mut q, mut r) = v.div_rem(&pb);
        if r.is_zero() {
            let mut e = 0;
            while r.is_zero() {
                v = q;
                e += 1;
                (q, r) = v.div_rem(&pb);
            }
            found.push((p, e));
        }
        p = next_candidate(p);
    }
    (found, v)
}

fn next_candidate(p: u64) -> u64 {
    if p == 2 {
        3
    } else {
        p + 2
    }
}

fn trial_divide_u64(mut v: u64, mut p: u64, bound: u64, found: &mut Vec<(u64, u32)>) -> u64 {
    while p <= bound {
        if p.saturating_mul(p) > v {
            if v > 1 {
                found.push((v, 1));
            }
            return 1;
        }
        if v.is_multiple_of(p) {
            let mut e = 0;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            found.push((p, e));
        }
        p = next_candidate(p);
    }
    v
}

/// Full factorization of `|x|`, `x != 0`, with the default trial bound.
pub fn factor(x: &Int) -> Result<Factorization, MathError> {
    factor_with_bound(x, DEFAULT_TRIAL_BOUND)
}

pub fn factor_with_bound(x: &Int, bound: u64) -> Result<Factorization, MathError> {
    if x.is_zero() {
        return Err(MathError::ZeroInput);
    }
    let (small, cof) = trial_divide(x, bound);
    let mut out: Factorization = small.into_iter().map(|(p, e)| (Int::from(p), e)).collect();
    if cof > Int::one() {
        match classify_cofactor(cof, bound) {
            Cofactor::Prime(p) => out.push((p, 1)),
            Cofactor::Power(r, k) => {
                for (p, e) in factor_with_bound(&r, bound)? {
                    out.push((p, e * k));
                }
            }
            Cofactor::SquarefreeComposite(c) | Cofactor::Unresolved(c) => {
                return Err(MathError::UnresolvedCofactor(c))
            }
        }
    }
    out.sort();
    Ok(out)
}

pub fn squarefree_split(x: &Int) -> Result<SquarefreeSplit, MathError> {
    squarefree_split_with_bound(x, DEFAULT_TRIAL_BOUND)
}

pub fn squarefree_split_with_bound(x: &Int, bound: u64) -> Result<SquarefreeSplit, MathError> {
    if x.is_zero() {
        return Err(MathError::ZeroInput);
    }
    let (small, cof) = trial_divide(x, bound);
    let mut d = Int::one();
    let mut core = Int::one();
    for (p, e) in small {
        let p = Int::from(p);
        d *= num_traits::pow(p.clone(), (e / 2) as usize);
        if e % 2 == 1 {
            core *= p;
        }
    }
    if cof > Int::one() {
        match classify_cofactor(cof, bound) {
            Cofactor::Prime(c) | Cofactor::SquarefreeComposite(c) => core *= c,
            Cofactor::Power(r, k) => {
                // r^k = r^(2*(k/2)) * r^(k%2); r itself may carry squares
                d *= num_traits::pow(r.clone(), (k / 2) as usize);
                if k % 2 == 1 {
                    let inner = squarefree_split_with_bound(&r, bound)?;
                    d *= inner.square_part;
                    core *= inner.squarefree_part;
                }
            }
            Cofactor::Unresolved(c) => return Err(MathError::UnresolvedCofactor(c)),
        }
    }
    if x.sign() == Sign::Minus {
        core = -core;
    }
    Ok(SquarefreeSplit {
        square_part: d,
        squarefree_part: core,
    })
}

pub fn is_squarefree(x: &Int) -> Result<bool, MathError> {
    Ok(squarefree_split(x)?.square_part.is_one())
}

/// All positive divisors of the number with factorization `f`, ascending.
pub fn divisors(f: &[(Int, u32)]) -> Vec<Int> {
    let mut out = vec![Int::one()];
    for (p, e) in f {
        let len = out.len();
        let mut pk = Int::one();
        for _ in 0..*e {
            pk *= p;
            for i in 0..len {
                out.push(&out[i] * &pk);
            }
        }
    }
    out.sort();
    out
}

/// Every ordered pair `(p, q)` with `p * q = x`, ordered by `|p|` ascending
/// and positive `p` before negative.
pub fn signed_divisor_pairs(x: &Int) -> Result<Vec<(Int, Int)>, MathError> {
    let f = factor(x)?;
    let mut out = Vec::new();
    for d in divisors(&f) {
        let q = x / &d;
        out.push((-&d, -&q));
        out.push((d, q));
    }
    // pushed negative-first above; swap each adjacent pair into place
    for pair in out.chunks_mut(2) {
        pair.swap(0, 1);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    fn pairs(x: i64) -> Vec<(i64, i64)> {
        signed_divisor_pairs(&int(x))
            .unwrap()
            .into_iter()
            .map(|(p, q)| (p.to_i64().unwrap(), q.to_i64().unwrap()))
            .collect()
    }

    #[test]
    fn int_sqrt_examples() {
        assert_eq!(int_sqrt(&int(0)), Some(int(0)));
        assert_eq!(int_sqrt(&int(81)), Some(int(9)));
        assert_eq!(int_sqrt(&int(24)), None);
        assert_eq!(int_sqrt(&int(-4)), None);
    }

    #[test]
    fn squarefree_split_examples() {
        let s = squarefree_split(&int(8)).unwrap();
        assert_eq!((s.square_part, s.squarefree_part), (int(2), int(2)));
        let s = squarefree_split(&int(-12)).unwrap();
        assert_eq!((s.square_part, s.squarefree_part), (int(2), int(-3)));
        let s = squarefree_split(&int(7)).unwrap();
        assert_eq!((s.square_part, s.squarefree_part), (int(1), int(7)));
        assert_eq!(squarefree_split(&int(0)), Err(MathError::ZeroInput));
    }

    #[test]
    fn squarefree_split_large_cofactors() {
        // 1000003 is prime, above a small trial bound
        let p = int(1_000_003);
        let s = squarefree_split_with_bound(&(&p * &p * 3), 100).unwrap();
        assert_eq!((s.square_part, s.squarefree_part), (p.clone(), int(3)));
        let s = squarefree_split_with_bound(&(&p * &p * &p * 5), 1000).unwrap();
        assert_eq!((s.square_part, s.squarefree_part), (p.clone(), &p * 5));
        // p * q with both above the bound but below bound^3 is squarefree
        let q = int(1_000_033);
        let s = squarefree_split_with_bound(&(&p * &q), 20_000).unwrap();
        assert_eq!(s.squarefree_part, &p * &q);
        // p^2 * q beyond bound^3 cannot be resolved without factoring
        let err = squarefree_split_with_bound(&(&p * &p * &q), 100).unwrap_err();
        assert!(matches!(err, MathError::UnresolvedCofactor(_)));
    }

    #[test]
    fn factor_handles_big_inputs() {
        let x = Int::from(2u64).pow(70) * int(3).pow(5) * int(1_000_003);
        let f = factor(&x).unwrap();
        assert_eq!(f, vec![(int(2), 70), (int(3), 5), (int(1_000_003), 1)]);
    }

    #[test]
    fn divisor_pair_examples() {
        assert_eq!(
            pairs(4),
            vec![(1, 4), (-1, -4), (2, 2), (-2, -2), (4, 1), (-4, -1)]
        );
        assert_eq!(pairs(1), vec![(1, 1), (-1, -1)]);
        let six = pairs(6);
        assert_eq!(six.len(), 8);
        let firsts: Vec<i64> = six.iter().map(|p| p.0).collect();
        assert_eq!(firsts, vec![1, -1, 2, -2, 3, -3, 6, -6]);
        assert_eq!(pairs(-2), vec![(1, -2), (-1, 2), (2, -1), (-2, 1)]);
        assert!(signed_divisor_pairs(&int(0)).is_err());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&int(23), &int(8)).unwrap(), int(1));
        assert_eq!(gcd(&int(12), &int(8)).unwrap(), int(4));
        assert_eq!(gcd(&int(0), &int(5)).unwrap(), int(5));
        assert_eq!(gcd(&int(-6), &int(4)).unwrap(), int(2));
        assert_eq!(gcd(&int(0), &int(0)), Err(MathError::GcdOfZeros));
    }

    #[test]
    fn rat_sqrt_lowest_terms() {
        assert_eq!(
            rat_sqrt(&Rat::new(int(18), int(8))),
            Some(Rat::new(int(3), int(2)))
        );
        assert_eq!(rat_sqrt(&Rat::new(int(2), int(1))), None);
    }

    fn tau(mut x: u64) -> usize {
        let mut t = 1;
        let mut p = 2;
        while p * p <= x {
            let mut e = 0;
            while x.is_multiple_of(p) {
                x /= p;
                e += 1;
            }
            t *= e + 1;
            p += 1;
        }
        if x > 1 {
            t *= 2;
        }
        t
    }

    proptest! {
        #[test]
        fn split_recombines(x in 1i64..10_000_000) {
            let s = squarefree_split(&int(x)).unwrap();
            prop_assert_eq!(&s.square_part * &s.square_part * &s.squarefree_part, int(x));
            // brute-force squarefreeness of the core
            let core = s.squarefree_part.to_i64().unwrap();
            let mut p = 2;
            while p * p <= core {
                prop_assert!(core % (p * p) != 0);
                p += 1;
            }
        }

        #[test]
        fn sqrt_of_square(r in 0u64..1_000_000_000) {
            let r = Int::from(r);
            prop_assert_eq!(int_sqrt(&(&r * &r)), Some(r));
        }

        #[test]
        fn divisor_pairs_complete(x in -5000i64..5000) {
            prop_assume!(x != 0);
            let ps = pairs(x);
            prop_assert_eq!(ps.len(), 2 * tau(x.unsigned_abs()));
            for (p, q) in &ps {
                prop_assert_eq!(p * q, x);
            }
        }
    }

    #[test]
    fn sqrt_of_square_up_to_1e18() {
        // deterministic spread of 1000 roots up to 10^18
        let mut r: u64 = 1;
        for i in 0..1000u64 {
            r = r
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407 + i);
            let root = Int::from(r % 1_000_000_000_000_000_000);
            assert_eq!(int_sqrt(&(&root * &root)), Some(root.clone()));
            if root > Int::one() {
                assert_eq!(int_sqrt(&(&root * &root - 1)), None);
            }
        }
    }
}
