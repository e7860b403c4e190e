//! Torsion classification from explicit Diophantine conditions on `(m, n, D)`.
//!
//! Each case checker searches for integer parameters that rebuild `m` and `n`.
//! Every case forces `n` to be even, and the parameters split `n/2` as a
//! product, so the search runs over the signed divisor pairs of `n/2`. The
//! first witness in divisor order (ascending `|p|`, positive first) wins.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::curve::{CurveError, CurveMnd, Point, PointOrder};
use crate::exactmath::{gcd_many, int_sqrt, signed_divisor_pairs, Int, MathError, Rat};
use crate::oracle::{torsion_group, GroupStructure, OracleError, TorsionGroup};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("inconsistent case conditions on {curve}: {detail}")]
    Inconsistency {
        curve: Box<CurveMnd>,
        detail: String,
    },
    #[error("generator x = {x} on {curve} gives a non-square y^2 = {y2}")]
    NonSquareY {
        curve: Box<CurveMnd>,
        x: Int,
        y2: Int,
    },
    #[error("generator {point} on {curve} has order {found:?}, expected {expected}")]
    GeneratorOrder {
        curve: Box<CurveMnd>,
        point: Box<Point>,
        found: PointOrder,
        expected: u32,
    },
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Math(#[from] MathError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    I,
    II,
    III,
    IV,
    V,
}

impl CaseTag {
    pub const ALL: [CaseTag; 5] = [
        CaseTag::I,
        CaseTag::II,
        CaseTag::III,
        CaseTag::IV,
        CaseTag::V,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTag::I => "I",
            CaseTag::II => "II",
            CaseTag::III => "III",
            CaseTag::IV => "IV",
            CaseTag::V => "V",
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CaseTag::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown case {s:?}, expected one of I, II, III, IV, V"))
    }
}

/// Integer parameters satisfying one case's conditions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Witness {
    /// `m = a^2 + b^2 D`, `n = 2ab`
    CaseI { a: Int, b: Int },
    /// `m = u^4 + v^2 w^2 D`, `n = 2u^2 vw`, `2u^2 - v^2 = w^2 D`
    CaseII { u: Int, v: Int, w: Int },
    /// `m = a^2 + 2ac + b^2 D`, `n = 2b(a + c)`, `a^2 - b^2 D = c^2`
    CaseIII { a: Int, b: Int, c: Int },
    /// `m = v^2 - u^2 + w^2 D`, `n = 2vw`, plus a quartic relation
    CaseIV { u: Int, v: Int, w: Int },
    /// `m = 2s(s + u) - v^2`, `n = 2st`, `(s + u)^2 - v^2 = t^2 D`,
    /// `(u - v)^2 (u + v) = 4uvs`
    CaseV { s: Int, t: Int, u: Int, v: Int },
}

/// `3(v^2 - w^2 D)^4 - 4u^2 (v^2 - w^2 D)^2 (v^2 + w^2 D) - 16 u^4 v^2 w^2 D`
pub fn case_iv_quartic(u: &Int, v: &Int, w: &Int, d: &Int) -> Int {
    let u2 = u * u;
    let v2 = v * v;
    let w2d = w * w * d;
    let diff = &v2 - &w2d;
    let diff2 = &diff * &diff;
    Int::from(3) * &diff2 * &diff2
        - Int::from(4) * &u2 * &diff2 * (&v2 + &w2d)
        - Int::from(16) * &u2 * &u2 * &v2 * &w2d
}

impl Witness {
    pub fn case(&self) -> CaseTag {
        match self {
            Witness::CaseI { .. } => CaseTag::I,
            Witness::CaseII { .. } => CaseTag::II,
            Witness::CaseIII { .. } => CaseTag::III,
            Witness::CaseIV { .. } => CaseTag::IV,
            Witness::CaseV { .. } => CaseTag::V,
        }
    }

    pub fn params(&self) -> Vec<&Int> {
        match self {
            Witness::CaseI { a, b } => vec![a, b],
            Witness::CaseII { u, v, w } | Witness::CaseIV { u, v, w } => vec![u, v, w],
            Witness::CaseIII { a, b, c } => vec![a, b, c],
            Witness::CaseV { s, t, u, v } => vec![s, t, u, v],
        }
    }

    pub fn from_params(case: CaseTag, p: &[Int]) -> Option<Witness> {
        let arity = match case {
            CaseTag::I => 2,
            CaseTag::II | CaseTag::III | CaseTag::IV => 3,
            CaseTag::V => 4,
        };
        if p.len() != arity {
            return None;
        }
        let p = p.to_vec();
        Some(match case {
            CaseTag::I => Witness::CaseI {
                a: p[0].clone(),
                b: p[1].clone(),
            },
            CaseTag::II => Witness::CaseII {
                u: p[0].clone(),
                v: p[1].clone(),
                w: p[2].clone(),
            },
            CaseTag::III => Witness::CaseIII {
                a: p[0].clone(),
                b: p[1].clone(),
                c: p[2].clone(),
            },
            CaseTag::IV => Witness::CaseIV {
                u: p[0].clone(),
                v: p[1].clone(),
                w: p[2].clone(),
            },
            CaseTag::V => Witness::CaseV {
                s: p[0].clone(),
                t: p[1].clone(),
                u: p[2].clone(),
                v: p[3].clone(),
            },
        })
    }

    /// `(m, n)` built from the parameters.
    pub fn reconstruct(&self, d: &Int) -> (Int, Int) {
        match self {
            Witness::CaseI { a, b } => (a * a + b * b * d, Int::from(2) * a * b),
            Witness::CaseII { u, v, w } => {
                let u2 = u * u;
                (&u2 * &u2 + v * v * w * w * d, Int::from(2) * u2 * v * w)
            }
            Witness::CaseIII { a, b, c } => (
                a * a + Int::from(2) * a * c + b * b * d,
                Int::from(2) * b * (a + c),
            ),
            Witness::CaseIV { u, v, w } => (v * v - u * u + w * w * d, Int::from(2) * v * w),
            Witness::CaseV { s, t, u, v } => {
                (Int::from(2) * s * (s + u) - v * v, Int::from(2) * s * t)
            }
        }
    }

    /// The case's side conditions other than the formulas for `m`, `n`.
    pub fn side_conditions_hold(&self, d: &Int) -> bool {
        let nonzero = self.params().iter().all(|p| !p.is_zero());
        nonzero
            && match self {
                Witness::CaseI { a, b } => gcd_many([a, b]).is_some_and(|g| g == Int::from(1)),
                Witness::CaseII { u, v, w } => Int::from(2) * u * u - v * v == w * w * d,
                Witness::CaseIII { a, b, c } => {
                    a * a - b * b * d == c * c
                        && gcd_many([a, b, c]).is_some_and(|g| g == Int::from(1))
                }
                Witness::CaseIV { u, v, w } => case_iv_quartic(u, v, w, d).is_zero(),
                Witness::CaseV { s, t, u, v } => {
                    let spu = s + u;
                    &spu * &spu - v * v == t * t * d
                        && (u - v) * (u - v) * (u + v) == Int::from(4) * u * v * s
                }
            }
    }

    /// x-coordinate of the generator built from the parameters.
    pub fn generator_x(&self, d: &Int) -> Int {
        match self {
            Witness::CaseI { a, b } => a * a - b * b * d,
            Witness::CaseII { u, v, .. } => {
                let vmu = v - u;
                (u + v) * &vmu * &vmu * &vmu
            }
            Witness::CaseIII { a, c, .. } => Int::from(5) * c * c + Int::from(4) * a * c,
            Witness::CaseIV { u, v, w } => (u + v) * (u + v) - w * w * d,
            Witness::CaseV { s, u, v, .. } => Int::from(2) * v * v + Int::from(4) * v * s - u * u,
        }
    }

    /// Closed form for `x(2P)` of the generator `P`.
    ///
    /// For case V the generator is `P5 + (0, 0)` with `x(P5) = u^2`, so twice
    /// the generator is `2 P5`, whose x-coordinate is `v^2`.
    pub fn double_generator_x(&self) -> Int {
        match self {
            Witness::CaseI { .. } => Int::zero(),
            Witness::CaseII { u, v, .. } => {
                let t = u * u - v * v;
                &t * &t
            }
            Witness::CaseIII { c, .. } => c * c,
            Witness::CaseIV { u, .. } => u * u,
            Witness::CaseV { v, .. } => v * v,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = match self {
            Witness::CaseI { .. } => &["a", "b"],
            Witness::CaseII { .. } | Witness::CaseIV { .. } => &["u", "v", "w"],
            Witness::CaseIII { .. } => &["a", "b", "c"],
            Witness::CaseV { .. } => &["s", "t", "u", "v"],
        };
        write!(f, "case {}:", self.case())?;
        for (name, value) in names.iter().zip(self.params()) {
            write!(f, " {name}={value}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassTag {
    Z2,
    Z4,
    Z6,
    Z8,
    Z10,
    Z12,
}

impl ClassTag {
    pub const ALL: [ClassTag; 6] = [
        ClassTag::Z2,
        ClassTag::Z4,
        ClassTag::Z6,
        ClassTag::Z8,
        ClassTag::Z10,
        ClassTag::Z12,
    ];

    pub fn order(self) -> u32 {
        match self {
            ClassTag::Z2 => 2,
            ClassTag::Z4 => 4,
            ClassTag::Z6 => 6,
            ClassTag::Z8 => 8,
            ClassTag::Z10 => 10,
            ClassTag::Z12 => 12,
        }
    }

    pub fn from_order(order: u32) -> Option<ClassTag> {
        ClassTag::ALL.into_iter().find(|t| t.order() == order)
    }

    /// Whether `Z/k` is a subgroup of this class.
    pub fn contains_cyclic(self, k: u32) -> bool {
        self.order().is_multiple_of(k)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::Z2 => "Z2",
            ClassTag::Z4 => "Z4",
            ClassTag::Z6 => "Z6",
            ClassTag::Z8 => "Z8",
            ClassTag::Z10 => "Z10",
            ClassTag::Z12 => "Z12",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClassTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| format!("unknown class {s:?}"))
    }
}

/// `Z2` carries no witness; every other class carries the witness of the
/// case its generator is built from (I, III, II, IV, V for Z4, Z6, Z8, Z12, Z10).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionClass {
    pub tag: ClassTag,
    pub witness: Option<Witness>,
}

impl TorsionClass {
    pub fn order(&self) -> u32 {
        self.tag.order()
    }
}

fn half_of_even(n: &Int) -> Option<Int> {
    if n.is_even() {
        Some(n / 2)
    } else {
        None
    }
}

pub fn check_case_i(c: &CurveMnd) -> Result<Option<Witness>, ClassifyError> {
    let Some(half) = half_of_even(c.n()) else {
        return Ok(None);
    };
    let d = c.d();
    for (a, b) in signed_divisor_pairs(&half)? {
        if &a * &a + &b * &b * d != *c.m() {
            continue;
        }
        let w = Witness::CaseI { a, b };
        if w.side_conditions_hold(d) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Searches for an order-8 witness on top of a case I witness `(a, b)`:
/// `a = u^2`, `c^2 = a^2 - b^2 D`, `a + c = v^2`, `w = b / v`.
pub fn check_case_ii(c: &CurveMnd, case_i: &Witness) -> Result<Option<Witness>, ClassifyError> {
    let Witness::CaseI { a, b } = case_i else {
        return Ok(None);
    };
    let d = c.d();
    let Some(u) = int_sqrt(a) else {
        return Ok(None);
    };
    let Some(c_abs) = int_sqrt(&(a * a - b * b * d)) else {
        return Ok(None);
    };
    for c_val in [c_abs.clone(), -c_abs] {
        let Some(v) = int_sqrt(&(a + &c_val)) else {
            continue;
        };
        if v.is_zero() || !(b % &v).is_zero() {
            continue;
        }
        let w = Witness::CaseII {
            u: u.clone(),
            w: b / &v,
            v,
        };
        if w.side_conditions_hold(d) && w.reconstruct(d) == (c.m().clone(), c.n().clone()) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Divisor pairs `(b, k)` of `n/2` with `k = a + c`; `a = (k^2 + b^2 D) / 2k`.
pub fn check_case_iii(c: &CurveMnd) -> Result<Option<Witness>, ClassifyError> {
    let Some(half) = half_of_even(c.n()) else {
        return Ok(None);
    };
    let d = c.d();
    for (b, k) in signed_divisor_pairs(&half)? {
        let (a, rem) = (&k * &k + &b * &b * d).div_rem(&(Int::from(2) * &k));
        if !rem.is_zero() {
            continue;
        }
        let c_val = &k - &a;
        let w = Witness::CaseIII { a, b, c: c_val };
        if w.side_conditions_hold(d) && w.reconstruct(d).0 == *c.m() {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Divisor pairs `(v, w)` of `n/2`; `u^2 = v^2 + w^2 D - m` must be a positive
/// square and the quartic must vanish.
pub fn check_case_iv(c: &CurveMnd) -> Result<Option<Witness>, ClassifyError> {
    let Some(half) = half_of_even(c.n()) else {
        return Ok(None);
    };
    let d = c.d();
    for (v, w) in signed_divisor_pairs(&half)? {
        let u2 = &v * &v + &w * &w * d - c.m();
        if !u2.is_positive() {
            continue;
        }
        let Some(u) = int_sqrt(&u2) else {
            continue;
        };
        let wit = Witness::CaseIV { u, v, w };
        if wit.side_conditions_hold(d) {
            return Ok(Some(wit));
        }
    }
    Ok(None)
}

/// Divisor pairs `(s, t)` of `n/2`. Eliminating `v` gives
/// `u^2 = t^2 D + s^2 - m`, then `v^2 = 2s^2 + 2su - m`; both signs of `u`
/// and `v` are tried against the remaining relations.
pub fn check_case_v(c: &CurveMnd) -> Result<Option<Witness>, ClassifyError> {
    let Some(half) = half_of_even(c.n()) else {
        return Ok(None);
    };
    let d = c.d();
    let m = c.m();
    for (s, t) in signed_divisor_pairs(&half)? {
        let u2 = &t * &t * d + &s * &s - m;
        if !u2.is_positive() {
            continue;
        }
        let Some(u_abs) = int_sqrt(&u2) else {
            continue;
        };
        for u in [u_abs.clone(), -u_abs] {
            let v2 = Int::from(2) * &s * &s + Int::from(2) * &s * &u - m;
            if !v2.is_positive() {
                continue;
            }
            let Some(v_abs) = int_sqrt(&v2) else {
                continue;
            };
            for v in [v_abs.clone(), -v_abs] {
                let w = Witness::CaseV {
                    s: s.clone(),
                    t: t.clone(),
                    u: u.clone(),
                    v,
                };
                if w.side_conditions_hold(d) {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// All five case checks for one curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseWitnesses {
    pub i: Option<Witness>,
    pub ii: Option<Witness>,
    pub iii: Option<Witness>,
    pub iv: Option<Witness>,
    pub v: Option<Witness>,
}

pub fn case_witnesses(c: &CurveMnd) -> Result<CaseWitnesses, ClassifyError> {
    let i = check_case_i(c)?;
    let ii = match &i {
        Some(w) => check_case_ii(c, w)?,
        None => None,
    };
    Ok(CaseWitnesses {
        ii,
        i,
        iii: check_case_iii(c)?,
        iv: check_case_iv(c)?,
        v: check_case_v(c)?,
    })
}

/// Decides the torsion class.
///
/// I and III together give Z12, I alone gives Z8 or Z4 depending on II,
/// III alone gives Z6, otherwise V decides between Z10 and Z2. The case IV
/// quartic is checked independently and must agree with "I and III";
/// case V must exclude both I and III.
pub fn classify(c: &CurveMnd) -> Result<TorsionClass, ClassifyError> {
    let w = case_witnesses(c)?;
    let inconsistent = |detail: &str| {
        Err(ClassifyError::Inconsistency {
            curve: Box::new(c.clone()),
            detail: detail.to_string(),
        })
    };
    let both = w.i.is_some() && w.iii.is_some();
    if w.iv.is_some() != both {
        return inconsistent(if both {
            "cases I and III hold but no case IV witness exists"
        } else {
            "case IV holds without both cases I and III"
        });
    }
    if w.v.is_some() && (w.i.is_some() || w.iii.is_some()) {
        return inconsistent("case V holds together with case I or III");
    }
    if w.ii.is_some() && w.iii.is_some() {
        return inconsistent("cases II and III together would force a point of order 24");
    }
    let (tag, witness) = match (w.i, w.iii) {
        (Some(_), Some(_)) => (ClassTag::Z12, w.iv),
        (Some(i), None) => match w.ii {
            Some(ii) => (ClassTag::Z8, Some(ii)),
            None => (ClassTag::Z4, Some(i)),
        },
        (None, Some(iii)) => (ClassTag::Z6, Some(iii)),
        (None, None) => match w.v {
            Some(v) => (ClassTag::Z10, Some(v)),
            None => (ClassTag::Z2, None),
        },
    };
    Ok(TorsionClass { tag, witness })
}

/// The generator of the class, with `y > 0` (or `(0, 0)` for Z2). Its order
/// is checked against the class.
pub fn generator(c: &CurveMnd, cls: &TorsionClass) -> Result<Point, ClassifyError> {
    let x = match &cls.witness {
        Some(w) => w.generator_x(c.d()),
        None => Int::zero(),
    };
    let y2 = c.rhs_int(&x);
    let Some(y) = int_sqrt(&y2) else {
        return Err(ClassifyError::NonSquareY {
            curve: Box::new(c.clone()),
            x,
            y2,
        });
    };
    let point = Point::from_ints(x, y);
    let found = c.order(&point)?;
    if found != PointOrder::Finite(cls.order()) {
        return Err(ClassifyError::GeneratorOrder {
            curve: Box::new(c.clone()),
            point: Box::new(point),
            found,
            expected: cls.order(),
        });
    }
    Ok(point)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub curve: CurveMnd,
    pub cls: TorsionClass,
    pub generator: Point,
    pub generator_order: u32,
    pub oracle_group: Option<TorsionGroup>,
    pub agree: Option<bool>,
}

impl ClassificationReport {
    pub fn generator_ints(&self) -> (Int, Int) {
        let to_int = |r: Option<&Rat>| r.map(|v| v.to_integer()).unwrap_or_default();
        (to_int(self.generator.x()), to_int(self.generator.y()))
    }
}

pub fn full_report(c: &CurveMnd, with_oracle: bool) -> Result<ClassificationReport, ClassifyError> {
    let cls = classify(c)?;
    let gen = generator(c, &cls)?;
    let generator_order = cls.order();
    let (oracle_group, agree) = if with_oracle {
        let g = torsion_group(c)?;
        let agree = g.structure == GroupStructure::Cyclic(cls.order())
            && g.contains(&gen)
            && g.order() == generator_order;
        (Some(g), Some(agree))
    } else {
        (None, None)
    };
    Ok(ClassificationReport {
        curve: c.clone(),
        cls,
        generator: gen,
        generator_order,
        oracle_group,
        agree,
    })
}

/// Order of the group an oracle reports, as a class tag when it is even cyclic.
pub fn oracle_class(g: &TorsionGroup) -> Option<ClassTag> {
    match g.structure {
        GroupStructure::Cyclic(k) => ClassTag::from_order(k),
        GroupStructure::TwoByEven(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn to_i64(x: &Int) -> Option<i64> {
        x.to_i64()
    }

    fn c(m: i64, n: i64, d: i64) -> CurveMnd {
        CurveMnd::new(m, n, d).unwrap()
    }

    fn ints(w: &Witness) -> Vec<i64> {
        w.params().into_iter().map(|p| to_i64(p).unwrap()).collect()
    }

    #[test]
    fn case_i_examples() {
        assert_eq!(
            ints(&check_case_i(&c(3, 2, 2)).unwrap().unwrap()),
            vec![1, 1]
        );
        assert_eq!(
            ints(&check_case_i(&c(23, 8, 7)).unwrap().unwrap()),
            vec![4, 1]
        );
        assert_eq!(check_case_i(&c(5, 2, 3)).unwrap(), None);
        assert_eq!(check_case_i(&c(1, 1, 2)).unwrap(), None);
    }

    #[test]
    fn case_ii_examples() {
        let e = c(23, 8, 7);
        let i = check_case_i(&e).unwrap().unwrap();
        assert_eq!(
            ints(&check_case_ii(&e, &i).unwrap().unwrap()),
            vec![2, 1, 1]
        );

        let e = c(3, 2, 2);
        let i = check_case_i(&e).unwrap().unwrap();
        assert_eq!(check_case_ii(&e, &i).unwrap(), None);

        let e = c(9, 4, 5);
        let i = check_case_i(&e).unwrap().unwrap();
        assert_eq!(ints(&i), vec![2, 1]);
        assert_eq!(check_case_ii(&e, &i).unwrap(), None);
    }

    #[test]
    fn case_iii_examples() {
        assert_eq!(
            ints(&check_case_iii(&c(3, 2, 3)).unwrap().unwrap()),
            vec![2, 1, -1]
        );
        assert_eq!(
            ints(&check_case_iii(&c(59, 24, 6)).unwrap().unwrap()),
            vec![5, 2, 1]
        );
        assert_eq!(check_case_iii(&c(3, 2, 2)).unwrap(), None);
    }

    #[test]
    fn case_iv_examples() {
        assert_eq!(check_case_iv(&c(59, 24, 6)).unwrap(), None);
        assert_eq!(check_case_iv(&c(3, 2, 2)).unwrap(), None);
        // (v, w) = (6, 2) reaches u = 1 but the quartic is 13824
        assert_eq!(
            case_iv_quartic(&1.into(), &6.into(), &2.into(), &6.into()),
            Int::from(13824)
        );
    }

    #[test]
    fn case_v_examples() {
        assert_eq!(
            ints(&check_case_v(&c(95, 32, 10)).unwrap().unwrap()),
            vec![4, 4, 9, 3]
        );
        assert_eq!(check_case_v(&c(3, 2, 2)).unwrap(), None);
        assert_eq!(check_case_v(&c(5, 2, 3)).unwrap(), None);
    }

    #[test]
    fn classify_examples() {
        let tag = |m, n, d| classify(&c(m, n, d)).unwrap().tag;
        assert_eq!(tag(3, 2, 2), ClassTag::Z4);
        assert_eq!(tag(3, 2, 3), ClassTag::Z6);
        assert_eq!(tag(1, 1, 2), ClassTag::Z2);
        assert_eq!(tag(5, 2, 3), ClassTag::Z2);
        assert_eq!(tag(23, 8, 7), ClassTag::Z8);
        assert_eq!(tag(59, 24, 6), ClassTag::Z6);
        assert_eq!(tag(95, 32, 10), ClassTag::Z10);
    }

    #[test]
    fn generator_examples() {
        let gen = |m, n, d| {
            let e = c(m, n, d);
            generator(&e, &classify(&e).unwrap()).unwrap()
        };
        assert_eq!(gen(3, 2, 2), Point::from_ints(-1, 2));
        assert_eq!(gen(23, 8, 7), Point::from_ints(-3, 12));
        assert_eq!(gen(95, 32, 10), Point::from_ints(-15, 240));
        assert_eq!(gen(59, 24, 6), Point::from_ints(25, 300));
        assert_eq!(gen(5, 2, 3), Point::from_ints(0, 0));
    }

    #[test]
    fn generator_surfaces_bad_witness() {
        let e = c(5, 2, 3);
        let forged = TorsionClass {
            tag: ClassTag::Z4,
            witness: Some(Witness::CaseI {
                a: 1.into(),
                b: 1.into(),
            }),
        };
        // x = 1 - 3 = -2: y^2 = -2 (4 - 20 + 13) = 6
        assert!(matches!(
            generator(&e, &forged),
            Err(ClassifyError::NonSquareY { .. })
        ));
    }

    #[test]
    fn full_report_examples() {
        let r = full_report(&c(3, 2, 2), true).unwrap();
        assert_eq!(r.cls.tag, ClassTag::Z4);
        assert_eq!(r.generator, Point::from_ints(-1, 2));
        assert_eq!(r.agree, Some(true));

        let r = full_report(&c(5, 2, 3), true).unwrap();
        assert_eq!(r.cls.tag, ClassTag::Z2);
        assert_eq!(r.generator, Point::from_ints(0, 0));
        assert_eq!(r.agree, Some(true));

        let r = full_report(&c(59, 24, 6), false).unwrap();
        assert_eq!(r.cls.tag, ClassTag::Z6);
        assert_eq!(r.generator_ints(), (Int::from(25), Int::from(300)));
        assert_eq!(r.oracle_group, None);
        assert_eq!(r.agree, None);
    }

    #[test]
    fn witness_reconstruction() {
        for (m, n, d) in [(3, 2, 2), (23, 8, 7), (3, 2, 3), (59, 24, 6), (95, 32, 10)] {
            let e = c(m, n, d);
            let w = classify(&e).unwrap().witness.unwrap();
            assert_eq!(w.reconstruct(e.d()), (e.m().clone(), e.n().clone()));
            assert!(w.side_conditions_hold(e.d()));
        }
    }

    #[test]
    fn case_tag_parsing() {
        assert_eq!("iii".parse::<CaseTag>().unwrap(), CaseTag::III);
        assert!("VI".parse::<CaseTag>().is_err());
        assert_eq!("Z10".parse::<ClassTag>().unwrap(), ClassTag::Z10);
    }

    #[test]
    fn twelve_torsion_regressions() {
        // the two Z12 curves with |m|, n <= 500 and |D| <= 50
        let e = c(-61, 80, -5);
        let r = full_report(&e, true).unwrap();
        assert_eq!(r.cls.tag, ClassTag::Z12);
        assert_eq!(
            r.cls.witness,
            Some(Witness::CaseIV {
                u: Int::from(21),
                v: Int::from(20),
                w: Int::from(2)
            })
        );
        assert_eq!(r.generator_ints(), (Int::from(1701), Int::from(68040)));
        assert_eq!(e.double_x(&r.generator).unwrap(), Rat::from(Int::from(441)));
        assert_eq!(r.agree, Some(true));

        let r = full_report(&c(-366, 30, -15), true).unwrap();
        assert_eq!(r.cls.tag, ClassTag::Z12);
        assert_eq!(r.agree, Some(true));
    }

    #[test]
    fn z10_doubling_lands_on_v_squared() {
        let e = c(-25, 32, -2);
        let r = full_report(&e, true).unwrap();
        let Some(Witness::CaseV { u, v, .. }) = &r.cls.witness else {
            panic!("expected a case V witness");
        };
        let doubled = e.double_x(&r.generator).unwrap();
        assert_eq!(doubled, Rat::from(v * v));
        assert_ne!(doubled, Rat::from(u * u));
    }
}
