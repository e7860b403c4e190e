//! Curves with known torsion, built by running each case's parametrization
//! forwards.

use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::classify::{case_iv_quartic, CaseTag, ClassTag, ClassifyError, Witness};
use crate::curve::CurveMnd;
use crate::exactmath::{gcd_many, int_sqrt, squarefree_split, Int};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySample {
    pub case_tag: CaseTag,
    /// Parameters as sampled, before normalization.
    pub params: Witness,
    pub curve: CurveMnd,
    pub predicted: ClassTag,
    /// Generator x-coordinate on the normalized curve.
    pub predicted_generator_x: Int,
}

impl FamilySample {
    /// Cases I and III only promise a subgroup (`Z4`, `Z6`); the others fix
    /// the group exactly.
    pub fn is_exact(&self) -> bool {
        !matches!(self.case_tag, CaseTag::I | CaseTag::III)
    }

    pub fn prediction_holds(&self, tag: ClassTag) -> bool {
        if self.is_exact() {
            tag == self.predicted
        } else {
            tag.contains_cyclic(self.predicted.order())
        }
    }
}

fn predicted_tag(case: CaseTag) -> ClassTag {
    match case {
        CaseTag::I => ClassTag::Z4,
        CaseTag::II => ClassTag::Z8,
        CaseTag::III => ClassTag::Z6,
        CaseTag::IV => ClassTag::Z12,
        CaseTag::V => ClassTag::Z10,
    }
}

fn squarefree_ds(bound: i64) -> Vec<Int> {
    (-bound..=bound)
        .filter(|&d| d != 0 && d != 1)
        .map(Int::from)
        .filter(|d| squarefree_split(d).is_ok_and(|s| s.square_part.is_one()))
        .collect()
}

fn nonzero(bound: i64) -> impl Iterator<Item = Int> + Clone {
    (-bound..=bound).filter(|&v| v != 0).map(Int::from)
}

fn positive(bound: i64) -> impl Iterator<Item = Int> + Clone {
    (1..=bound).map(Int::from)
}

/// Collects samples in enumeration order, keeping the first tuple that
/// reaches each normalized curve.
struct Collector {
    case: CaseTag,
    seen: HashSet<CurveMnd>,
    out: Vec<FamilySample>,
}

impl Collector {
    fn new(case: CaseTag) -> Self {
        Collector {
            case,
            seen: HashSet::new(),
            out: Vec::new(),
        }
    }

    fn offer(&mut self, params: Witness, d: &Int) -> Result<(), ClassifyError> {
        let (m, n) = params.reconstruct(d);
        if n.is_zero() {
            return Ok(());
        }
        let norm = CurveMnd::normalize_with_scale(m, n, d.clone())?;
        if self.seen.contains(&norm.curve) {
            return Ok(());
        }
        let s2 = &norm.scale * &norm.scale;
        let (x, rem) = params.generator_x(d).div_rem(&s2);
        if !rem.is_zero() {
            return Err(ClassifyError::Inconsistency {
                curve: Box::new(norm.curve),
                detail: format!("generator x of {params} is not integral after normalization"),
            });
        }
        self.seen.insert(norm.curve.clone());
        self.out.push(FamilySample {
            case_tag: self.case,
            params,
            curve: norm.curve,
            predicted: predicted_tag(self.case),
            predicted_generator_x: x,
        });
        Ok(())
    }
}

/// Deterministic enumeration of parameter tuples with entries bounded by
/// `bound`, each mapped to its normalized curve. Where `D` is a free choice
/// it ranges over `|D| <= max(bound, 2)`. Tuples violating a side condition
/// are skipped; repeated curves are dropped.
pub fn sample_case(case: CaseTag, bound: u32) -> Result<Vec<FamilySample>, ClassifyError> {
    sample_case_with(case, bound, bound.max(2))
}

pub fn sample_case_with(
    case: CaseTag,
    bound: u32,
    d_bound: u32,
) -> Result<Vec<FamilySample>, ClassifyError> {
    let b = i64::from(bound.max(1));
    let db = i64::from(d_bound);
    let mut col = Collector::new(case);
    match case {
        CaseTag::I => {
            // (a, b) and (-a, -b) give the same curve; so do (a, b), (a, -b)
            for a in positive(b) {
                for bb in positive(b) {
                    if !a.gcd(&bb).is_one() {
                        continue;
                    }
                    for d in squarefree_ds(db) {
                        col.offer(
                            Witness::CaseI {
                                a: a.clone(),
                                b: bb.clone(),
                            },
                            &d,
                        )?;
                    }
                }
            }
        }
        CaseTag::II => {
            for u in positive(b) {
                for v in positive(b) {
                    let split = squarefree_split(&(Int::from(2) * &u * &u - &v * &v))?;
                    let d = split.squarefree_part;
                    if d.is_one() {
                        continue;
                    }
                    let w = Witness::CaseII {
                        u: u.clone(),
                        v: v.clone(),
                        w: split.square_part,
                    };
                    col.offer(w, &d)?;
                }
            }
        }
        CaseTag::III => {
            for a in nonzero(b) {
                for bb in positive(b) {
                    for d in squarefree_ds(db) {
                        let Some(c_abs) = int_sqrt(&(&a * &a - &bb * &bb * &d)) else {
                            continue;
                        };
                        if c_abs.is_zero() {
                            continue;
                        }
                        for c in [c_abs.clone(), -c_abs.clone()] {
                            if gcd_many([&a, &bb, &c]).is_some_and(|g| !g.is_one()) {
                                continue;
                            }
                            let w = Witness::CaseIII {
                                a: a.clone(),
                                b: bb.clone(),
                                c,
                            };
                            col.offer(w, &d)?;
                        }
                    }
                }
            }
        }
        CaseTag::IV => {
            // The quartic is quadratic in U = u^2:
            //   16 v^2 w^2 D U^2 + 4 X^2 Y U - 3 X^4 = 0,  X = v^2 - w^2 D, Y = v^2 + w^2 D,
            // so U = X^2 (-Y +- sqrt(Y^2 + 12 v^2 w^2 D)) / (8 v^2 w^2 D).
            for v in nonzero(b) {
                for w in positive(b) {
                    for d in squarefree_ds(db) {
                        let v2 = &v * &v;
                        let w2d = &w * &w * &d;
                        let x = &v2 - &w2d;
                        let y = &v2 + &w2d;
                        let k = Int::from(12) * &v2 * &w2d;
                        let Some(root) = int_sqrt(&(&y * &y + &k)) else {
                            continue;
                        };
                        let den = Int::from(8) * &v2 * &w2d;
                        for num in [&x * &x * (-&y + &root), &x * &x * (-&y - &root)] {
                            let (uu, rem) = num.div_rem(&den);
                            if !rem.is_zero() || !uu.is_positive() {
                                continue;
                            }
                            let Some(u) = int_sqrt(&uu) else {
                                continue;
                            };
                            debug_assert!(case_iv_quartic(&u, &v, &w, &d).is_zero());
                            let wit = Witness::CaseIV {
                                u,
                                v: v.clone(),
                                w: w.clone(),
                            };
                            if wit.side_conditions_hold(&d) {
                                col.offer(wit, &d)?;
                            }
                        }
                    }
                }
            }
        }
        CaseTag::V => {
            for u in nonzero(b) {
                for v in nonzero(b) {
                    let num = (&u - &v) * (&u - &v) * (&u + &v);
                    let (s, rem) = num.div_rem(&(Int::from(4) * &u * &v));
                    if !rem.is_zero() || s.is_zero() {
                        continue;
                    }
                    let spu = &s + &u;
                    let rhs = &spu * &spu - &v * &v;
                    if rhs.is_zero() {
                        continue;
                    }
                    let split = squarefree_split(&rhs)?;
                    let d = split.squarefree_part;
                    if d.is_one() {
                        continue;
                    }
                    let w = Witness::CaseV {
                        s,
                        t: split.square_part,
                        u: u.clone(),
                        v: v.clone(),
                    };
                    col.offer(w, &d)?;
                }
            }
        }
    }
    Ok(col.out)
}
