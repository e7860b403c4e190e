//! Rational torsion of elliptic curves `y^2 = x(x + M)(x + N)` where `M` and
//! `N = m -+ n*sqrt(D)` are conjugate quadratic integers.
//!
//! Such a curve has exactly one rational point of order two, so its torsion
//! subgroup is cyclic of order 2, 4, 6, 8, 10 or 12. [`classify`] decides
//! which one from explicit Diophantine conditions on `(m, n, D)` and builds a
//! generator; [`oracle`] recomputes the group independently by Lutz-Nagell
//! enumeration; [`family`] runs the conditions backwards to produce curves
//! with known torsion.

pub mod classify;
pub mod curve;
pub mod exactmath;
pub mod family;
pub mod oracle;

pub use classify::{
    classify, full_report, generator, CaseTag, ClassTag, ClassificationReport, ClassifyError,
    TorsionClass, Witness,
};
pub use curve::{CurveError, CurveMnd, GeneralCubic, Point, PointOrder, QuadElement};
pub use exactmath::{Int, Rat};
pub use oracle::{torsion_group, GroupStructure, TorsionGroup};
