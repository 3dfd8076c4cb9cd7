//! Specialization maps: substituting geometric strings for the z alphabet.
//!
//! For a shape lambda = (l_1, ..., l_k) and a parameter p, the inner map
//! sends the n = |lambda| variables, row by row in reading order, to
//!
//! ```text
//!     (y_1, p y_1, ..., p^{l_1 - 1} y_1,  y_2, p y_2, ...,  ...,  y_k, ..., p^{l_k - 1} y_k),
//! ```
//!
//! one free variable per row. The optional outer step collapses the row
//! variables onto a single one, y_r = zeta^{r-1} y, which with p = q^{-1}
//! gives the string pattern whose zeta -> t limit drives the tableau
//! identities.

use crate::AElement;
use exactalg::{var, AlgError, RatFunc};
use partitions::Partition;

/// The r-th row variable y1, y2, ...
fn row_var(r: usize) -> RatFunc {
    var(&format!("y{r}"))
}

/// A recipe for substituting strings of points: the shape, the ratio
/// within each row, and optionally the ratio between rows.
#[derive(Debug, Clone)]
pub struct SpecializationPlan {
    pub lambda: Partition,
    /// Successive points within row r are y_r, inner*y_r, inner^2*y_r, ...
    pub inner: RatFunc,
    /// When set, row r starts at outer^{r-1} * y instead of a free y_r.
    pub outer: Option<RatFunc>,
}

impl SpecializationPlan {
    /// The inner map alone, with one free variable per row.
    pub fn new(lambda: Partition, inner: RatFunc) -> SpecializationPlan {
        SpecializationPlan {
            lambda,
            inner,
            outer: None,
        }
    }

    /// Inner map followed by the row-collapsing substitution.
    pub fn with_outer(lambda: Partition, inner: RatFunc, outer: RatFunc) -> SpecializationPlan {
        SpecializationPlan {
            lambda,
            inner,
            outer: Some(outer),
        }
    }

    /// The substituted point tuple over symbolic row variables y1..yk
    /// (or the single y when the outer step is present).
    pub fn points(&self) -> Vec<RatFunc> {
        match &self.outer {
            None => {
                let ys: Vec<RatFunc> = (1..=self.lambda.len()).map(row_var).collect();
                self.points_from(&ys)
            }
            Some(_) => self.points_from(&[var("y")]),
        }
    }

    /// The substituted point tuple with explicit row seeds. Without an
    /// outer step, `seeds` holds one value per row; with it, exactly one.
    pub fn points_from(&self, seeds: &[RatFunc]) -> Vec<RatFunc> {
        let rows = self.lambda.len();
        let mut pts = Vec::with_capacity(self.lambda.size() as usize);
        match &self.outer {
            None => {
                assert_eq!(seeds.len(), rows, "one seed per row");
                for (r, &len) in self.lambda.parts().iter().enumerate() {
                    let mut cur = seeds[r].clone();
                    for _ in 0..len {
                        pts.push(cur.clone());
                        cur = &cur * &self.inner;
                    }
                }
            }
            Some(outer) => {
                assert_eq!(seeds.len(), 1, "a single seed feeds every row");
                let mut row_start = seeds[0].clone();
                for &len in self.lambda.parts() {
                    let mut cur = row_start.clone();
                    for _ in 0..len {
                        pts.push(cur.clone());
                        cur = &cur * &self.inner;
                    }
                    row_start = &row_start * outer;
                }
            }
        }
        pts
    }
}

/// Applies a specialization plan to an element: evaluates it on the
/// geometric strings, q and t staying symbolic.
pub fn specialize(f: &AElement, plan: &SpecializationPlan) -> Result<RatFunc, AlgError> {
    let pts = plan.points();
    if pts.len() != f.arity() as usize {
        return Err(AlgError::Domain(format!(
            "plan substitutes {} variables into an arity-{} element",
            pts.len(),
            f.arity()
        )));
    }
    f.eval(&pts)
}
