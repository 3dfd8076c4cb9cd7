//! Normal-ordered vertex operators over an m-fold Heisenberg algebra.
//!
//! Every operator handled here has the shape
//!
//! ```text
//!   c · Π_k exp( Σ_{n>0} cre_k(n)/n · a^{(k)}_{-n} z^n )
//!         exp( Σ_{n>0} ann_k(n)/n · a^{(k)}_{n} z^{-n} ),
//! ```
//!
//! one creation/annihilation pair per Heisenberg copy ("slot").  The mode
//! coefficients cre_k(n), ann_k(n) live in the mode ring of [`crate::ring`],
//! so one symbolic computation covers every mode at once.  Products of such
//! operators normal-order by adding slot coefficients and multiplying the
//! scalar contraction factor exp(Σ S(n)/n x^n), whose log coefficient is
//! computed by [`heisenberg_contract`].

use crate::ring::{bracket, ppow4};
use exactalg::RatFunc;
use std::collections::BTreeMap;
use std::fmt;

/// One Heisenberg copy of a vertex operator: the mode-ring coefficients of
/// the creation half (a_{-n} z^n) and the annihilation half (a_n z^{-n}).
#[derive(Clone, PartialEq, Debug)]
pub struct Slot {
    pub creation: RatFunc,
    pub annihilation: RatFunc,
}

impl Slot {
    pub fn zero() -> Slot {
        Slot { creation: RatFunc::zero(), annihilation: RatFunc::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.creation.is_zero() && self.annihilation.is_zero()
    }

    /// Slot of the same operator with argument multiplied by p^{s/4}:
    /// creation picks up p^{sn/4}, annihilation the reciprocal.
    fn shifted(&self, quarter_units: i64) -> Slot {
        Slot {
            creation: &self.creation * &ppow4(quarter_units),
            annihilation: &self.annihilation * &ppow4(-quarter_units),
        }
    }

    fn add(&self, other: &Slot) -> Slot {
        Slot {
            creation: &self.creation + &other.creation,
            annihilation: &self.annihilation + &other.annihilation,
        }
    }

    fn negated(&self) -> Slot {
        let minus = RatFunc::from_scalar(exactalg::scalar(-1));
        Slot {
            creation: &self.creation * &minus,
            annihilation: &self.annihilation * &minus,
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(cre {}; ann {})", self.creation, self.annihilation)
    }
}

/// A normal-ordered exponential operator with a scalar prefactor.
///
/// The prefactor collects everything outside the Heisenberg modes: weights
/// y_i, residue values, exchange-series constants.  It lives in a separate
/// symbol space from the slot coefficients.
#[derive(Clone, PartialEq, Debug)]
pub struct VertexOperator {
    pub prefactor: RatFunc,
    pub slots: Vec<Slot>,
}

impl VertexOperator {
    /// The identity operator on `num_slots` Heisenberg copies.
    pub fn identity(num_slots: usize) -> VertexOperator {
        VertexOperator {
            prefactor: RatFunc::one(),
            slots: vec![Slot::zero(); num_slots],
        }
    }

    pub fn num_slots(&self) -> usize {
        self.slots.len()
    }

    /// True when every slot vanishes, i.e. the operator is a scalar.
    pub fn is_scalar(&self) -> bool {
        self.slots.iter().all(Slot::is_zero)
    }

    /// Same operator with its argument multiplied by p^{quarter_units/4}.
    pub fn shifted(&self, quarter_units: i64) -> VertexOperator {
        VertexOperator {
            prefactor: self.prefactor.clone(),
            slots: self.slots.iter().map(|s| s.shifted(quarter_units)).collect(),
        }
    }

    /// Normal-ordered product: slot coefficients add, prefactors multiply.
    /// No contraction scalar is included; see [`heisenberg_contract`].
    pub fn normal_product(&self, other: &VertexOperator) -> VertexOperator {
        assert_eq!(
            self.slots.len(),
            other.slots.len(),
            "operators act on the same number of Heisenberg copies"
        );
        VertexOperator {
            prefactor: &self.prefactor * &other.prefactor,
            slots: self
                .slots
                .iter()
                .zip(&other.slots)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Formal inverse: slot coefficients negate, prefactor inverts.
    pub fn inverse(&self) -> VertexOperator {
        VertexOperator {
            prefactor: self.prefactor.inv(),
            slots: self.slots.iter().map(Slot::negated).collect(),
        }
    }

    pub fn scaled(&self, c: &RatFunc) -> VertexOperator {
        VertexOperator {
            prefactor: &self.prefactor * c,
            slots: self.slots.clone(),
        }
    }

    /// Canonical key for the slot content, ignoring the prefactor.  Slot
    /// coefficients are stored reduced, so equal operators print equally.
    pub fn slot_key(&self) -> String {
        self.slots
            .iter()
            .map(Slot::to_string)
            .collect::<Vec<_>>()
            .join(" | ")
    }
}

impl fmt::Display for VertexOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · [{}]", self.prefactor, self.slot_key())
    }
}

/// Log coefficient S(n) of the contraction scalar arising when `left(z)`
/// moves past `right(w)`:
///
/// ```text
///   left(z) right(w) = exp(Σ_{n>0} S(n)/n (w/z)^n) :left(z) right(w):,
///   S(n) = Σ_k ann_left_k(n) · cre_right_k(n) · (1-q^n)/(1-t^n).
/// ```
///
/// The factor (1-q^n)/(1-t^n) is the Heisenberg commutator weight
/// [a_n, a_{-n}] = n(1-q^n)/(1-t^n), one independent copy per slot.
pub fn heisenberg_contract(left: &VertexOperator, right: &VertexOperator) -> RatFunc {
    assert_eq!(left.slots.len(), right.slots.len(), "slot counts must agree");
    let br = bracket();
    let mut total = RatFunc::zero();
    for (l, r) in left.slots.iter().zip(&right.slots) {
        total = &total + &(&(&l.annihilation * &r.creation) * &br);
    }
    total
}

/// A finite sum of vertex operators, each weighted by its own prefactor.
#[derive(Clone, Debug)]
pub struct OperatorSum {
    pub terms: Vec<VertexOperator>,
}

impl OperatorSum {
    pub fn zero() -> OperatorSum {
        OperatorSum { terms: Vec::new() }
    }

    pub fn from_terms(terms: Vec<VertexOperator>) -> OperatorSum {
        OperatorSum { terms }
    }

    pub fn push(&mut self, op: VertexOperator) {
        self.terms.push(op);
    }

    pub fn scaled(&self, c: &RatFunc) -> OperatorSum {
        OperatorSum {
            terms: self.terms.iter().map(|t| t.scaled(c)).collect(),
        }
    }

    pub fn shifted(&self, quarter_units: i64) -> OperatorSum {
        OperatorSum {
            terms: self.terms.iter().map(|t| t.shifted(quarter_units)).collect(),
        }
    }

    /// Merge terms with identical slot content and drop the ones whose
    /// combined prefactor vanishes.
    pub fn canonicalized(&self) -> OperatorSum {
        let mut grouped: BTreeMap<String, VertexOperator> = BTreeMap::new();
        for term in &self.terms {
            let key = term.slot_key();
            match grouped.get_mut(&key) {
                Some(existing) => {
                    existing.prefactor = &existing.prefactor + &term.prefactor;
                }
                None => {
                    grouped.insert(key, term.clone());
                }
            }
        }
        OperatorSum {
            terms: grouped
                .into_values()
                .filter(|t| !t.prefactor.is_zero())
                .collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.canonicalized().terms.is_empty()
    }

    /// Slotwise equality after canonicalization.
    pub fn equals(&self, other: &OperatorSum) -> bool {
        let a = self.canonicalized();
        let b = other.canonicalized();
        if a.terms.len() != b.terms.len() {
            return false;
        }
        a.terms
            .iter()
            .zip(&b.terms)
            .all(|(x, y)| x.prefactor == y.prefactor && x.slots == y.slots)
    }
}

impl fmt::Display for OperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let lines: Vec<String> = self.terms.iter().map(|t| format!("  {t}")).collect();
        write!(f, "{}", lines.join("\n"))
    }
}
