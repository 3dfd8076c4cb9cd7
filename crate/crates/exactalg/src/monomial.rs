use crate::symbol::Symbol;
use std::cmp::Ordering;
use std::fmt;

/// Sparse Laurent monomial ∏ symᵉ: factors sorted by symbol, exponents
/// nonzero. The empty product is 1.
///
/// The derived `Ord` (lexicographic on the factor list) is only a storage
/// order for map keys; the canonical printing order is [`Monomial::cmp_print`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Monomial {
    factors: Vec<(Symbol, i32)>,
}

impl Monomial {
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(s: Symbol) -> Monomial {
        Monomial::var_pow(s, 1)
    }

    pub fn var_pow(s: Symbol, e: i32) -> Monomial {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial { factors: vec![(s, e)] }
        }
    }

    /// Build from arbitrary (symbol, exponent) pairs: sorts, merges repeats,
    /// drops zero exponents.
    pub fn from_factors(pairs: impl IntoIterator<Item = (Symbol, i32)>) -> Monomial {
        let mut v: Vec<(Symbol, i32)> = pairs.into_iter().collect();
        v.sort_by_key(|&(s, _)| s);
        let mut out: Vec<(Symbol, i32)> = Vec::with_capacity(v.len());
        for (s, e) in v {
            match out.last_mut() {
                Some((s0, e0)) if *s0 == s => *e0 += e,
                _ => out.push((s, e)),
            }
        }
        out.retain(|&(_, e)| e != 0);
        Monomial { factors: out }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn factors(&self) -> &[(Symbol, i32)] {
        &self.factors
    }

    pub fn exp_of(&self, s: Symbol) -> i32 {
        self.factors
            .binary_search_by_key(&s, |&(t, _)| t)
            .map_or(0, |i| self.factors[i].1)
    }

    pub fn total_degree(&self) -> i64 {
        self.factors.iter().map(|&(_, e)| e as i64).sum()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.factors.iter().map(|&(s, _)| s)
    }

    /// All exponents nonnegative (a genuine polynomial monomial).
    pub fn is_nonneg(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e >= 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() || j < other.factors.len() {
            let (s, e) = match (self.factors.get(i), other.factors.get(j)) {
                (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => {
                        i += 1;
                        (sa, ea)
                    }
                    Ordering::Greater => {
                        j += 1;
                        (sb, eb)
                    }
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                        (sa, ea + eb)
                    }
                },
                (Some(&(sa, ea)), None) => {
                    i += 1;
                    (sa, ea)
                }
                (None, Some(&(sb, eb))) => {
                    j += 1;
                    (sb, eb)
                }
                (None, None) => unreachable!(),
            };
            if e != 0 {
                out.push((s, e));
            }
        }
        Monomial { factors: out }
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            factors: self.factors.iter().map(|&(s, e)| (s, e * k)).collect(),
        }
    }

    pub fn inv(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.mul(&other.inv())
    }

    /// Per-symbol minimum exponent, counting absent symbols as 0.
    /// This is the right notion of gcd for extracting monomial content from
    /// Laurent polynomials: f / f.content has all exponents ≥ 0 with 0 attained.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let syms: Vec<Symbol> = {
            let mut v: Vec<Symbol> = self.symbols().chain(other.symbols()).collect();
            v.sort();
            v.dedup();
            v
        };
        Monomial::from_factors(
            syms.into_iter()
                .map(|s| (s, self.exp_of(s).min(other.exp_of(s)))),
        )
    }

    /// Canonical printing order: total degree ascending, then exponent
    /// vectors lexicographically descending over symbols in ascending name
    /// order (absent symbol = exponent 0). `Less` prints first.
    pub fn cmp_print(&self, other: &Monomial) -> Ordering {
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(&(_, ea)), None) => {
                    // other's exponent here is 0
                    if ea != 0 {
                        return if ea > 0 { Ordering::Less } else { Ordering::Greater };
                    }
                    i += 1;
                }
                (None, Some(&(_, eb))) => {
                    if eb != 0 {
                        return if eb > 0 { Ordering::Greater } else { Ordering::Less };
                    }
                    j += 1;
                }
                (Some(&(sa, ea)), Some(&(sb, eb))) => match sa.cmp(&sb) {
                    Ordering::Less => {
                        if ea != 0 {
                            return if ea > 0 { Ordering::Less } else { Ordering::Greater };
                        }
                        i += 1;
                    }
                    Ordering::Greater => {
                        if eb != 0 {
                            return if eb > 0 { Ordering::Greater } else { Ordering::Less };
                        }
                        j += 1;
                    }
                    Ordering::Equal => {
                        if ea != eb {
                            return if ea > eb { Ordering::Less } else { Ordering::Greater };
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (k, &(s, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}
