//! Exact arithmetic on rational combinations of binary logarithms.
//!
//! A [`LogExpr`] is a finite sum `Σ cᵢ·log2(xᵢ)` with rational coefficients
//! `cᵢ` and positive rational arguments `xᵢ`. Entropies, Shannon entropies and
//! reservoir increments all live in this space, so identities between them
//! can be decided without floating point: the arguments are rewritten over a
//! pairwise-coprime integer basis, whose logarithms are linearly independent
//! over the rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::rational::{self, Rational};

/// Above this many bits in either side of the cleared product the sign is
/// estimated in floating point instead.
const EXACT_SIGN_BIT_BUDGET: u64 = 1 << 22;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LogExpr {
    terms: BTreeMap<Rational, Rational>,
}

/// The sign of a [`LogExpr`] and whether it was decided exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sign {
    pub ordering: Ordering,
    pub exact: bool,
}

impl LogExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `log2(x)`; `x` must be positive.
    pub fn log2(x: Rational) -> Self {
        Self::scaled_log2(Rational::one(), x)
    }

    /// `coef · log2(x)`.
    pub fn scaled_log2(coef: Rational, x: Rational) -> Self {
        assert!(x.is_positive(), "log2 of a non-positive rational");
        let mut e = Self::zero();
        e.add_term(coef, x);
        e
    }

    /// A plain rational constant `c = c·log2(2)`.
    pub fn constant(c: Rational) -> Self {
        Self::scaled_log2(c, rational::int(2))
    }

    fn add_term(&mut self, coef: Rational, x: Rational) {
        if coef.is_zero() || x.is_one() {
            return;
        }
        let slot = self.terms.entry(x).or_insert_with(Rational::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(x, c)| (x.clone(), c * k)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(x, c)| rational::to_f64(c) * rational::log2_rational(x))
            .sum()
    }

    /// Rewrites the expression as `Σ c_b · log2(b)` over pairwise coprime
    /// integers `b > 1`. The representation is unique, so the expression is
    /// zero exactly when every coefficient vanishes.
    pub fn coprime_form(&self) -> Vec<(BigUint, Rational)> {
        let mut raw = Vec::new();
        for x in self.terms.keys() {
            for part in [x.numer().magnitude(), x.denom().magnitude()] {
                if !part.is_one() {
                    raw.push(part.clone());
                }
            }
        }
        let basis = coprime_basis(raw);
        let mut coefs = vec![Rational::zero(); basis.len()];
        for (x, c) in &self.terms {
            for (slot, b) in coefs.iter_mut().zip(&basis) {
                let up = multiplicity(x.numer().magnitude(), b);
                let down = multiplicity(x.denom().magnitude(), b);
                let e = up as i64 - down as i64;
                if e != 0 {
                    *slot += c * Rational::from_integer(BigInt::from(e));
                }
            }
        }
        basis
            .into_iter()
            .zip(coefs)
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() || self.coprime_form().is_empty()
    }

    /// The sign of the expression, exact whenever the cleared products fit
    /// within the bit budget.
    pub fn sign(&self) -> Sign {
        let form = self.coprime_form();
        if form.is_empty() {
            return Sign {
                ordering: Ordering::Equal,
                exact: true,
            };
        }
        let lcm = rational::lcm_of_denominators(form.iter().map(|(_, c)| c));
        let scaled: Vec<(BigUint, BigInt)> = form
            .into_iter()
            .map(|(b, c)| {
                let n = (c * Rational::from_integer(lcm.clone())).to_integer();
                (b, n)
            })
            .collect();
        let mut bits = [0u64; 2];
        for (b, n) in &scaled {
            let side = usize::from(n.is_negative());
            let e = n.abs().to_u64().unwrap_or(u64::MAX);
            bits[side] = bits[side].saturating_add(e.saturating_mul(b.bits()));
        }
        if bits[0] <= EXACT_SIGN_BIT_BUDGET && bits[1] <= EXACT_SIGN_BIT_BUDGET {
            let mut pos = BigUint::one();
            let mut neg = BigUint::one();
            for (b, n) in &scaled {
                let e = n.abs().to_u32().expect("exponent within budget");
                if n.is_negative() {
                    neg *= b.pow(e);
                } else {
                    pos *= b.pow(e);
                }
            }
            return Sign {
                ordering: pos.cmp(&neg),
                exact: true,
            };
        }
        let v = self.to_f64();
        Sign {
            ordering: v.partial_cmp(&0.0).unwrap_or(Ordering::Equal),
            exact: false,
        }
    }

    /// Exact value when the expression is a rational multiple of `log2(2)`.
    pub fn as_rational(&self) -> Option<Rational> {
        let form = self.coprime_form();
        match form.as_slice() {
            [] => Some(Rational::zero()),
            [(b, c)] => {
                let k = b.trailing_zeros()?;
                (b == &(BigUint::one() << k)).then(|| c * Rational::from_integer(BigInt::from(k)))
            }
            _ => None,
        }
    }
}

fn multiplicity(n: &BigUint, b: &BigUint) -> u64 {
    let mut n = n.clone();
    let mut k = 0;
    while !n.is_zero() {
        let (q, r) = n.div_rem(b);
        if !r.is_zero() {
            break;
        }
        n = q;
        k += 1;
    }
    k
}

/// Refines a list of integers `> 1` into a pairwise coprime set such that
/// every input is a product of powers of the output.
pub fn coprime_basis(mut items: Vec<BigUint>) -> Vec<BigUint> {
    items.sort();
    items.dedup();
    'outer: loop {
        for i in 0..items.len() {
            for j in i + 1..items.len() {
                let g = items[i].gcd(&items[j]);
                if g.is_one() {
                    continue;
                }
                let a = items.swap_remove(j);
                let b = items.swap_remove(i);
                for v in [&a / &g, &b / &g, g] {
                    if !v.is_one() {
                        items.push(v);
                    }
                }
                items.sort();
                items.dedup();
                continue 'outer;
            }
        }
        return items;
    }
}

impl Add for LogExpr {
    type Output = LogExpr;
    fn add(mut self, rhs: LogExpr) -> LogExpr {
        for (x, c) in rhs.terms {
            self.add_term(c, x);
        }
        self
    }
}

impl Sub for LogExpr {
    type Output = LogExpr;
    fn sub(self, rhs: LogExpr) -> LogExpr {
        self + (-rhs)
    }
}

impl Neg for LogExpr {
    type Output = LogExpr;
    fn neg(self) -> LogExpr {
        self.scale(&-Rational::one())
    }
}

impl std::iter::Sum for LogExpr {
    fn sum<I: Iterator<Item = LogExpr>>(iter: I) -> LogExpr {
        iter.fold(LogExpr::zero(), |a, b| a + b)
    }
}

impl fmt::Display for LogExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (x, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}·log2({})", rational::Display(c), rational::Display(x))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn log_identities_are_decided_exactly() {
        // log2 6 = log2 2 + log2 3
        let e = LogExpr::log2(int(6)) - LogExpr::log2(int(2)) - LogExpr::log2(int(3));
        assert!(e.is_zero());
        // 2·log2 4 = log2 16
        let e = LogExpr::scaled_log2(int(2), int(4)) - LogExpr::log2(int(16));
        assert!(e.is_zero());
        // log2 3 ≠ log2 2 · (anything rational)
        assert!(!(LogExpr::log2(int(3)) - LogExpr::constant(ratio(3, 2))).is_zero());
    }

    #[test]
    fn signs_compare_cleared_products() {
        // log2 3 - 3/2 > 0 because 3^2 > 2^3
        let e = LogExpr::log2(int(3)) - LogExpr::constant(ratio(3, 2));
        assert_eq!(e.sign().ordering, Ordering::Greater);
        assert!(e.sign().exact);
        // log2 3 - 8/5 < 0 because 3^5 < 2^8
        let e = LogExpr::log2(int(3)) - LogExpr::constant(ratio(8, 5));
        assert_eq!(e.sign().ordering, Ordering::Less);
    }

    #[test]
    fn rational_extraction() {
        let e = LogExpr::log2(int(8)) + LogExpr::log2(ratio(1, 2));
        assert_eq!(e.as_rational(), Some(int(2)));
        assert_eq!(LogExpr::log2(int(3)).as_rational(), None);
    }

    #[test]
    fn coprime_basis_splits_shared_factors() {
        let b = coprime_basis(vec![BigUint::from(12u32), BigUint::from(18u32)]);
        for (i, x) in b.iter().enumerate() {
            for y in &b[i + 1..] {
                assert!(x.gcd(y).is_one());
            }
        }
        assert_eq!(b, vec![BigUint::from(2u32), BigUint::from(3u32)]);
    }
}
