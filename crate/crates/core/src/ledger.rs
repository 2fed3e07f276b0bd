//! Free-energy accounting for processes between ensembles of states.
//!
//! Each side of a process is an ensemble: states with a priori
//! probabilities. Both sides are augmented with a mechanical stack `μ_l`
//! and a reservoir rung `θ_k` so that every augmented state carries the same
//! content and the entropic probabilities reproduce the a priori ones. The
//! bound `⟨ΔQ_μ⟩ - (ε/σ)·ΔH ≤ -⟨ΔF⟩` is then decided exactly by the sign of
//! `σ·(rhs - lhs)`, a rational combination of logarithms.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::logexpr::LogExpr;
use crate::measure::{
    mechanical_stack, reservoir_state, shannon, Increment, MeasureError, ReservoirSpec,
};
use crate::rational::{self, Rational};
use crate::term::{Eidostate, Term, Weight};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LedgerError {
    #[error("the reservoir has zero entropy increment; free energy is undefined")]
    ZeroSigma,
    #[error("the mechanical state carries no positive `{0}`")]
    NonPositiveEpsilon(String),
    #[error("invalid ensemble: {0}")]
    Ensemble(String),
    #[error("no integer levels equalize contents: {0}")]
    Infeasible(String),
    #[error("augmented contents differ: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Measure(#[from] MeasureError),
}

/// A value that is exact when possible; `approx` is always filled in.
#[derive(Debug, Clone, PartialEq)]
pub struct Real {
    pub exact: Option<Rational>,
    pub approx: f64,
}

impl Real {
    pub fn exact(r: Rational) -> Self {
        Self {
            approx: rational::to_f64(&r),
            exact: Some(r),
        }
    }

    pub fn approx(v: f64) -> Self {
        Self {
            exact: None,
            approx: v,
        }
    }

    /// Exact equality when both sides are exact, else relative tolerance
    /// `1e-12`.
    pub fn same_as(&self, other: &Real) -> bool {
        match (&self.exact, &other.exact) {
            (Some(a), Some(b)) => a == b,
            _ => {
                let scale = self.approx.abs().max(other.approx.abs()).max(1.0);
                (self.approx - other.approx).abs() <= 1e-12 * scale
            }
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(r) => f.write_str(&rational::format_rational(r)),
            None => write!(f, "{:.12}", self.approx),
        }
    }
}

/// States with positive a priori probabilities summing to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ensemble {
    pub states: Vec<Term>,
    pub probs: Vec<Rational>,
}

impl Ensemble {
    pub fn new(states: Vec<Term>, probs: Vec<Rational>) -> Result<Self, LedgerError> {
        let bad = |m: String| Err(LedgerError::Ensemble(m));
        if states.is_empty() {
            return bad("no states".into());
        }
        if states.len() != probs.len() {
            return bad(format!(
                "{} states but {} probabilities",
                states.len(),
                probs.len()
            ));
        }
        if let Some(p) = probs.iter().find(|p| !p.is_positive()) {
            return bad(format!(
                "probability {} is not positive",
                rational::Display(p)
            ));
        }
        let total: Rational = probs.iter().cloned().sum();
        if !total.is_one() {
            return bad(format!(
                "probabilities sum to {}",
                rational::Display(&total)
            ));
        }
        let mut seen = std::collections::BTreeSet::new();
        if let Some(t) = states.iter().find(|t| !seen.insert((*t).clone())) {
            return bad(format!("state `{t}` listed twice"));
        }
        Ok(Self { states, probs })
    }

    /// One state with probability 1.
    pub fn certain(state: Term) -> Self {
        Self {
            states: vec![state],
            probs: vec![Rational::one()],
        }
    }

    fn mean<T>(&self, f: impl Fn(&Term) -> T) -> T
    where
        T: std::iter::Sum<T> + Scale,
    {
        self.states
            .iter()
            .zip(&self.probs)
            .map(|(t, p)| f(t).scale_by(p))
            .sum()
    }

    fn mean_of(&self, values: &[i64]) -> Rational {
        values
            .iter()
            .zip(&self.probs)
            .map(|(v, p)| p * rational::int(*v))
            .sum()
    }
}

trait Scale {
    fn scale_by(self, p: &Rational) -> Self;
}

impl Scale for Rational {
    fn scale_by(self, p: &Rational) -> Self {
        self * p
    }
}

impl Scale for LogExpr {
    fn scale_by(self, p: &Rational) -> Self {
        self.scale(p)
    }
}

/// Probability-weighted means and the Shannon entropy of an ensemble.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Aggregates {
    pub mean_q: Rational,
    pub mean_s: LogExpr,
    pub shannon: LogExpr,
}

pub fn ensemble_aggregates(ens: &Ensemble, component: &str) -> Aggregates {
    Aggregates {
        mean_q: ens.mean(|t| t.content_ref().get(component)),
        mean_s: ens.mean(|t| LogExpr::log2(t.weight().into_value())),
        shannon: shannon(&ens.probs),
    }
}

fn sigma(spec: &ReservoirSpec) -> Result<LogExpr, LedgerError> {
    let s = spec.sigma();
    match s.sign().ordering {
        Ordering::Greater => Ok(s),
        _ => Err(LedgerError::ZeroSigma),
    }
}

fn epsilon(spec: &ReservoirSpec, component: &str) -> Result<Rational, LedgerError> {
    let e = spec.epsilon(component);
    if e.is_positive() {
        Ok(e)
    } else {
        Err(LedgerError::NonPositiveEpsilon(component.to_string()))
    }
}

/// `S(x) / σ` when it is rational.
fn entropy_in_rungs(w: &Rational, spec: &ReservoirSpec) -> Option<Rational> {
    match &spec.increment {
        Increment::Ratio(b) => rational::exact_log(w, b).map(rational::int),
        Increment::Bits(s) => LogExpr::log2(w.clone()).as_rational().map(|e| e / s),
    }
}

/// `ε/σ`, the price in `Q` of erasing one bit against this reservoir.
pub fn landauer_cost(spec: &ReservoirSpec, component: &str) -> Result<Real, LedgerError> {
    let s = sigma(spec)?;
    let e = epsilon(spec, component)?;
    Ok(match s.as_rational() {
        Some(s) => Real::exact(e / s),
        None => Real::approx(rational::to_f64(&e) / s.to_f64()),
    })
}

/// `F(a) = Q(a) - (ε/σ)·S(a)`.
pub fn free_energy(a: &Term, spec: &ReservoirSpec, component: &str) -> Result<Real, LedgerError> {
    let s = sigma(spec)?;
    let e = epsilon(spec, component)?;
    let q = a.content_ref().get(component);
    let w = a.weight().into_value();
    Ok(match entropy_in_rungs(&w, spec) {
        Some(m) => Real::exact(q - e * m),
        None => Real::approx(
            rational::to_f64(&q) - rational::to_f64(&e) * rational::log2_rational(&w) / s.to_f64(),
        ),
    })
}

/// `⟨ΔF⟩` between two ensembles.
pub fn free_energy_change(
    src: &Ensemble,
    dst: &Ensemble,
    spec: &ReservoirSpec,
    component: &str,
) -> Result<Real, LedgerError> {
    let s = sigma(spec)?;
    let e = epsilon(spec, component)?;
    let (a, b) = (
        ensemble_aggregates(src, component),
        ensemble_aggregates(dst, component),
    );
    let dq = &b.mean_q - &a.mean_q;
    let rungs = |ens: &Ensemble| -> Option<Rational> {
        ens.states
            .iter()
            .zip(&ens.probs)
            .map(|(t, p)| entropy_in_rungs(t.weight_ref().value(), spec).map(|m| m * p))
            .sum()
    };
    Ok(match (rungs(src), rungs(dst)) {
        (Some(ma), Some(mb)) => Real::exact(dq - e * (mb - ma)),
        _ => {
            let ds = (b.mean_s - a.mean_s).to_f64();
            Real::approx(rational::to_f64(&dq) - rational::to_f64(&e) * ds / s.to_f64())
        }
    })
}

/// Mechanical stack height `l` and reservoir rung `k` for each state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Augmentation {
    pub levels: Vec<(i64, i64)>,
}

impl Augmentation {
    pub fn mechanical(&self) -> Vec<i64> {
        self.levels.iter().map(|l| l.0).collect()
    }

    pub fn reservoir(&self) -> Vec<i64> {
        self.levels.iter().map(|l| l.1).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Synthesis {
    pub src: Augmentation,
    pub dst: Augmentation,
    /// Whether every entropic probability equals its target exactly.
    pub exact: bool,
    /// `log2(achieved / target)` per state.
    pub src_residuals: Vec<f64>,
    pub dst_residuals: Vec<f64>,
}

/// Content offsets `c(x)` with `content(x) = content(x0) + c(x)·content(μ)`.
fn content_offsets(states: &[&Term], spec: &ReservoirSpec) -> Result<Vec<i64>, LedgerError> {
    let unit = spec.mu.content();
    let anchor = states[0].content();
    states
        .iter()
        .map(|t| {
            let gap = t.content_ref().sub(&anchor);
            gap.ratio_to(&unit)
                .filter(|k| k.is_integer())
                .and_then(|k| k.to_integer().to_i64())
                .ok_or_else(|| {
                    LedgerError::Infeasible(format!(
                        "`{t}` differs from `{}` by {gap}, not a whole number of {unit}",
                        states[0]
                    ))
                })
        })
        .collect()
}

/// `log_b(x)` rounded to the nearest integer, and whether it was exact.
fn rung_log(x: &Rational, spec: &ReservoirSpec) -> (i64, bool) {
    if let Some(m) = entropy_in_rungs(x, spec) {
        if m.is_integer() {
            return (m.to_integer().to_i64().expect("small rung"), true);
        }
    }
    let s = spec.sigma().to_f64();
    ((rational::log2_rational(x) / s).round() as i64, false)
}

/// `b^k` as an exact rational when possible, else as `f64`.
fn rung_factor(spec: &ReservoirSpec, k: i64) -> Result<Rational, f64> {
    spec.rung_factor(k)
        .ok_or_else(|| (k as f64 * spec.sigma().to_f64()).exp2())
}

/// `Σ w_i·b^(k_i)`, exact or in `f64`.
fn side_weight(ens: &Ensemble, ks: &[i64], spec: &ReservoirSpec) -> Result<Rational, f64> {
    let mut exact = Some(Rational::zero());
    let mut approx = 0.0;
    for (t, &k) in ens.states.iter().zip(ks) {
        let w = t.weight_ref().value();
        match rung_factor(spec, k) {
            Ok(f) => {
                approx += rational::to_f64(&(w * &f));
                exact = exact.map(|acc| acc + w * f);
            }
            Err(f) => {
                approx += rational::to_f64(w) * f;
                exact = None;
            }
        }
    }
    exact.ok_or(approx)
}

fn weight_f64(x: &Result<Rational, f64>) -> f64 {
    match x {
        Ok(r) => rational::to_f64(r),
        Err(v) => *v,
    }
}

/// Relative rungs reproducing the a priori probabilities, lowest rung 0.
fn relative_rungs(ens: &Ensemble, spec: &ReservoirSpec) -> (Vec<i64>, bool) {
    let r0 = &ens.probs[0] / ens.states[0].weight_ref().value();
    let mut exact = true;
    let mut ks: Vec<i64> = ens
        .states
        .iter()
        .zip(&ens.probs)
        .map(|(t, p)| {
            let (k, ok) = rung_log(&(p / t.weight_ref().value() / &r0), spec);
            exact &= ok;
            k
        })
        .collect();
    let low = *ks.iter().min().expect("nonempty");
    for k in &mut ks {
        *k -= low;
    }
    (ks, exact)
}

fn residuals(ens: &Ensemble, ks: &[i64], spec: &ReservoirSpec) -> Vec<f64> {
    let total = weight_f64(&side_weight(ens, ks, spec));
    ens.states
        .iter()
        .zip(&ens.probs)
        .zip(ks)
        .map(|((t, p), &k)| {
            let w = rational::to_f64(t.weight_ref().value()) * weight_f64(&rung_factor(spec, k));
            (w / total).log2() - rational::log2_rational(p)
        })
        .collect()
}

/// Chooses rung shifts so that `W(Â) ≤ W(B̂)` as tightly as the ladder allows.
fn shifts(
    src: &Ensemble,
    ka: &[i64],
    dst: &Ensemble,
    kb: &[i64],
    spec: &ReservoirSpec,
) -> (i64, i64) {
    let shifted = |ks: &[i64], s: i64| ks.iter().map(|k| k + s).collect::<Vec<_>>();
    let le = |sa: i64, sb: i64| -> bool {
        let wa = side_weight(src, &shifted(ka, sa), spec);
        let wb = side_weight(dst, &shifted(kb, sb), spec);
        match (&wa, &wb) {
            (Ok(a), Ok(b)) => a <= b,
            _ => weight_f64(&wa) <= weight_f64(&wb) * (1.0 + 1e-12),
        }
    };
    const LIMIT: i64 = 1 << 16;
    if le(0, 0) {
        let mut sa = 0;
        while sa < LIMIT && le(sa + 1, 0) {
            sa += 1;
        }
        (sa, 0)
    } else {
        let mut sb = 1;
        while sb < LIMIT && !le(0, sb) {
            sb += 1;
        }
        (0, sb)
    }
}

/// Finds mechanical and reservoir levels for both ensembles.
pub fn synthesize_augmentation(
    src: &Ensemble,
    dst: &Ensemble,
    spec: &ReservoirSpec,
    component: &str,
) -> Result<Synthesis, LedgerError> {
    sigma(spec)?;
    epsilon(spec, component)?;
    let all: Vec<&Term> = src.states.iter().chain(&dst.states).collect();
    let offsets = content_offsets(&all, spec)?;
    let (ca, cb) = offsets.split_at(src.states.len());

    let (ra, ea) = relative_rungs(src, spec);
    let (rb, eb) = relative_rungs(dst, spec);
    let (sa, sb) = shifts(src, &ra, dst, &rb, spec);
    let ka: Vec<i64> = ra.iter().map(|k| k + sa).collect();
    let kb: Vec<i64> = rb.iter().map(|k| k + sb).collect();

    let top = ca
        .iter()
        .zip(&ka)
        .chain(cb.iter().zip(&kb))
        .map(|(c, k)| c + k)
        .max()
        .expect("nonempty");
    let levels = |cs: &[i64], ks: &[i64]| Augmentation {
        levels: cs.iter().zip(ks).map(|(c, k)| (top - c - k, *k)).collect(),
    };
    Ok(Synthesis {
        src: levels(ca, &ka),
        dst: levels(cb, &kb),
        exact: ea && eb,
        src_residuals: residuals(src, &ka, spec),
        dst_residuals: residuals(dst, &kb, spec),
    })
}

/// `{a_i + (μ_l + θ_k)}`, with `a_i + θ_k` when `l = 0`.
pub fn assemble(
    ens: &Ensemble,
    aug: &Augmentation,
    spec: &ReservoirSpec,
) -> Result<Eidostate, LedgerError> {
    let mut states = Vec::with_capacity(ens.states.len());
    for (a, &(l, k)) in ens.states.iter().zip(&aug.levels) {
        let theta = reservoir_state(spec, k)?;
        let l = usize::try_from(l)
            .map_err(|_| LedgerError::Inconsistent(format!("negative mechanical level {l}")))?;
        let extra = match mechanical_stack(&spec.mu, l) {
            Some(m) => Term::pair(m, theta),
            None => theta,
        };
        states.push(Term::pair(a.clone(), extra));
    }
    Eidostate::new(states).map_err(|e| LedgerError::Inconsistent(e.to_string()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProcessDirection {
    Forward,
    Reverse,
}

impl fmt::Display for ProcessDirection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProcessDirection::Forward => "forward",
            ProcessDirection::Reverse => "reverse",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LedgerReport {
    /// The direction the figures below refer to; `Reverse` when the forward
    /// bound fails.
    pub direction: ProcessDirection,
    /// `⟨ΔQ_μ⟩`, exact.
    pub dq_mu: Rational,
    /// `ΔH` in bits, exact.
    pub dh: LogExpr,
    /// `⟨ΔF⟩`.
    pub df: Real,
    pub lhs: f64,
    pub rhs: f64,
    pub satisfied: bool,
    /// `lhs = rhs`: the process is reversible.
    pub equality: bool,
    /// Whether the sign of `rhs - lhs` was decided without floating point.
    pub exact: bool,
    /// `σ·(rhs - lhs)` for the forward direction.
    pub margin: LogExpr,
    /// `W(Â)` and `W(B̂)` when every rung has a rational weight.
    pub weights: Option<(Weight, Weight)>,
}

fn check_consistent(
    src: &Ensemble,
    dst: &Ensemble,
    aug: (&Augmentation, &Augmentation),
    spec: &ReservoirSpec,
) -> Result<(), LedgerError> {
    let all: Vec<&Term> = src.states.iter().chain(&dst.states).collect();
    let offsets =
        content_offsets(&all, spec).map_err(|e| LedgerError::Inconsistent(e.to_string()))?;
    if aug.0.levels.len() != src.states.len() || aug.1.levels.len() != dst.states.len() {
        return Err(LedgerError::Inconsistent(
            "level count differs from state count".into(),
        ));
    }
    let levels: Vec<&(i64, i64)> = aug.0.levels.iter().chain(&aug.1.levels).collect();
    let totals: Vec<i64> = offsets
        .iter()
        .zip(&levels)
        .map(|(c, (l, k))| c + l + k)
        .collect();
    if totals.windows(2).any(|w| w[0] != w[1]) {
        let at = totals
            .iter()
            .position(|t| *t != totals[0])
            .expect("differs");
        return Err(LedgerError::Inconsistent(format!(
            "`{}` ends at {} units of μ, `{}` at {}",
            all[0], totals[0], all[at], totals[at]
        )));
    }
    Ok(())
}

/// Evaluates `⟨ΔQ_μ⟩ - (ε/σ)·ΔH ≤ -⟨ΔF⟩` for the augmented process.
pub fn work_information_bound(
    src: &Ensemble,
    dst: &Ensemble,
    aug: (&Augmentation, &Augmentation),
    spec: &ReservoirSpec,
    component: &str,
) -> Result<LedgerReport, LedgerError> {
    let s = sigma(spec)?;
    let e = epsilon(spec, component)?;
    check_consistent(src, dst, aug, spec)?;
    let (a, b) = (
        ensemble_aggregates(src, component),
        ensemble_aggregates(dst, component),
    );

    let dq_mu = (dst.mean_of(&aug.1.mechanical()) - src.mean_of(&aug.0.mechanical())) * &e;
    let dh = b.shannon.clone() - a.shannon.clone();
    let dq = &b.mean_q - &a.mean_q;
    let ds = b.mean_s.clone() - a.mean_s.clone();
    let df = free_energy_change(src, dst, spec, component)?;

    let margin = s.scale(&(-&dq - &dq_mu)) + (ds + dh.clone()).scale(&e);
    let sign = margin.sign();
    let ratio = rational::to_f64(&e) / s.to_f64();
    let lhs = rational::to_f64(&dq_mu) - ratio * dh.to_f64();
    let rhs = 0.0 - df.approx;
    let (direction, lhs, rhs) = match sign.ordering {
        Ordering::Less => (ProcessDirection::Reverse, -lhs, -rhs),
        _ => (ProcessDirection::Forward, lhs, rhs),
    };
    let weights = match (assemble(src, aug.0, spec), assemble(dst, aug.1, spec)) {
        (Ok(x), Ok(y)) => Some((x.weight(), y.weight())),
        _ => None,
    };
    Ok(LedgerReport {
        direction,
        dq_mu,
        dh,
        df,
        lhs,
        rhs,
        satisfied: true,
        equality: sign.ordering == Ordering::Equal,
        exact: sign.exact,
        margin,
        weights,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_term, Declarations};
    use crate::rational::{int, ratio};
    use crate::term::CoinSet;

    fn t(s: &str) -> Term {
        parse_term(s, &Declarations::default()).unwrap()
    }

    fn bit() -> Ensemble {
        Ensemble::new(vec![t("r0"), t("r1")], vec![ratio(1, 2), ratio(1, 2)]).unwrap()
    }

    #[test]
    fn free_energy_examples() {
        let spec = ReservoirSpec::basic_box();
        assert_eq!(
            free_energy(&t("b3"), &spec, "coins").unwrap().exact,
            Some(int(0))
        );
        assert_eq!(
            free_energy(&t("s5"), &spec, "coins").unwrap().exact,
            Some(int(5))
        );
        let k = CoinSet::new([t("(h+h)"), t("(h+t)"), t("(t+h)")]).unwrap();
        let spec3 = ReservoirSpec::box_backed(k.clone());
        let f = free_energy(&Term::boxed(k, 2), &spec3, "coins").unwrap();
        assert_eq!(f.exact, Some(int(0)));
    }

    #[test]
    fn landauer_examples() {
        assert_eq!(
            landauer_cost(&ReservoirSpec::basic_box(), "coins")
                .unwrap()
                .exact,
            Some(int(1))
        );
        let four = CoinSet::new([t("h"), t("t")]).unwrap();
        let mut spec = ReservoirSpec::box_backed(four);
        spec.increment = Increment::Ratio(int(4));
        assert_eq!(
            landauer_cost(&spec, "coins").unwrap().exact,
            Some(ratio(1, 2))
        );
        spec.increment = Increment::Ratio(int(3));
        let c = landauer_cost(&spec, "coins").unwrap();
        assert!(c.exact.is_none() && (c.approx - 0.630_929_753_571_457).abs() < 1e-12);
        spec.increment = Increment::Ratio(int(1));
        assert_eq!(landauer_cost(&spec, "coins"), Err(LedgerError::ZeroSigma));
    }

    #[test]
    fn aggregates() {
        let a = ensemble_aggregates(&bit(), "coins");
        assert!(a.mean_q.is_zero() && a.mean_s.is_zero());
        assert_eq!(a.shannon.as_rational(), Some(int(1)));
        let e = Ensemble::new(vec![t("b1"), t("b2")], vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        let a = ensemble_aggregates(&e, "coins");
        assert_eq!(a.mean_q, ratio(5, 3));
        assert_eq!(a.mean_s.as_rational(), Some(ratio(5, 3)));
        assert!(ensemble_aggregates(&Ensemble::certain(t("h")), "coins")
            .shannon
            .is_zero());
    }

    #[test]
    fn bit_erasure_attains_equality() {
        let spec = ReservoirSpec::basic_box();
        let src = bit();
        let dst = Ensemble::certain(t("r0"));
        let syn = synthesize_augmentation(&src, &dst, &spec, "coins").unwrap();
        assert_eq!(syn.src.levels, [(1, 0), (1, 0)]);
        assert_eq!(syn.dst.levels, [(0, 1)]);
        assert!(syn.exact);
        let r = work_information_bound(&src, &dst, (&syn.src, &syn.dst), &spec, "coins").unwrap();
        assert_eq!(r.dq_mu, int(-1));
        assert_eq!(r.dh.as_rational(), Some(int(-1)));
        assert_eq!(r.df.exact, Some(int(0)));
        assert!(r.satisfied && r.equality && r.exact);
        assert_eq!(r.direction, ProcessDirection::Forward);
        let (wa, wb) = r.weights.unwrap();
        assert_eq!(wa, wb);
    }

    #[test]
    fn dispense_attains_equality() {
        let spec = ReservoirSpec::basic_box();
        let src = Ensemble::certain(t("r0"));
        let dst = bit();
        let syn = synthesize_augmentation(&src, &dst, &spec, "coins").unwrap();
        let r = work_information_bound(&src, &dst, (&syn.src, &syn.dst), &spec, "coins").unwrap();
        assert_eq!(r.dq_mu, int(1));
        assert_eq!(r.dh.as_rational(), Some(int(1)));
        assert!(r.equality && r.satisfied);
    }

    #[test]
    fn identity_process_is_neutral() {
        let spec = ReservoirSpec::basic_box();
        let e = Ensemble::new(vec![t("h"), t("b1")], vec![ratio(1, 4), ratio(3, 4)]).unwrap();
        let syn = synthesize_augmentation(&e, &e, &spec, "coins").unwrap();
        let r = work_information_bound(&e, &e, (&syn.src, &syn.src), &spec, "coins").unwrap();
        assert!(r.dq_mu.is_zero() && r.dh.is_zero());
        assert!(r.equality);
    }

    #[test]
    fn lossy_process_is_reported_in_reverse() {
        let spec = ReservoirSpec::basic_box();
        let src = Ensemble::certain(t("r0"));
        let dst = bit();
        let aug_src = Augmentation {
            levels: vec![(0, 3)],
        };
        let aug_dst = Augmentation {
            levels: vec![(3, 0), (3, 0)],
        };
        let r = work_information_bound(&src, &dst, (&aug_src, &aug_dst), &spec, "coins").unwrap();
        assert_eq!(r.direction, ProcessDirection::Reverse);
        assert!(r.satisfied && !r.equality && r.lhs <= r.rhs);
    }

    #[test]
    fn inconsistent_levels_are_rejected() {
        let spec = ReservoirSpec::basic_box();
        let a = Augmentation {
            levels: vec![(0, 0), (1, 0)],
        };
        let b = Augmentation {
            levels: vec![(0, 0)],
        };
        let e = work_information_bound(
            &bit(),
            &Ensemble::certain(t("r0")),
            (&a, &b),
            &spec,
            "coins",
        );
        assert!(matches!(e, Err(LedgerError::Inconsistent(_))));
    }

    #[test]
    fn fine_ladder_matches_thirds() {
        let spec = ReservoirSpec::abstract_ladder(
            "th",
            t("h"),
            crate::term::ContentVector::zero(),
            Weight::one(),
            Increment::Bits(ratio(1, 16)),
        );
        let src = Ensemble::new(vec![t("r0"), t("r1")], vec![ratio(1, 3), ratio(2, 3)]).unwrap();
        let syn =
            synthesize_augmentation(&src, &Ensemble::certain(t("r0")), &spec, "coins").unwrap();
        for r in &syn.src_residuals {
            assert!(r.abs() <= 1.0 / 32.0 + 1e-12);
        }
        assert_eq!(syn.src.reservoir()[1] - syn.src.reservoir()[0], 16);
    }

    #[test]
    fn non_multiple_contents_are_infeasible() {
        let spec = ReservoirSpec::box_backed(CoinSet::new([t("(h+h)"), t("(t+t)")]).unwrap());
        let src = Ensemble::certain(t("h"));
        let dst = Ensemble::certain(t("(h+h)"));
        assert!(matches!(
            synthesize_augmentation(&src, &dst, &spec, "coins"),
            Err(LedgerError::Infeasible(_))
        ));
    }
}
