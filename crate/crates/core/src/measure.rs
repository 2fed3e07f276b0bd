//! Entropic probability and the ways of reshaping it.
//!
//! Probabilities are exact rationals. Entropies that are not rational are
//! carried as [`LogExpr`]s so that identities between them are decided
//! exactly; `f64` values are for display.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::logexpr::LogExpr;
use crate::rational::{self, Rational};
use crate::term::{
    combine, AbstractAtom, CoinSet, ContentVector, Eidostate, Term, TermError, Weight, COINS,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MeasureError {
    #[error("probabilities sum to {0}, not 1")]
    NotNormalized(String),
    #[error("probability of `{0}` is negative")]
    NegativeProbability(String),
    #[error("distribution mentions `{0}`, which is not in the eidostate")]
    SupportMismatch(String),
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("content gap {gap} of `{state}` is not a nonnegative whole number of `{unit}`")]
    NonIntegralGap {
        state: String,
        gap: String,
        unit: String,
    },
    #[error("augmented states collide at `{0}`")]
    Collision(String),
    #[error("augmented contents differ: {0}")]
    NonUniformResult(String),
    #[error("box-backed ladders have no level {0}")]
    NegativeLevel(i64),
    #[error("rung {0} of the ladder has an irrational weight")]
    IrrationalRung(i64),
    #[error("target probability of `{0}` is zero; no information state has zero records")]
    ZeroTarget(String),
    #[error("weight of `{0}` is not an integer")]
    NonIntegralWeight(String),
    #[error("the state list is empty")]
    Empty,
    #[error("`{0}` is not a mechanical state with nonzero content")]
    BadMechanical(String),
    #[error(transparent)]
    Term(#[from] TermError),
}

/// A probability for each state of an eidostate, in the eidostate's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distribution {
    entries: Vec<(Term, Rational)>,
}

impl Distribution {
    /// Entries must be nonnegative and sum to exactly 1.
    pub fn new(entries: Vec<(Term, Rational)>) -> Result<Self, MeasureError> {
        if let Some((t, _)) = entries.iter().find(|(_, p)| p.is_negative()) {
            return Err(MeasureError::NegativeProbability(t.to_string()));
        }
        let total: Rational = entries.iter().map(|(_, p)| p.clone()).sum();
        if !total.is_one() {
            return Err(MeasureError::NotNormalized(rational::format_rational(
                &total,
            )));
        }
        Ok(Self { entries })
    }

    /// Pairs the states of `e` with `probs` in order.
    pub fn on(e: &Eidostate, probs: &[Rational]) -> Result<Self, MeasureError> {
        if probs.len() != e.len() {
            return Err(MeasureError::LengthMismatch {
                expected: e.len(),
                found: probs.len(),
            });
        }
        Self::new(e.iter().cloned().zip(probs.iter().cloned()).collect())
    }

    pub fn entries(&self) -> &[(Term, Rational)] {
        &self.entries
    }

    pub fn probabilities(&self) -> Vec<Rational> {
        self.entries.iter().map(|(_, p)| p.clone()).collect()
    }

    pub fn get(&self, t: &Term) -> Option<&Rational> {
        self.entries.iter().find(|(s, _)| s == t).map(|(_, p)| p)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn shannon(&self) -> LogExpr {
        shannon(self.entries.iter().map(|(_, p)| p))
    }
}

impl fmt::Display for Distribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (t, p)) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{t}: {}", rational::Display(p))?;
        }
        Ok(())
    }
}

/// `H(p) = Σ p·log2(1/p)` over the nonzero entries.
pub fn shannon<'a>(probs: impl IntoIterator<Item = &'a Rational>) -> LogExpr {
    probs
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| LogExpr::scaled_log2(p.clone(), p.recip()))
        .sum()
}

/// `P(e) = weight(e) / weight(E)`.
pub fn entropic_probability(e: &Eidostate) -> Distribution {
    let total = e.weight().into_value();
    Distribution {
        entries: e
            .iter()
            .map(|t| (t.clone(), t.weight_ref().value() / &total))
            .collect(),
    }
}

/// Mean state entropy, Shannon entropy and total entropy of an eidostate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub mean_state_entropy: LogExpr,
    pub shannon: LogExpr,
    pub total: LogExpr,
}

impl Decomposition {
    /// Whether `mean + shannon = total` holds exactly.
    pub fn identity_holds(&self) -> bool {
        (self.mean_state_entropy.clone() + self.shannon.clone() - self.total.clone()).is_zero()
    }

    pub fn values(&self) -> (f64, f64, f64) {
        (
            self.mean_state_entropy.to_f64(),
            self.shannon.to_f64(),
            self.total.to_f64(),
        )
    }
}

pub fn entropy_decomposition(e: &Eidostate) -> Decomposition {
    let p = entropic_probability(e);
    let mean_state_entropy = e
        .iter()
        .zip(p.entries())
        .map(|(t, (_, pe))| LogExpr::scaled_log2(pe.clone(), t.weight().into_value()))
        .sum();
    Decomposition {
        mean_state_entropy,
        shannon: p.shannon(),
        total: LogExpr::log2(e.weight().into_value()),
    }
}

/// `S(E) - (⟨S⟩ + H)` under an alternative distribution on `E`; nonnegative,
/// and zero exactly for the entropic distribution.
pub fn gibbs_gap(e: &Eidostate, p_alt: &Distribution) -> Result<LogExpr, MeasureError> {
    if let Some((t, _)) = p_alt.entries().iter().find(|(t, _)| !e.contains(t)) {
        return Err(MeasureError::SupportMismatch(t.to_string()));
    }
    let mean: LogExpr = p_alt
        .entries()
        .iter()
        .filter(|(_, p)| !p.is_zero())
        .map(|(t, p)| LogExpr::scaled_log2(p.clone(), t.weight().into_value()))
        .sum();
    Ok(LogExpr::log2(e.weight().into_value()) - mean - p_alt.shannon())
}

/// Base states, what each was augmented with, and the resulting eidostate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedEidostate {
    pub base_states: Vec<Term>,
    pub augmentations: Vec<Option<Eidostate>>,
    pub assembled: Eidostate,
}

impl AugmentedEidostate {
    fn assemble(
        base_states: Vec<Term>,
        augmentations: Vec<Option<Eidostate>>,
    ) -> Result<Self, MeasureError> {
        if base_states.is_empty() {
            return Err(MeasureError::Empty);
        }
        let mut all = Vec::new();
        for (a, aug) in base_states.iter().zip(&augmentations) {
            match aug {
                Some(x) => all.extend(combine(&Eidostate::singleton(a.clone()), x).iter().cloned()),
                None => all.push(a.clone()),
            }
        }
        let count = all.len();
        let assembled = Eidostate::new(all).map_err(|e| match e {
            TermError::NonUniform { .. } => MeasureError::NonUniformResult(e.to_string()),
            other => MeasureError::Term(other),
        })?;
        if assembled.len() != count {
            return Err(MeasureError::Collision(assembled.to_string()));
        }
        Ok(Self {
            base_states,
            augmentations,
            assembled,
        })
    }

    /// Probability of each base state: the entropic weight of its augmented
    /// block over the total.
    pub fn distribution(&self) -> Distribution {
        let total = self.assembled.weight().into_value();
        let entries = self
            .base_states
            .iter()
            .zip(&self.augmentations)
            .map(|(a, aug)| {
                let w = match aug {
                    Some(x) => a.weight_ref().value() * x.weight().value(),
                    None => a.weight_ref().value().clone(),
                };
                (a.clone(), w / &total)
            })
            .collect();
        Distribution { entries }
    }

    pub fn weight(&self) -> Weight {
        self.assembled.weight()
    }
}

/// `μ + (μ + (... + μ))` with `n` copies.
pub fn mechanical_stack(mu: &Term, n: usize) -> Option<Term> {
    let mut t = (n > 0).then(|| mu.clone())?;
    for _ in 1..n {
        t = Term::pair(mu.clone(), t);
    }
    Some(t)
}

fn check_mechanical(mu: &Term) -> Result<(), MeasureError> {
    if mu.is_mechanical() && !mu.content_ref().is_zero() {
        Ok(())
    } else {
        Err(MeasureError::BadMechanical(mu.to_string()))
    }
}

/// Gaps `max - content(a)` as counts of `mu`; `None` entries are not whole.
fn mechanical_gaps(a: &[Term], mu: &Term) -> Result<Vec<usize>, MeasureError> {
    let unit = mu.content();
    let (component, step) = unit.components().next().expect("nonzero content");
    let level = |t: &Term| t.content_ref().get(component) / step;
    let top = a.iter().map(level).max().ok_or(MeasureError::Empty)?;
    let anchor = a
        .iter()
        .find(|t| level(t) == top)
        .expect("max exists")
        .content();
    a.iter()
        .map(|t| {
            let gap = anchor.sub(t.content_ref());
            let err = || MeasureError::NonIntegralGap {
                state: t.to_string(),
                gap: gap.to_string(),
                unit: unit.to_string(),
            };
            let k = gap.ratio_to(&unit).ok_or_else(err)?;
            if k.is_integer() && !k.is_negative() {
                k.to_integer().to_usize().ok_or_else(err)
            } else {
                Err(err())
            }
        })
        .collect()
}

/// Evens out contents with coin stacks.
pub fn uniformize_mechanical(a: &[Term]) -> Result<AugmentedEidostate, MeasureError> {
    uniformize_mechanical_with(a, &Term::heads())
}

/// Evens out contents with stacks of the mechanical state `mu`.
///
/// When `a + μ_g` coincides with another augmented or bare state, coin
/// stacks fall back to the same stack with leading faces flipped;
/// any mechanical filler of the right content gives the same weights.
pub fn uniformize_mechanical_with(
    a: &[Term],
    mu: &Term,
) -> Result<AugmentedEidostate, MeasureError> {
    check_mechanical(mu)?;
    let mut seen = std::collections::BTreeSet::new();
    if let Some(t) = a.iter().find(|t| !seen.insert(*t)) {
        return Err(MeasureError::Collision(t.to_string()));
    }
    let gaps = mechanical_gaps(a, mu)?;
    let mut used: std::collections::BTreeSet<Term> = a
        .iter()
        .zip(&gaps)
        .filter(|(_, &g)| g == 0)
        .map(|(t, _)| t.clone())
        .collect();
    let mut augs = Vec::with_capacity(a.len());
    for (t, &g) in a.iter().zip(&gaps) {
        if g == 0 {
            augs.push(None);
            continue;
        }
        let choice = filler_candidates(mu, g)
            .into_iter()
            .find(|m| !used.contains(&Term::pair(t.clone(), m.clone())))
            .ok_or_else(|| MeasureError::Collision(t.to_string()))?;
        used.insert(Term::pair(t.clone(), choice.clone()));
        augs.push(Some(Eidostate::singleton(choice)));
    }
    AugmentedEidostate::assemble(a.to_vec(), augs)
}

/// `μ_g` first; for a coin also the variants with `1..=g` leading faces
/// flipped.
fn filler_candidates(mu: &Term, g: usize) -> Vec<Term> {
    let stack = mechanical_stack(mu, g).expect("g >= 1");
    let flipped = if *mu == Term::heads() {
        Term::tails()
    } else if *mu == Term::tails() {
        Term::heads()
    } else {
        return vec![stack];
    };
    let mut out = vec![stack];
    for n in 1..=g {
        let mut t = if n == g { flipped.clone() } else { mu.clone() };
        for i in (0..g - 1).rev() {
            let leaf = if i < n { flipped.clone() } else { mu.clone() };
            t = Term::pair(leaf, t);
        }
        out.push(t);
    }
    out
}

/// Whether coin stacks can bring the two states to equal content.
pub fn adiabatically_possible(a: &Term, a2: &Term) -> bool {
    adiabatically_possible_with(a, a2, &Term::heads())
}

pub fn adiabatically_possible_with(a: &Term, a2: &Term, mu: &Term) -> bool {
    check_mechanical(mu).is_ok() && mechanical_gaps(&[a.clone(), a2.clone()], mu).is_ok()
}

/// Weight ratio between neighbouring rungs of a reservoir ladder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Increment {
    /// Ratio `b`, so `σ = log2 b`.
    Ratio(Rational),
    /// Entropy step `σ` itself, for ratios `2^σ` that are not rational.
    Bits(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// `θ_n = [K;n]`.
    BoxBacked(CoinSet),
    /// Declared states named `<name><n>` with content `content0 + n·Q(μ)`.
    Abstract {
        name: String,
        content0: ContentVector,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReservoirSpec {
    pub mu: Term,
    pub family: Family,
    pub increment: Increment,
    /// Weight of `θ_0`.
    pub w0: Weight,
}

impl ReservoirSpec {
    /// The basic boxes `b_n`, absorbing one coin per rung.
    pub fn basic_box() -> Self {
        Self::box_backed(CoinSet::basic())
    }

    pub fn box_backed(base: CoinSet) -> Self {
        let mu = Term::stack(base.coin_value() as usize).expect("coin sets hold coins");
        Self {
            mu,
            increment: Increment::Ratio(Rational::from_integer(BigInt::from(base.len()))),
            family: Family::BoxBacked(base),
            w0: Weight::one(),
        }
    }

    pub fn abstract_ladder(
        name: &str,
        mu: Term,
        content0: ContentVector,
        w0: Weight,
        increment: Increment,
    ) -> Self {
        Self {
            mu,
            family: Family::Abstract {
                name: name.to_string(),
                content0,
            },
            increment,
            w0,
        }
    }

    /// `σ = log2 b`.
    pub fn sigma(&self) -> LogExpr {
        match &self.increment {
            Increment::Ratio(b) => LogExpr::log2(b.clone()),
            Increment::Bits(s) => LogExpr::constant(s.clone()),
        }
    }

    /// `b` when it is rational.
    pub fn base(&self) -> Option<Rational> {
        match &self.increment {
            Increment::Ratio(b) => Some(b.clone()),
            Increment::Bits(s) if s.is_integer() => {
                Some(rational::pow(&rational::int(2), s.to_integer().to_i64()?))
            }
            Increment::Bits(_) => None,
        }
    }

    /// `b^n`, exact when rational.
    pub fn rung_factor(&self, n: i64) -> Option<Rational> {
        match &self.increment {
            Increment::Ratio(b) => Some(rational::pow(b, n)),
            Increment::Bits(s) => {
                let e = s * Rational::from_integer(BigInt::from(n));
                e.is_integer().then(|| {
                    rational::pow(&rational::int(2), e.to_integer().to_i64().expect("small"))
                })
            }
        }
    }

    /// `content(μ)[component]`.
    pub fn epsilon(&self, component: &str) -> Rational {
        self.mu.content_ref().get(component)
    }
}

/// The rung `θ_n`.
pub fn reservoir_state(spec: &ReservoirSpec, n: i64) -> Result<Term, MeasureError> {
    match &spec.family {
        Family::BoxBacked(base) => {
            let level = u32::try_from(n).map_err(|_| MeasureError::NegativeLevel(n))?;
            Ok(Term::boxed(base.clone(), level))
        }
        Family::Abstract { name, content0 } => {
            let factor = spec.rung_factor(n).ok_or(MeasureError::IrrationalRung(n))?;
            let weight = Weight::new(spec.w0.value() * factor).expect("positive");
            let content = content0.add(&spec.mu.content_ref().scale(&rational::int(n)));
            Ok(Term::abstract_atom(AbstractAtom {
                name: format!("{name}{n}"),
                content,
                weight,
                mechanical: false,
            })?)
        }
    }
}

/// Attaches `θ_(n_a)` to each state and returns the induced distribution.
pub fn uniformize_reservoir(
    a: &[Term],
    spec: &ReservoirSpec,
    levels: &[i64],
) -> Result<(AugmentedEidostate, Distribution), MeasureError> {
    if levels.len() != a.len() {
        return Err(MeasureError::LengthMismatch {
            expected: a.len(),
            found: levels.len(),
        });
    }
    let augs = levels
        .iter()
        .map(|&n| reservoir_state(spec, n).map(|t| Some(Eidostate::singleton(t))))
        .collect::<Result<Vec<_>, _>>()?;
    let aug = AugmentedEidostate::assemble(a.to_vec(), augs)?;
    let dist = aug.distribution();
    Ok((aug, dist))
}

/// Result of matching a target distribution with information-state contexts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tuning {
    pub augmented: AugmentedEidostate,
    /// Total weight of the tuned eidostate.
    pub n: BigInt,
    /// Records attached to each state.
    pub counts: Vec<BigInt>,
}

/// Attaches `I_(n_k)` to each `e_k` so the entropic probabilities equal
/// `target`, using the least total `N`.
pub fn tune_context(e: &Eidostate, target: &[Rational]) -> Result<Tuning, MeasureError> {
    let dist = Distribution::on(e, target)?;
    let mut ratios = Vec::with_capacity(e.len());
    for (t, p) in dist.entries() {
        if p.is_zero() {
            return Err(MeasureError::ZeroTarget(t.to_string()));
        }
        let w = t.weight_ref().value();
        if !w.is_integer() {
            return Err(MeasureError::NonIntegralWeight(t.to_string()));
        }
        ratios.push(p / w);
    }
    let n = ratios
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let counts: Vec<BigInt> = ratios
        .iter()
        .map(|r| (r * Rational::from_integer(n.clone())).to_integer())
        .collect();
    let augs = counts
        .iter()
        .map(|c| {
            let k = c.to_usize().expect("record count fits in memory");
            Eidostate::information(k).map(Some)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let augmented = AugmentedEidostate::assemble(e.iter().cloned().collect(), augs)?;
    Ok(Tuning {
        augmented,
        n,
        counts,
    })
}

/// Coins in a coin-box content vector.
pub fn coins(c: &ContentVector) -> Rational {
    c.get(COINS)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::{parse_eidostate, parse_term, Declarations};
    use crate::rational::{int, ratio};

    fn e(s: &str) -> Eidostate {
        parse_eidostate(s, &Declarations::default()).unwrap()
    }

    fn t(s: &str) -> Term {
        parse_term(s, &Declarations::default()).unwrap()
    }

    #[test]
    fn entropic_probability_examples() {
        assert_eq!(
            entropic_probability(&e("{h,t}")).probabilities(),
            [ratio(1, 2), ratio(1, 2)]
        );
        let a = e("{(h+b1),(t+b1),((h+t)+b0)}");
        let p = entropic_probability(&a);
        assert_eq!(p.get(&t("(h+b1)")), Some(&ratio(2, 5)));
        assert_eq!(p.get(&t("((h+t)+b0)")), Some(&ratio(1, 5)));
        let b = e("{(b3+s3),(b4+s2)}");
        let p = entropic_probability(&b);
        assert_eq!(p.get(&t("(b3+s3)")), Some(&ratio(1, 3)));
    }

    #[test]
    fn decomposition_examples() {
        let d = entropy_decomposition(&e("{h,t}"));
        assert!(d.identity_holds());
        assert_eq!(d.shannon.as_rational(), Some(int(1)));
        let d = entropy_decomposition(&e("{(h+b1),(t+b1),((h+t)+b0)}"));
        assert!(d.identity_holds());
        assert_eq!(d.mean_state_entropy.as_rational(), Some(ratio(4, 5)));
        let expected = LogExpr::log2(int(5)) - LogExpr::constant(ratio(4, 5));
        assert!((d.shannon.clone() - expected).is_zero());
        let d = entropy_decomposition(&e("b0"));
        assert!(d.total.is_zero() && d.shannon.is_zero());
    }

    #[test]
    fn gibbs_gap_examples() {
        let ht = e("{h,t}");
        let gap = gibbs_gap(&ht, &entropic_probability(&ht)).unwrap();
        assert!(gap.is_zero());
        let skew = Distribution::on(&ht, &[ratio(1, 4), ratio(3, 4)]).unwrap();
        let gap = gibbs_gap(&ht, &skew).unwrap();
        assert!((gap.to_f64() - 0.188_721_875_540_867).abs() < 1e-12);
        let sure = Distribution::on(&ht, &[int(1), int(0)]).unwrap();
        assert_eq!(gibbs_gap(&ht, &sure).unwrap().as_rational(), Some(int(1)));
        let foreign = Distribution::new(vec![(t("r0"), int(1))]).unwrap();
        assert!(matches!(
            gibbs_gap(&ht, &foreign),
            Err(MeasureError::SupportMismatch(_))
        ));
    }

    #[test]
    fn mechanical_uniformization() {
        let u = uniformize_mechanical(&[t("b4"), t("b5")]).unwrap();
        assert_eq!(u.weight(), Weight::from_int(48));
        assert_eq!(u.distribution().probabilities(), [ratio(1, 3), ratio(2, 3)]);
        let u = uniformize_mechanical(&[t("h")]).unwrap();
        assert_eq!(u.augmentations, [None]);
        let u = uniformize_mechanical(&[t("h"), t("s3")]).unwrap();
        assert_eq!(u.augmentations[0], Some(e("(t+h)")));
        assert_eq!(u.weight(), Weight::from_int(2));
        assert_eq!(u.distribution().probabilities(), [ratio(1, 2), ratio(1, 2)]);
    }

    #[test]
    fn adiabatic_possibility() {
        assert!(adiabatically_possible(&t("h"), &t("t")));
        assert!(adiabatically_possible(&t("b1"), &t("s5")));
        let atom = |name: &str, x: Rational, mech: bool| {
            Term::abstract_atom(AbstractAtom {
                name: name.into(),
                content: ContentVector::single("x", x),
                weight: Weight::one(),
                mechanical: mech,
            })
            .unwrap()
        };
        let mu = atom("mu", int(1), true);
        let half = atom("a", ratio(1, 2), false);
        let zero = Term::abstract_atom(AbstractAtom {
            name: "z".into(),
            content: ContentVector::zero(),
            weight: Weight::one(),
            mechanical: false,
        })
        .unwrap();
        assert!(!adiabatically_possible_with(&half, &zero, &mu));
        assert!(adiabatically_possible_with(
            &atom("c", int(3), false),
            &zero,
            &mu
        ));
    }

    #[test]
    fn reservoir_examples() {
        let spec = ReservoirSpec::basic_box();
        let b3 = reservoir_state(&spec, 3).unwrap();
        assert_eq!(b3, t("b3"));
        assert_eq!(b3.weight(), Weight::from_int(8));
        assert_eq!(
            reservoir_state(&spec, -1),
            Err(MeasureError::NegativeLevel(-1))
        );
        let (aug, p) =
            uniformize_reservoir(&[t("h"), t("t"), t("(h+t)")], &spec, &[1, 1, 0]).unwrap();
        assert_eq!(aug.weight(), Weight::from_int(5));
        assert_eq!(p.probabilities(), [ratio(2, 5), ratio(2, 5), ratio(1, 5)]);
        let mech = ReservoirSpec::abstract_ladder(
            "mu",
            t("h"),
            ContentVector::zero(),
            Weight::one(),
            Increment::Ratio(int(1)),
        );
        for n in -3..4 {
            assert!(reservoir_state(&mech, n).unwrap().weight().is_one());
        }
    }

    #[test]
    fn fine_ladder_rungs() {
        let spec = ReservoirSpec::abstract_ladder(
            "th",
            t("h"),
            ContentVector::zero(),
            Weight::one(),
            Increment::Bits(ratio(1, 16)),
        );
        assert_eq!(
            reservoir_state(&spec, 32).unwrap().weight(),
            Weight::from_int(4)
        );
        assert_eq!(
            reservoir_state(&spec, 3),
            Err(MeasureError::IrrationalRung(3))
        );
    }

    #[test]
    fn tuning_examples() {
        let r = tune_context(&e("{h,t}"), &[ratio(1, 3), ratio(2, 3)]).unwrap();
        assert_eq!(r.n, BigInt::from(3));
        assert_eq!(r.counts, [BigInt::from(1), BigInt::from(2)]);
        assert_eq!(r.augmented.assembled.weight(), Weight::from_int(3));
        let r = tune_context(&e("{h,t}"), &[ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(
            (r.n, r.counts),
            (BigInt::from(2), vec![BigInt::from(1), BigInt::from(1)])
        );
        let r = tune_context(&e("{(h+b1),((h+t)+b0)}"), &[ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(r.n, BigInt::from(4));
        let p = entropic_probability(&r.augmented.assembled);
        let first: Rational = p
            .entries()
            .iter()
            .filter(|(s, _)| s.as_pair().unwrap().0 == &t("(h+b1)"))
            .map(|(_, p)| p.clone())
            .sum();
        assert_eq!(first, ratio(1, 2));
        assert!(matches!(
            tune_context(&e("{h,t}"), &[int(1), int(0)]),
            Err(MeasureError::ZeroTarget(_))
        ));
    }
}
